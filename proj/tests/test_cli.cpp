#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "stabletrace/report.hpp"

using stabletrace::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("classical dimension helper") {
  using stabletrace::cli::classical_cusp_dimension;
  CHECK(classical_cusp_dimension(2) == 0);
  CHECK(classical_cusp_dimension(12) == 1);
  CHECK(classical_cusp_dimension(14) == 0);
  CHECK(classical_cusp_dimension(24) == 2);
  CHECK(classical_cusp_dimension(26) == 1);
  CHECK(classical_cusp_dimension(13) == 0);
}

TEST_CASE("chi") {
  const auto r = call({"chi", "--group", "gsp4", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "group,case,chi_K\ngsp4,derived_sc,-1/2880\n");
}

TEST_CASE("sl2-mult range as CSV") {
  const auto r = call({"--format", "csv", "sl2-mult", "--n", "11..23"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("n,value,regular\n11,1,yes\n12,0,yes\n", 0) == 0);
  CHECK(r.out.find("\n23,2,yes\n") != std::string::npos);
}

TEST_CASE("sl2-mult JSON parses back") {
  const auto r = call({"sl2-mult", "--n", "1", "--format", "json"});
  CHECK(r.code == 0);
  const auto d = stabletrace::document_from_json(r.out);
  REQUIRE(d.reports.size() == 1);
  CHECK(d.reports[0].total == stabletrace::Rat(-1));
  CHECK(d.reports[0].flags.size() == 1);
}

TEST_CASE("gsp4-central") {
  const auto r = call({"gsp4-central", "--a", "5", "--b", "3", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.find("5,3,7/288,-1/96,1/72,5/144,1/72,13/72") != std::string::npos);
  const auto p = call({"gsp4-central", "--a", "5", "--b", "3", "--member", "pi_G'", "--format", "csv"});
  CHECK(p.out.find("5,3,7/288,1/96,") != std::string::npos);
  const auto grid = call({"gsp4-central", "--a", "3..9", "--b", "1..9", "--format", "csv"});
  CHECK(grid.code == 0);
  // 1 + 2 + 3 + 4 odd pairs with a > b
  size_t lines = 0;
  for (char c : grid.out) lines += c == '\n';
  CHECK(lines == 11);
}

TEST_CASE("verify subcommands") {
  const auto hol = call({"verify", "theorem1", "--a-max", "21", "--identity", "hol"});
  CHECK(hol.code == 0);
  CHECK(hol.out.find("OK: 0 counterexamples") != std::string::npos);
  const auto both = call({"verify", "theorem1", "--a-max", "21"});
  CHECK(both.code == 1);
  CHECK(both.out.find("FAIL: 55 counterexamples") != std::string::npos);
  const auto perturbed = call({"verify", "theorem1", "--a-max", "9", "--perturb", "--identity", "hol"});
  CHECK(perturbed.code == 1);
  CHECK(call({"verify", "sl2", "--n-max", "29"}).code == 0);
  CHECK(call({"verify", "chi"}).code == 0);
}

TEST_CASE("groups") {
  const auto check = call({"groups", "--check"});
  CHECK(check.code == 0);
  CHECK(check.out.find("OK: 0 problems in 9 files") != std::string::npos);
  const auto emit = call({"groups", "--emit", "sl2"});
  CHECK(emit.code == 0);
  CHECK(emit.out.find("roots = (2) (-2)") != std::string::npos);
  CHECK(call({"groups", "--emit", "e8"}).code == 2);
}

TEST_CASE("dims and phi") {
  const auto d = call({"dims", "--group", "gsp4", "--a", "5", "--b", "3", "--format", "csv"});
  CHECK(d.out == "a,b,t,dim\n5,3,0,10\n");
  const auto p = call({"phi", "--group", "gsp4", "--a", "5", "--b", "3", "--format", "csv"});
  CHECK(p.out == "a,b,t,z,levi,phi\n5,3,0,1,G,10\n5,3,0,1,M1,4\n5,3,0,1,M2,6\n5,3,0,1,A,-8\n");
  const auto ph = call({"phi", "--group", "h", "--a", "5", "--b", "3", "--z", "-1", "--format", "csv"});
  CHECK(ph.code == 0);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"chi", "--bogus"}).code == 2);
  CHECK(call({"sl2-mult", "--n", "3..x"}).code == 2);
  CHECK(call({"sl2-mult", "--n", "9..3"}).code == 2);
  CHECK(call({"gsp4-central", "--a", "4", "--b", "2"}).code == 2);
  CHECK(call({"gsp4-central", "--a", "5", "--b", "3", "--t", "1"}).code == 2);
  CHECK(call({"--format", "xml", "chi"}).code == 2);
  CHECK(call({"verify", "theorem1", "--a-max", "1"}).code == 2);
  CHECK(call({"--data", "/nonexistent", "chi"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}
