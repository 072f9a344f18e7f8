#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "stabletrace/groupdef.hpp"

using namespace stabletrace;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path data_dir() { return STABLETRACE_TEST_DATA_DIR; }
fs::path corpus_dir() { return STABLETRACE_TEST_CORPUS_DIR; }

}  // namespace

TEST_CASE("shipped files round-trip byte for byte") {
  size_t count = 0;
  for (const auto& e : fs::directory_iterator(data_dir())) {
    if (e.path().extension() != ".grp") continue;
    ++count;
    const std::string text = slurp(e.path());
    const GroupDefFile def = parse_groupdef(text, e.path().string());
    CHECK_MESSAGE(emit_groupdef(def) == text, e.path().string());
    CHECK(emit_groupdef(parse_groupdef(emit_groupdef(def))) == text);
    CHECK(def.profile.name == e.path().stem().string());
  }
  CHECK(count == 9);
}

TEST_CASE("shipped sl2 and gsp4") {
  const auto sl2 = load_groupdef(data_dir() / "sl2.grp");
  const auto d = sl2.datum();
  REQUIRE(d.has_value());
  CHECK(d->roots() == std::vector<IVec>{{2}, {-2}});
  CHECK(d->coroots() == std::vector<IVec>{{1}, {-1}});
  const auto gsp4 = load_groupdef(data_dir() / "gsp4.grp");
  REQUIRE(gsp4.lattice.has_value());
  CHECK(gsp4.lattice->rank == 4);
  CHECK(gsp4.lattice->char_relations == std::vector<IVec>{{1, -1, -1, 1}});
  CHECK(gsp4.header.size() >= 1);
}

TEST_CASE("loaded catalog matches the reference catalog") {
  const LoadedCatalog lc = load_catalog(data_dir());
  CHECK(lc.problems.empty());
  CHECK(lc.catalog.names() == GroupCatalog::builtin().names());
  for (const auto& n : lc.catalog.names())
    CHECK(profile_differences(lc.catalog.profile(n), GroupCatalog::builtin().profile(n)).empty());
  for (const auto& n : GroupCatalog::builtin().names())
    CHECK(emit_groupdef(groupdef_from_catalog(GroupCatalog::builtin(), n)) ==
          emit_groupdef([&] {
            GroupDefFile f = lc.definitions.at(n);
            f.header.clear();
            f.chi_from.clear();
            return f;
          }()));
}

TEST_CASE("seeded errors give line-addressed diagnostics") {
  size_t count = 0;
  for (const auto& e : fs::directory_iterator(corpus_dir())) {
    if (e.path().extension() != ".grp") continue;
    ++count;
    const std::string text = slurp(e.path());
    // first line: "# expect: <line> <message fragment>"
    std::istringstream first(text.substr(0, text.find('\n')));
    std::string hash, tag, fragment;
    size_t line = 0;
    first >> hash >> tag >> line;
    std::getline(first >> std::ws, fragment);
    bool threw = false;
    try {
      (void)parse_groupdef(text, e.path().filename().string());
    } catch (const ParseError& err) {
      threw = true;
      CHECK_MESSAGE(err.line() == line, e.path().filename().string() << ": " << err.what());
      CHECK_MESSAGE(err.message().find(fragment) != std::string::npos, err.what());
      CHECK(std::string(err.what()).rfind(e.path().filename().string() + ":" + std::to_string(line) + ":", 0) == 0);
    }
    CHECK_MESSAGE(threw, e.path().string());
  }
  CHECK(count >= 10);
}

TEST_CASE("structural errors") {
  CHECK_THROWS_AS(parse_groupdef(""), ParseError);
  CHECK_THROWS_AS(parse_groupdef("[profile]\nname = x\nchi_case = torus\n"), ParseError);
  CHECK_THROWS_AS(parse_groupdef("[lattice]\nrank = 1\n[profile]\nname = x\nchi_case = torus\n[levi G]\nimaginary = ()\n"
                                 "real = ()\ndim_a = 0\nn = 1\nk = 1\nd = 1\nchi = 1\n"),
                  ParseError);
  try {
    parse_groupdef("[profile]\nname = x\n\n[levi G]\nimaginary = ()\n");
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.message().find("missing key 'chi_case'") != std::string::npos);
    CHECK(e.line() == 1);
  }
}

TEST_CASE("notes with quotes survive") {
  GroupDefFile def = load_groupdef(data_dir() / "gm.grp");
  def.profile.note = "a \"quoted\" \\ note";
  const std::string text = emit_groupdef(def);
  CHECK(parse_groupdef(text).profile.note == def.profile.note);
  CHECK(emit_groupdef(parse_groupdef(text)) == text);
}

TEST_CASE("chi_from cross-check and data directory override") {
  const fs::path tmp = fs::temp_directory_path() / "stabletrace_groupdef_test";
  fs::remove_all(tmp);
  fs::create_directories(tmp);
  for (const char* n : {"gm", "sl2", "t_gaussian"}) fs::copy_file(data_dir() / (std::string(n) + ".grp"), tmp / (std::string(n) + ".grp"));
  {
    std::string text = slurp(tmp / "sl2.grp");
    const auto pos = text.find("chi = 1/2");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 9, "chi = 1/3");
    std::ofstream(tmp / "sl2.grp", std::ios::binary) << text;
  }
  const LoadedCatalog lc = load_catalog(tmp);
  bool chi_from_flagged = false;
  for (const auto& p : lc.problems) chi_from_flagged |= p.find("chi_K(gm)") != std::string::npos;
  CHECK(chi_from_flagged);
  setenv("STABLE_TRACE_DATA", tmp.c_str(), 1);
  CHECK(default_data_dir() == tmp);
  unsetenv("STABLE_TRACE_DATA");
  CHECK(default_data_dir() != tmp);
  fs::remove_all(tmp);
}
