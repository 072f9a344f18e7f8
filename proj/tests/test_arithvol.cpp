#include <doctest.h>

#include "stabletrace/catalog.hpp"

using namespace stabletrace;

TEST_CASE("Harder's Bernoulli formula") {
  CHECK(chi_alg_chevalley({1}, 1) == Rat(Int(-1), Int(12)));
  CHECK(chi_alg_chevalley({1, 3}, 2) == Rat(Int(-1), Int(1440)));
  // zeta(-1) zeta(-3) = (-1/12)(1/120)
  CHECK(chi_alg_chevalley({1, 3}, 2) == Rat(Int(-1), Int(12)) * Rat(Int(1), Int(120)));
  CHECK(chi_alg_chevalley({1}, 1) * chi_alg_chevalley({1}, 1) / Rat(2) == Rat(Int(1), Int(288)));
  CHECK_THROWS_AS(chi_alg_chevalley({}, 1), ProfileError);
  CHECK_THROWS_AS(chi_alg_chevalley({0}, 1), ProfileError);
}

TEST_CASE("torus Euler characteristics") {
  CHECK(chi_torus(1, 2) == Rat(Int(1), Int(2)));
  CHECK(chi_torus(1, 4) == Rat(Int(1), Int(4)));
  CHECK(chi_torus(1, 6) == Rat(Int(1), Int(6)));
  CHECK_THROWS_AS(chi_torus(0, 2), ProfileError);
}

TEST_CASE("chi_K of the reference groups") {
  using namespace builtin_profiles;
  CHECK(chi_k(gm()) == Rat(Int(1), Int(2)));
  CHECK(chi_k(sl2()) == Rat(Int(-1), Int(12)));
  CHECK(chi_k(sp4()) == Rat(Int(-1), Int(1440)));
  CHECK(chi_k(gl2()) == Rat(Int(-1), Int(24)));
  CHECK(chi_k(gsp4()) == Rat(Int(-1), Int(2880)));
  CHECK(chi_k(pgl2()) == Rat(Int(-1), Int(12)));
  CHECK(chi_k(h()) == Rat(Int(1), Int(288)));
  CHECK(chi_k(t_gaussian()) == Rat(Int(1), Int(4)));
  CHECK(chi_k(t_eisenstein()) == Rat(Int(1), Int(6)));
  // derived simply connected: halving against chi_alg of the derived group
  CHECK(chi_k(gl2()) == chi_alg_chevalley({1}, 1) / Rat(2));
  CHECK(chi_k(gsp4()) == chi_alg_chevalley({1, 3}, 2) / Rat(2));
}

TEST_CASE("unsupported chi case") {
  ChiInputs in;
  in.kind = ChiCase::general;
  CHECK_THROWS_AS(chi_k(in), ProfileError);
  for (auto c : {ChiCase::torus, ChiCase::simply_connected, ChiCase::derived_sc, ChiCase::isogeny, ChiCase::general})
    CHECK(chi_case_from_string(to_string(c)) == c);
  CHECK_THROWS_AS(chi_case_from_string("adelic"), ProfileError);
}

TEST_CASE("profile constants") {
  const auto g = builtin_profiles::gsp4();
  CHECK(g.levis.front().levi.name == "G");
  CHECK(g.levi("M1").n_gm == 2);
  CHECK(g.levi_index("A") == 3);
  CHECK_THROWS_AS(g.levi("M3"), ProfileError);
  CHECK(g.weyl_exponents() == std::vector<int>{1, 3});
  CHECK(g.endoscopic.front().iota == Rat(Int(1), Int(4)));
  // Levi chi values are products of their factors' chi
  CHECK(g.levi("M1").chi_k == chi_k(builtin_profiles::gl2()) * chi_k(builtin_profiles::gm()));
  CHECK(g.levi("A").chi_k == pow(chi_k(builtin_profiles::gm()), 3));
}

TEST_CASE("reference catalog audit is clean") {
  CHECK(GroupCatalog::builtin().audit().empty());
  GroupCatalog c;
  auto g = builtin_profiles::gsp4();
  g.d_const = 3;
  c.add(g, builtin::gsp4());
  c.add(builtin_profiles::h(), builtin::h());
  const auto problems = c.audit();
  REQUIRE(problems.size() >= 1);
  CHECK(problems.front().find("|Omega|") != std::string::npos);
}
