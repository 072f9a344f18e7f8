#include <doctest.h>

#include <random>

#include "stabletrace/arthurphi.hpp"

using namespace stabletrace;

namespace {

std::map<std::string, Rat> table(GroupKind kind, ParameterData p, int z) {
  std::map<std::string, Rat> out;
  for (const auto& r : phi_levi_table(GroupCatalog::builtin(), kind, p, z)) out[r.levi] = r.value;
  return out;
}

}  // namespace

TEST_CASE("Phi tables at (5, 3)") {
  auto g = table(GroupKind::gsp4, {5, 3, 0, 0}, 1);
  CHECK(g["G"] == Rat(10));
  CHECK(g["M1"] == Rat(4));
  CHECK(g["M2"] == Rat(6));
  CHECK(g["A"] == Rat(-8));
  auto h = table(GroupKind::h, {5, 3, 0, 0}, 1);
  CHECK(h["H"] == Rat(30));
  CHECK(h["M1_H"] == Rat(-16));
  CHECK(h["M2_H"] == Rat(-16));
  CHECK(h["A_H"] == Rat(8));
  auto s = table(GroupKind::sl2, {0, 0, 0, 11}, 1);
  CHECK(s["G"] == Rat(11));
  CHECK(s["A"] == Rat(-2));
}

TEST_CASE("single H weights") {
  const PhiTable t(GroupCatalog::builtin(), GroupKind::h);
  for (auto v : {WeightVariant::standard, WeightVariant::swapped}) {
    const auto rows = t.evaluate_member({5, 3, 0, 0}, 1, v);
    CHECK(rows[0].value == Rat(15));
  }
  const auto m = t.evaluate_member({5, 3, 0, 0}, 1, WeightVariant::standard);
  const auto s = t.evaluate_member({5, 3, 0, 0}, 1, WeightVariant::swapped);
  CHECK(m[1].value + s[1].value == Rat(-16));
  // M1_H for one weight and M2_H for the other are both -2a
  CHECK(m[1].value == Rat(-10));
  CHECK(s[2].value == Rat(-10));
}

TEST_CASE("Phi_G(1) is the dimension and Phi_A(z) is (-1)^q |Omega| lambda_0(z)") {
  const auto& cat = GroupCatalog::builtin();
  const auto& d = cat.datum("gsp4");
  const PhiTable t(cat, GroupKind::gsp4);
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> half(1, 12), tt(-5, 5);
  for (int i = 0; i < 20; ++i) {
    const long b = 2 * half(rng) - 1;
    const long a = b + 2 * half(rng);
    const ParameterData p{a, b, 2 * tt(rng), 0};
    const auto hw = highest_weight_from_parameter(GroupKind::gsp4, d, p);
    for (int z : {1, -1}) {
      const auto rows = t.evaluate(p, z);
      const Rat lambda0 = (z == -1 && hw.central_exponent % 2) ? Rat(-1) : Rat(1);
      CHECK(rows[0].value == lambda0 * weyl_dim(d, hw.lambda));
      CHECK(rows[3].value == Rat(-8) * lambda0);
      CHECK(rows[1].value == lambda0 * Rat(2 * (a - b)));
      CHECK(rows[2].value == lambda0 * Rat(2 * b));
    }
  }
  const PhiTable s(cat, GroupKind::sl2);
  for (long n = 1; n <= 20; ++n)
    for (int z : {1, -1}) {
      const Rat lambda0 = (z == -1 && (n - 1) % 2) ? Rat(-1) : Rat(1);
      const auto rows = s.evaluate({0, 0, 0, n}, z);
      CHECK(rows[0].value == lambda0 * Rat(n));
      CHECK(rows[1].value == Rat(-2) * lambda0);
    }
}

TEST_CASE("Levi dimensions for GSp4") {
  const auto& cat = GroupCatalog::builtin();
  const auto& d = cat.datum("gsp4");
  const auto m1 = prepare_levi(d, builtin::gsp4_levi_m1());
  const auto m2 = prepare_levi(d, builtin::gsp4_levi_m2());
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> half(1, 15);
  for (int i = 0; i < 20; ++i) {
    const long b = 2 * half(rng) - 1;
    const long a = b + 2 * half(rng);
    const auto lam = highest_weight_from_parameter(GroupKind::gsp4, d, {a, b, 0, 0}).lambda;
    CHECK(weyl_dim(m1.m, lam) == Rat(b));
    CHECK(weyl_dim(m2.m, lam) == Rat((a - b) / 2));
  }
  CHECK(m1.q_l == 1);
  CHECK(m1.omega_l == 2);
}

TEST_CASE("elliptic Phi reduces to the trace") {
  const auto& d = GroupCatalog::builtin().datum("sl2");
  const auto pl = prepare_levi(d, builtin::sl2_levi_g());
  for (long n = 1; n <= 12; ++n) {
    const auto hw = highest_weight_from_parameter(GroupKind::sl2, d, {0, 0, 0, n});
    CHECK(phi(pl, hw.lambda, builtin::sl2_gamma4(), 0) ==
          Rat(trace_at_torsion(d, hw.lambda, builtin::sl2_gamma4())));
  }
  PhiRequest req{&d, builtin::sl2_levi_a(), d.weight(IVec{4}), CentralSign{1}, 4};
  CHECK(phi(req) == Rat(-2));
  CHECK_THROWS_AS(phi(PhiRequest{}), DatumError);
}
