#include "stabletrace/arithvol.hpp"

namespace stabletrace {

const char* to_string(ChiCase c) {
  switch (c) {
    case ChiCase::torus: return "torus";
    case ChiCase::simply_connected: return "simply_connected";
    case ChiCase::derived_sc: return "derived_sc";
    case ChiCase::isogeny: return "isogeny";
    case ChiCase::general: return "general";
  }
  return "?";
}

ChiCase chi_case_from_string(const std::string& s) {
  for (ChiCase c : {ChiCase::torus, ChiCase::simply_connected, ChiCase::derived_sc, ChiCase::isogeny,
                    ChiCase::general})
    if (s == to_string(c)) return c;
  throw ProfileError("unknown chi case '" + s + "'");
}

const LeviProfile& GroupProfile::levi(const std::string& n) const { return levis.at(levi_index(n)); }

size_t GroupProfile::levi_index(const std::string& n) const {
  for (size_t i = 0; i < levis.size(); ++i)
    if (levis[i].levi.name == n) return i;
  throw ProfileError("group '" + name + "' has no Levi named '" + n + "'");
}

std::vector<int> GroupProfile::weyl_exponents() const {
  std::vector<int> out;
  for (const auto& f : chi.factors) out.insert(out.end(), f.exponents.begin(), f.exponents.end());
  return out;
}

Rat chi_alg_chevalley(const std::vector<int>& exponents, long omega_r_order) {
  if (exponents.empty()) throw ProfileError("Chevalley factor needs at least one exponent");
  if (omega_r_order <= 0) throw ProfileError("real Weyl group order must be positive");
  Rat value = pow(Rat(-1, 2), static_cast<long>(exponents.size())) / Rat(omega_r_order);
  for (int m : exponents) {
    if (m <= 0) throw ProfileError("Weyl exponents must be positive");
    value *= bernoulli(static_cast<unsigned>(m + 1));
  }
  return value;
}

Rat chi_torus(long double_coset_count, long rational_torsion_in_k) {
  if (double_coset_count <= 0 || rational_torsion_in_k <= 0)
    throw ProfileError("torus class count and torsion order must be positive");
  return Rat(double_coset_count) / Rat(rational_torsion_in_k);
}

Rat chi_k(const ChiInputs& in) {
  auto chevalley = [&] {
    if (in.factors.empty()) throw ProfileError("chi case needs at least one Chevalley factor");
    Rat v(1);
    for (const auto& f : in.factors) v *= chi_alg_chevalley(f.exponents, f.omega_r);
    return v;
  };
  if (in.component_index <= 0 || in.unit_torsion <= 0 || in.kernel_order <= 0 || in.class_count <= 0)
    throw ProfileError("chi indices must be positive");
  switch (in.kind) {
    case ChiCase::torus: return chi_torus(in.class_count, in.unit_torsion);
    case ChiCase::simply_connected: return chevalley() / Rat(in.component_index);
    case ChiCase::derived_sc:
      return Rat(in.class_count) / Rat(in.component_index * in.unit_torsion) * chevalley();
    case ChiCase::isogeny: return Rat(in.kernel_order) / Rat(in.component_index) * chevalley();
    case ChiCase::general: break;
  }
  throw ProfileError(
      "chi_K for case 'general' needs strong-approximation and class-set indices that are not "
      "modelled; use torus, simply_connected, derived_sc or isogeny");
}

Rat chi_k(const GroupProfile& profile) { return chi_k(profile.chi); }

namespace builtin_profiles {

namespace {

LeviProfile whole(const GroupProfile& g, LeviDescriptor levi) {
  LeviProfile l;
  l.levi = std::move(levi);
  l.n_gm = 1;
  l.k = g.k_const;
  l.d = g.d_const;
  l.chi_k = chi_k(g);
  return l;
}

LeviProfile proper(LeviDescriptor levi, long n_gm, long k, long d, Rat chi, std::string note) {
  LeviProfile l;
  l.levi = std::move(levi);
  l.n_gm = n_gm;
  l.k = k;
  l.d = d;
  l.chi_k = std::move(chi);
  l.note = std::move(note);
  return l;
}

GroupProfile torus(std::string name, long torsion, Rat tamagawa, std::string note) {
  GroupProfile g;
  g.name = std::move(name);
  g.tamagawa = std::move(tamagawa);
  g.chi = {ChiCase::torus, {}, 1, torsion, 1, 1};
  g.levis.push_back(whole(g, {"G", {}, {}, 0}));
  g.note = std::move(note);
  return g;
}

}  // namespace

GroupProfile gm() { return torus("gm", 2, Rat(1), "split rank-one torus, K = integral points"); }

GroupProfile t_gaussian() {
  return torus("t_gaussian", 4, Rat(2), "norm-one torus of Q(i); class number 1, |T(Z)| = 4");
}

GroupProfile t_eisenstein() {
  return torus("t_eisenstein", 6, Rat(2), "norm-one torus of Q(sqrt(-3)); class number 1, |T(Z)| = 6");
}

GroupProfile sl2() {
  GroupProfile g;
  g.name = "sl2";
  g.k_const = 2;
  g.d_const = 2;
  g.omega_r_order = 1;
  g.chi = {ChiCase::simply_connected, {{{1}, 1}}, 1, 1, 1, 1};
  g.levis.push_back(whole(g, builtin::sl2_levi_g()));
  g.levis.push_back(proper(builtin::sl2_levi_a(), 2, 1, 1, Rat(1, 2), "diagonal split torus, isomorphic to Gm"));
  g.endoscopic.push_back({"t_gaussian", Rat(1, 2), 1,
                          "transfers vanish at full level since the torus ramifies at 2"});
  g.note = "compact maximal torus; packets have two members";
  return g;
}

GroupProfile sp4() {
  GroupProfile g;
  g.name = "sp4";
  g.k_const = 4;
  g.d_const = 4;
  g.omega_r_order = 2;
  g.chi = {ChiCase::simply_connected, {{{1, 3}, 2}}, 1, 1, 1, 1};
  g.levis.push_back(whole(g, {"G", {0, 1, 2, 3}, {}, 0}));
  g.note = "only the Euler characteristic is used";
  return g;
}

GroupProfile gl2() {
  GroupProfile g;
  g.name = "gl2";
  g.omega_r_order = 2;
  g.real_component_index = 2;
  g.chi = {ChiCase::derived_sc, {{{1}, 1}}, 1, 1, 1, 2};
  g.levis.push_back(whole(g, {"G", {0}, {}, 0}));
  g.note = "C = Gm via the determinant; one class, trivial torsion";
  return g;
}

GroupProfile gsp4() {
  GroupProfile g;
  g.name = "gsp4";
  g.k_const = 2;
  g.d_const = 2;
  g.omega_r_order = 4;
  g.real_component_index = 2;
  g.chi = {ChiCase::derived_sc, {{{1, 3}, 2}}, 1, 1, 1, 2};
  g.levis.push_back(whole(g, builtin::gsp4_levi_g()));
  g.levis.push_back(proper(builtin::gsp4_levi_m1(), 2, 1, 1, Rat(-1, 48), "GL2 x Gm"));
  g.levis.push_back(proper(builtin::gsp4_levi_m2(), 2, 1, 1, Rat(-1, 48), "GL2 x Gm"));
  g.levis.push_back(proper(builtin::gsp4_levi_a(), 8, 1, 1, Rat(1, 8), "split torus of rank 3"));
  g.endoscopic.push_back({"h", Rat(1, 4), 2, "the unique proper elliptic endoscopic group"});
  g.note = "similitude symplectic group in four variables";
  return g;
}

GroupProfile pgl2() {
  GroupProfile g;
  g.name = "pgl2";
  g.tamagawa = Rat(2);
  g.omega_r_order = 2;
  g.real_component_index = 2;
  g.chi = {ChiCase::isogeny, {{{1}, 1}}, 1, 1, 2, 2};
  g.levis.push_back(whole(g, {"G", {0}, {}, 0}));
  g.note = "covered by SL2 with kernel of order 2";
  return g;
}

GroupProfile h() {
  GroupProfile g;
  g.name = "h";
  g.tamagawa = Rat(2);
  g.omega_r_order = 4;
  g.real_component_index = 4;
  g.chi = {ChiCase::isogeny, {{{1}, 1}, {{1}, 1}}, 1, 1, 2, 4};
  g.levis.push_back(whole(g, builtin::h_levi_h()));
  g.levis.push_back(proper(builtin::h_levi_m1(), 2, 1, 1, Rat(-1, 48), "first GL2 factor times a split torus"));
  g.levis.push_back(proper(builtin::h_levi_m2(), 2, 1, 1, Rat(-1, 48), "second GL2 factor times a split torus"));
  g.levis.push_back(proper(builtin::h_levi_a(), 4, 1, 1, Rat(1, 8), "split torus of rank 3"));
  g.note = "P(GL2 x GL2), covered by SL2 x SL2";
  return g;
}

std::vector<GroupProfile> all_profiles() {
  return {gm(), sl2(), sp4(), gl2(), gsp4(), pgl2(), h(), t_gaussian(), t_eisenstein()};
}

}  // namespace builtin_profiles

}  // namespace stabletrace
