#include "stabletrace/kottwitz.hpp"

#include <sstream>

namespace stabletrace {

namespace {

constexpr const char* kCentralCitation =
    "central term (-1)^dim(A_M/A_G) k(M)/k(G) (n^G_M)^-1 chi_K(M)/d(M) e Phi_M(z^-1), summed over z = +1, -1";

int parity_sign(long q) { return (q % 2) ? -1 : 1; }

std::string pm_label(const std::string& levi) { return "z=+1,-1, M=" + levi; }

void add_regularity_flag(TermReport& r, GroupKind kind, const ParameterData& p) {
  if (!is_regular(kind, p)) r.flags.push_back("non-regular highest weight");
}

// Sums the central terms of one group over z = +-1 using Phi rows per z.
std::vector<Term> central_terms(const GroupProfile& profile, const PhiTable& table, const ParameterData& p,
                                int sign, const Rat& scale, WeightVariant, bool packet_sum) {
  const auto plus = packet_sum ? table.evaluate(p, 1) : table.evaluate_member(p, 1, WeightVariant::standard);
  const auto minus =
      packet_sum ? table.evaluate(p, -1) : table.evaluate_member(p, -1, WeightVariant::standard);
  std::vector<Term> out;
  for (size_t i = 0; i < profile.levis.size(); ++i) {
    const Rat v = st_central_term(profile, i, plus[i].value, sign) +
                  st_central_term(profile, i, minus[i].value, sign);
    out.push_back({pm_label(profile.levis[i].levi.name), scale * v, kCentralCitation});
  }
  return out;
}

std::string gamma_key(const std::string& label) {
  if (label == "gamma3" || label == "γ₃" || label == "g3") return "gamma3";
  if (label == "gamma4" || label == "γ₄" || label == "g4") return "gamma4";
  if (label == "gamma6" || label == "γ₆" || label == "g6") return "gamma6";
  throw ParameterError("unknown elliptic class '" + label + "' (expected gamma3, gamma4 or gamma6)");
}

}  // namespace

void TermReport::add(Term t) {
  total += t.value;
  terms.push_back(std::move(t));
}

bool TermReport::consistent() const {
  Rat s;
  for (const auto& t : terms) s += t.value;
  return s == total;
}

Rat st_central_term(const GroupProfile& profile, size_t levi_index, const Rat& phi_value, int sign) {
  if (levi_index >= profile.levis.size())
    throw ProfileError("group '" + profile.name + "' has no Levi with index " + std::to_string(levi_index));
  const LeviProfile& m = profile.levis[levi_index];
  if (m.d <= 0 || m.n_gm <= 0 || profile.k_const <= 0) throw ProfileError("Levi constants must be positive");
  const Rat factor = Rat(parity_sign(m.levi.dim_a)) * Rat(m.k) / Rat(profile.k_const) / Rat(m.n_gm) *
                     m.chi_k / Rat(m.d);
  return factor * Rat(sign) * phi_value;
}

OrbitalValue sl2_elliptic_orbital(const GroupCatalog& catalog, const std::string& gamma_label) {
  const std::string key = gamma_key(gamma_label);
  // gamma6 is conjugate to -gamma3 and f is invariant under -1, so it shares
  // the orbital integral of gamma3.
  const GroupProfile& t = catalog.profile(key == "gamma4" ? "t_gaussian" : "t_eisenstein");
  const Rat value = Rat(2) * chi_k(t) / (t.tamagawa * Rat(t.d_const));
  return {key, value,
          "stable orbital integral 2 vol(K_T)^-1 over vbar(T), rewritten as 2 chi_K(T)/(tau(T) d(T)) for the torus " +
              t.name};
}

TermReport sl2_st_total(const GroupCatalog& catalog, long n) {
  const ParameterData p{0, 0, 0, n};
  validate(GroupKind::sl2, p);
  const GroupProfile& g = catalog.profile("sl2");
  const BasedRootDatum& d = catalog.datum("sl2");
  const int e = parity_sign(q_value(d));
  TermReport r;
  r.group = "sl2";
  r.kind = "sl2-multiplicity";
  r.parameters = {{"n", std::to_string(n)}};
  const PhiTable table(catalog, GroupKind::sl2);
  for (auto& t : central_terms(g, table, p, e, Rat(1), WeightVariant::standard, false)) r.add(std::move(t));

  const HighestWeight hw = highest_weight_from_parameter(GroupKind::sl2, d, p);
  const std::pair<const char*, TorsionElement> classes[] = {
      {"gamma3", builtin::sl2_gamma3()}, {"gamma4", builtin::sl2_gamma4()}, {"gamma6", builtin::sl2_gamma6()}};
  for (const auto& [label, gamma] : classes) {
    const OrbitalValue ov = sl2_elliptic_orbital(catalog, label);
    const Int tr = trace_at_torsion(d, hw.lambda, inverse(gamma));
    r.add({std::string("elliptic ") + label, g.tamagawa * Rat(e) * ov.value * Rat(tr),
           "tau(G) e(G) tr(gamma^-1; E) times " + ov.citation});
  }
  add_regularity_flag(r, GroupKind::sl2, p);
  return r;
}

Gsp4Central::Gsp4Central(const GroupCatalog& catalog)
    : catalog_(&catalog), g_(catalog, GroupKind::gsp4), h_(catalog, GroupKind::h) {}

TermReport Gsp4Central::stable(long a, long b, long t) const {
  const ParameterData p{a, b, t, 0};
  validate(GroupKind::gsp4, p);
  const GroupProfile& g = catalog_->profile("gsp4");
  const int e = parity_sign(q_value(catalog_->datum("gsp4")));
  TermReport r;
  r.group = "gsp4";
  r.kind = "gsp4-central-stable";
  r.parameters = {{"a", std::to_string(a)}, {"b", std::to_string(b)}, {"t", std::to_string(t)}};
  for (auto& term : central_terms(g, g_, p, e, Rat(1), WeightVariant::standard, false)) r.add(std::move(term));
  add_regularity_flag(r, GroupKind::gsp4, p);
  return r;
}

TermReport Gsp4Central::endoscopic(long a, long b, PacketMember member, long t) const {
  const ParameterData p{a, b, t, 0};
  validate(GroupKind::gsp4, p);
  const GroupProfile& g = catalog_->profile("gsp4");
  const GroupProfile& h = catalog_->profile("h");
  Rat iota;
  bool found = false;
  for (const auto& en : g.endoscopic)
    if (en.group == "h") {
      iota = en.iota;
      found = true;
    }
  if (!found) throw ProfileError("gsp4 profile does not list h as an endoscopic group");
  // Theta_{pi_H}(e^H_{pi_G}) = (-1)^{q(G)}; the other packet member flips it.
  int sign = parity_sign(q_value(catalog_->datum("gsp4")));
  if (member == PacketMember::pi_g_prime) sign = -sign;
  TermReport r;
  r.group = "gsp4";
  r.kind = "gsp4-central-endoscopic";
  r.parameters = {{"a", std::to_string(a)},
                  {"b", std::to_string(b)},
                  {"t", std::to_string(t)},
                  {"member", member == PacketMember::pi_g ? "pi_G" : "pi_G'"}};
  for (auto& term : central_terms(h, h_, p, sign, iota, WeightVariant::standard, true)) {
    term.label = "iota(G,H), " + term.label;
    term.citation = std::string("iota(G,H) times ") + term.citation + ", packet sum over lambda_H and lambda_H'";
    r.add(std::move(term));
  }
  add_regularity_flag(r, GroupKind::gsp4, p);
  return r;
}

TermReport gsp4_central_stable(const GroupCatalog& catalog, long a, long b, long t) {
  return Gsp4Central(catalog).stable(a, b, t);
}

TermReport gsp4_central_endoscopic(const GroupCatalog& catalog, long a, long b, PacketMember member, long t) {
  return Gsp4Central(catalog).endoscopic(a, b, member, t);
}

Rat gsp4_stable_closed_form(long a, long b) {
  const Rat A(a), B(b);
  return A * B * (A + B) * (A - B) / Rat(69120) - (A - B) / Rat(48) - B / Rat(48) + Rat(1, 8);
}

Rat gsp4_endoscopic_closed_form(long a, long b) {
  const Rat A(a), B(b);
  return -A * B / Rat(288) + (A + B) / Rat(48) - Rat(1, 8);
}

Rat wakatsuki_h1(H1Kind kind, long a, long b) {
  const Rat A(a), B(b);
  const Rat main = A * B * (A - B) * (A + B) / Rat(69120);
  if (kind == H1Kind::holomorphic) return main - A * B / Rat(288) + B / Rat(48);
  return main + A * B / Rat(288) - B / Rat(24) + Rat(1, 4);
}

std::vector<std::pair<long, long>> odd_pairs(long a_max) {
  std::vector<std::pair<long, long>> out;
  for (long a = 3; a <= a_max; a += 2)
    for (long b = 1; b < a; b += 2) out.emplace_back(a, b);
  return out;
}

namespace {

Gsp4Row grid_row(const Gsp4Central& eval, long a, long b) {
  return {a,
          b,
          eval.stable(a, b).total,
          eval.endoscopic(a, b, PacketMember::pi_g).total,
          wakatsuki_h1(H1Kind::holomorphic, a, b),
          wakatsuki_h1(H1Kind::large, a, b)};
}

Theorem1Result collect(long a_max, const std::vector<Gsp4Row>& rows, bool perturb) {
  Theorem1Result res;
  res.a_max = a_max;
  res.pairs = rows.size();
  for (const auto& row : rows) {
    const Rat endo = perturb ? -row.endoscopic : row.endoscopic;
    const Rat sum = row.stable + endo;
    const Rat diff = row.stable - endo;
    if (sum != row.h1_hol) {
      ++res.hol_failures;
      if (res.examples.size() < Theorem1Result::kMaxExamples)
        res.examples.push_back({row.a, row.b, "stable + endoscopic = H1^hol", sum, row.h1_hol});
    }
    if (diff != row.h1_large) {
      ++res.large_failures;
      if (res.examples.size() < Theorem1Result::kMaxExamples)
        res.examples.push_back({row.a, row.b, "stable - endoscopic = H1^large", diff, row.h1_large});
    }
  }
  return res;
}

}  // namespace

std::vector<Gsp4Row> gsp4_central_grid_serial(const GroupCatalog& catalog,
                                              const std::vector<std::pair<long, long>>& pairs) {
  const Gsp4Central eval(catalog);
  std::vector<Gsp4Row> rows;
  rows.reserve(pairs.size());
  for (const auto& [a, b] : pairs) rows.push_back(grid_row(eval, a, b));
  return rows;
}

std::vector<Gsp4Row> gsp4_central_grid(const GroupCatalog& catalog,
                                       const std::vector<std::pair<long, long>>& pairs) {
  std::vector<Gsp4Row> rows(pairs.size());
  const long n = static_cast<long>(pairs.size());
  std::string error;
#pragma omp parallel
  {
    // Evaluators hold no mutable state, but building one per thread keeps
    // the prepared sub-data thread-local.
    const Gsp4Central eval(catalog);
#pragma omp for schedule(dynamic, 16)
    for (long i = 0; i < n; ++i) {
      try {
        rows[i] = grid_row(eval, pairs[i].first, pairs[i].second);
      } catch (const std::exception& e) {
#pragma omp critical
        error = e.what();
      }
    }
  }
  if (!error.empty()) throw ParameterError(error);
  return rows;
}

Theorem1Result verify_theorem1_serial(const GroupCatalog& catalog, long a_max, bool perturb) {
  if (a_max < 3) throw ParameterError("a_max must be at least 3");
  return collect(a_max, gsp4_central_grid_serial(catalog, odd_pairs(a_max)), perturb);
}

Theorem1Result verify_theorem1(const GroupCatalog& catalog, long a_max, bool perturb) {
  if (a_max < 3) throw ParameterError("a_max must be at least 3");
  return collect(a_max, gsp4_central_grid(catalog, odd_pairs(a_max)), perturb);
}

namespace {

// Coefficients of the degree-4 interpolant through (x_k, y_k).
std::array<Rat, 5> interpolate_1d(const std::array<long, 5>& xs, const std::array<Rat, 5>& ys) {
  Mat v(5, Vec(5));
  Vec rhs(5);
  for (size_t i = 0; i < 5; ++i) {
    for (size_t j = 0; j < 5; ++j) v[i][j] = pow(Rat(xs[i]), static_cast<long>(j));
    rhs[i] = ys[i];
  }
  const auto c = solve(v, rhs);
  if (!c) throw ArithmeticError("singular interpolation nodes");
  std::array<Rat, 5> out;
  for (size_t j = 0; j < 5; ++j) out[j] = (*c)[j];
  return out;
}

Rat poly_eval(const PolyAB& p, long a, long b) {
  Rat s;
  for (size_t i = 0; i < 5; ++i)
    for (size_t j = 0; j < 5; ++j)
      if (!p[i][j].is_zero()) s += p[i][j] * pow(Rat(a), static_cast<long>(i)) * pow(Rat(b), static_cast<long>(j));
  return s;
}

}  // namespace

PolyAB interpolate_ab(const std::function<Rat(long, long)>& f) {
  const std::array<long, 5> as{11, 13, 15, 17, 19};
  const std::array<long, 5> bs{1, 3, 5, 7, 9};
  // For each b node: coefficients in a.
  std::array<std::array<Rat, 5>, 5> by_b;
  for (size_t j = 0; j < 5; ++j) {
    std::array<Rat, 5> ys;
    for (size_t i = 0; i < 5; ++i) ys[i] = f(as[i], bs[j]);
    by_b[j] = interpolate_1d(as, ys);
  }
  PolyAB out;
  for (size_t i = 0; i < 5; ++i) {
    std::array<Rat, 5> ys;
    for (size_t j = 0; j < 5; ++j) ys[j] = by_b[j][i];
    const auto c = interpolate_1d(bs, ys);
    for (size_t j = 0; j < 5; ++j) out[i][j] = c[j];
  }
  if (poly_eval(out, 23, 11) != f(23, 11))
    throw ArithmeticError("function is not a polynomial of degree <= 4 in each variable");
  return out;
}

PolyAB wakatsuki_coefficients(H1Kind kind) {
  PolyAB p;
  p[3][1] = Rat(1, 69120);
  p[1][3] = Rat(-1, 69120);
  if (kind == H1Kind::holomorphic) {
    p[1][1] = Rat(-1, 288);
    p[0][1] = Rat(1, 48);
  } else {
    p[1][1] = Rat(1, 288);
    p[0][1] = Rat(-1, 24);
    p[0][0] = Rat(1, 4);
  }
  return p;
}

PolyAB poly_sub(const PolyAB& x, const PolyAB& y) {
  PolyAB r;
  for (size_t i = 0; i < 5; ++i)
    for (size_t j = 0; j < 5; ++j) r[i][j] = x[i][j] - y[i][j];
  return r;
}

bool poly_is_zero(const PolyAB& p) {
  for (const auto& row : p)
    for (const auto& c : row)
      if (!c.is_zero()) return false;
  return true;
}

std::string poly_str(const PolyAB& p) {
  std::ostringstream s;
  bool first = true;
  for (size_t i = 5; i-- > 0;)
    for (size_t j = 5; j-- > 0;) {
      const Rat& c = p[i][j];
      if (c.is_zero()) continue;
      s << (first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + "));
      first = false;
      const Rat m = abs(c);
      const bool unit = m == Rat(1) && (i || j);
      if (!unit) s << m.str();
      if (i) s << (unit ? "" : "*") << "a" << (i > 1 ? "^" + std::to_string(i) : "");
      if (j) s << ((unit && !i) ? "" : "*") << "b" << (j > 1 ? "^" + std::to_string(j) : "");
    }
  return first ? "0" : s.str();
}

Theorem1Polynomial theorem1_polynomial_check(const GroupCatalog& catalog) {
  const Gsp4Central eval(catalog);
  Theorem1Polynomial out;
  out.sum = interpolate_ab([&](long a, long b) {
    return eval.stable(a, b).total + eval.endoscopic(a, b, PacketMember::pi_g).total;
  });
  out.difference = interpolate_ab([&](long a, long b) {
    return eval.stable(a, b).total - eval.endoscopic(a, b, PacketMember::pi_g).total;
  });
  out.hol_residual = poly_sub(out.sum, wakatsuki_coefficients(H1Kind::holomorphic));
  out.large_residual = poly_sub(out.difference, wakatsuki_coefficients(H1Kind::large));
  return out;
}

}  // namespace stabletrace
