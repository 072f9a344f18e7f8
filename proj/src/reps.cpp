#include "stabletrace/reps.hpp"

#include <map>
#include <sstream>

namespace stabletrace {

namespace {

std::string vec_str(const Vec& v) {
  std::ostringstream s;
  s << "(";
  for (size_t i = 0; i < v.size(); ++i) s << (i ? " " : "") << v[i].str();
  s << ")";
  return s.str();
}

// An ambient-integral representative of the class of v, trying half-integer
// combinations of the relations when v itself is not integral.
IVec integral_rep(const BasedRootDatum& d, const Vec& v) {
  if (is_integral(v)) return to_int(v);
  const auto& rels = d.lattice().char_relations;
  const size_t n = rels.size();
  if (n > 16) throw DatumError("too many relations to search for an integral representative");
  for (unsigned long mask = 1; mask < (1ul << (2 * n)); ++mask) {
    Vec w = v;
    bool used = true;
    for (size_t j = 0; j < n; ++j) {
      const unsigned bits = (mask >> (2 * j)) & 3u;
      if (bits == 3u) used = false;
      if (bits == 0u || bits == 3u) continue;
      const Rat c = bits == 1u ? Rat(1, 2) : Rat(-1, 2);
      w = add(w, scale(c, to_rat(rels[j])));
    }
    if (used && is_integral(w)) return to_int(w);
  }
  throw DatumError("weight " + vec_str(v) + " is not integral");
}

long long pair_exponent(const IVec& mu, const TorsionElement& g) { return dot(mu, g.exponents); }

void check_dominant(const BasedRootDatum& d, const Weight& lambda) {
  d.check_weight(lambda);
  for (const auto& c : d.lattice().char_kernel)
    if (!dot(lambda.coords, c).is_zero()) throw DatumError("weight " + vec_str(lambda.coords) + " is not in X*");
  for (size_t s : d.simple_roots())
    if (d.pair_coroot(lambda, s).sign() < 0) {
      std::ostringstream msg;
      msg << "weight " << vec_str(lambda.coords) << " is not dominant: pairing with the coroot of simple root (";
      for (size_t i = 0; i < d.roots()[s].size(); ++i) msg << (i ? " " : "") << d.roots()[s][i];
      msg << ") is " << d.pair_coroot(lambda, s).str();
      throw DatumError(msg.str());
    }
}

}  // namespace

void validate(const BasedRootDatum& d, const TorsionElement& g) {
  if (g.order == 0) throw ParameterError("torsion element must have positive order");
  if (g.exponents.size() != d.ambient_rank())
    throw ParameterError("torsion element has " + std::to_string(g.exponents.size()) +
                         " exponents, expected " + std::to_string(d.ambient_rank()));
  for (const auto& r : d.lattice().char_relations)
    if (dot(r, g.exponents) % static_cast<long long>(g.order) != 0)
      throw ParameterError("torsion exponents do not annihilate the character relations mod " +
                           std::to_string(g.order));
}

TorsionElement inverse(const TorsionElement& g) {
  TorsionElement r = g;
  for (auto& k : r.exponents) k = -k;
  return r;
}

TorsionElement conjugate(const WeylElement& w, const TorsionElement& g) {
  return {g.order, act_dual_inverse(w, g.exponents)};
}

Rat weyl_dim(const BasedRootDatum& d, const Weight& lambda) {
  check_dominant(d, lambda);
  const Weight rho = half_sum_positive(d);
  const Weight shifted(add(lambda.coords, rho.coords), lambda.lattice);
  Rat dim(1);
  for (size_t p : d.positive_roots()) dim *= d.pair_coroot(shifted, p) / d.pair_coroot(rho, p);
  if (!dim.is_integer())
    throw DatumError("weight " + vec_str(lambda.coords) + " is not integral (dimension " + dim.str() + ")");
  return dim;
}

Int trace_central(const BasedRootDatum& d, const Weight& lambda, int sign, long central_exponent) {
  if (sign != 1 && sign != -1) throw ParameterError("central sign must be +1 or -1");
  const Int dim = weyl_dim(d, lambda).to_int();
  return (sign < 0 && (central_exponent % 2 != 0)) ? Int(-dim) : dim;
}

std::vector<std::pair<Weight, Int>> weight_multiset(const BasedRootDatum& d, const Weight& lambda) {
  check_dominant(d, lambda);
  struct Entry {
    IVec rep;
    Int coeff;
  };
  const Vec rho = half_sum_positive(d).coords;
  std::map<Vec, Entry> poly;
  for (const auto& w : weyl_group(d)) {
    const Vec mu = sub(act(w, add(lambda.coords, rho)), rho);
    auto& e = poly[d.canonical(mu)];
    if (e.rep.empty()) e.rep = integral_rep(d, mu);
    e.coeff += w.sign;
  }
  for (size_t p : d.positive_roots()) {
    const IVec& alpha = d.roots()[p];
    const IVec& coroot = d.coroots()[p];
    const Vec calpha = d.canonical(to_rat(alpha));
    // Group by alpha-string; index = <mu, alpha^vee>.
    std::map<Vec, std::map<long long, Entry>> strings;
    for (auto& [key, e] : poly) {
      if (e.coeff == 0) continue;
      const long long idx = dot(e.rep, coroot);
      const Vec base = sub(key, scale(Rat(static_cast<long>(idx), 2), calpha));
      strings[base][idx] = e;
    }
    std::map<Vec, Entry> next;
    for (auto& [base, str] : strings) {
      const auto top = str.rbegin();
      const long long top_idx = top->first;
      const IVec top_rep = top->second.rep;
      const long long low_idx = str.begin()->first;
      Int running = 0;
      for (long long i = top_idx; i >= low_idx; i -= 2) {
        auto it = str.find(i);
        if (it != str.end()) running += it->second.coeff;
        if (running == 0) continue;
        IVec rep = top_rep;
        const long long steps = (top_idx - i) / 2;
        for (size_t c = 0; c < rep.size(); ++c) rep[c] -= steps * alpha[c];
        next[d.canonical(to_rat(rep))] = Entry{rep, running};
      }
      // The last position carried the full string sum, which must vanish.
      if (running != 0) throw DatumError("Weyl numerator is not divisible by the denominator");
    }
    poly = std::move(next);
  }
  std::vector<std::pair<Weight, Int>> out;
  for (auto& [key, e] : poly) {
    if (e.coeff == 0) continue;
    if (e.coeff < 0) throw DatumError("negative weight multiplicity in character");
    out.emplace_back(d.weight(to_rat(e.rep)), e.coeff);
  }
  return out;
}

Int trace_by_weights(const BasedRootDatum& d, const Weight& lambda, const TorsionElement& g) {
  validate(d, g);
  CycElt sum(g.order);
  for (const auto& [w, mult] : weight_multiset(d, lambda))
    sum.add_term(pair_exponent(to_int(w.coords), g), mult);
  return cyc_reduce_to_int(sum);
}

Int trace_at_torsion(const BasedRootDatum& d, const Weight& lambda, const TorsionElement& g) {
  validate(d, g);
  check_dominant(d, lambda);
  const Vec rho = half_sum_positive(d).coords;
  CycElt num(g.order), den(g.order);
  for (const auto& w : weyl_group(d)) {
    num.add_term(pair_exponent(integral_rep(d, sub(act(w, add(lambda.coords, rho)), rho)), g), w.sign);
    den.add_term(pair_exponent(integral_rep(d, sub(act(w, rho), rho)), g), w.sign);
  }
  const auto dred = den.reduced();
  size_t pivot = dred.size();
  for (size_t i = 0; i < dred.size(); ++i)
    if (dred[i] != 0) {
      pivot = i;
      break;
    }
  if (pivot == dred.size()) return trace_by_weights(d, lambda, g);
  const auto nred = num.reduced();
  if (nred[pivot] % dred[pivot] != 0)
    throw ArithmeticError("character value at the torsion element is not a rational integer");
  const Int x = nred[pivot] / dred[pivot];
  CycElt residual = num - den * x;
  if (!residual.is_zero()) {
    std::ostringstream msg;
    msg << "character value at the torsion element is not a rational integer; residual [";
    const auto r = residual.reduced();
    for (size_t i = 0; i < r.size(); ++i) msg << (i ? ", " : "") << r[i].get_str();
    msg << "]";
    throw ArithmeticError(msg.str());
  }
  return x;
}

void validate(GroupKind kind, const ParameterData& p) {
  auto odd = [](long v) { return v % 2 != 0; };
  switch (kind) {
    case GroupKind::sl2:
      if (p.n < 1) throw ParameterError("SL2 parameter n must be a positive integer, got " + std::to_string(p.n));
      return;
    case GroupKind::gsp4:
      if (!odd(p.a) || !odd(p.b)) throw ParameterError("GSp4 parameters a, b must be odd");
      if (!(p.a > p.b && p.b > 0)) throw ParameterError("GSp4 parameters must satisfy a > b > 0");
      if (p.t % 2 != 0) throw ParameterError("GSp4 central parameter t must be even");
      return;
    case GroupKind::h:
      if (!odd(p.a) || !odd(p.b)) throw ParameterError("H parameters a, b must be odd");
      if (p.a <= 0 || p.b <= 0) throw ParameterError("H parameters a, b must be positive");
      if (p.t % 2 != 0) throw ParameterError("H central parameter t must be even");
      return;
  }
}

bool is_regular(GroupKind kind, const ParameterData& p) {
  validate(kind, p);
  switch (kind) {
    case GroupKind::sl2: return p.n > 1;
    case GroupKind::gsp4: return p.b > 1 && p.a - p.b > 2;
    case GroupKind::h: return p.a > 1 && p.b > 1;
  }
  return false;
}

HighestWeight highest_weight_from_parameter(GroupKind kind, const BasedRootDatum& d,
                                            const ParameterData& p, WeightVariant variant) {
  validate(kind, p);
  long a = p.a, b = p.b;
  if (variant == WeightVariant::swapped) std::swap(a, b);
  const long t = p.t;
  switch (kind) {
    case GroupKind::sl2:
      if (d.ambient_rank() != 1) throw DatumError("SL2 weights need a rank-one datum");
      return {d.weight(IVec{p.n - 1}), p.n - 1};
    case GroupKind::gsp4: {
      if (d.ambient_rank() != 4) throw DatumError("GSp4 weights need a rank-four datum");
      const Vec lam{Rat(a + b - 4, 2), Rat(t - b + 1, 2), Rat(t - a + 3, 2), Rat(0)};
      return {d.weight(lam), t};
    }
    case GroupKind::h: {
      if (d.ambient_rank() != 4) throw DatumError("H weights need a rank-four datum");
      const Vec lam{Rat(t + a - 1, 2), Rat(t - a + 1, 2), Rat(t + b - 1, 2), Rat(t - b + 1, 2)};
      return {d.weight(lam), t};
    }
  }
  throw ParameterError("unknown group kind");
}

const char* to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::sl2: return "sl2";
    case GroupKind::gsp4: return "gsp4";
    case GroupKind::h: return "h";
  }
  return "?";
}

GroupKind group_kind_from_string(const std::string& s) {
  if (s == "sl2") return GroupKind::sl2;
  if (s == "gsp4") return GroupKind::gsp4;
  if (s == "h") return GroupKind::h;
  throw ParameterError("unknown group '" + s + "' (expected sl2, gsp4 or h)");
}

namespace builtin {

TorsionElement sl2_gamma3() { return {3, {1}}; }
TorsionElement sl2_gamma4() { return {4, {1}}; }
TorsionElement sl2_gamma6() { return {6, {1}}; }

}  // namespace builtin

}  // namespace stabletrace
