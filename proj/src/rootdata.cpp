#include "stabletrace/rootdata.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace stabletrace {

namespace {

std::string vec_str(const IVec& v) {
  std::ostringstream s;
  s << "(";
  for (size_t i = 0; i < v.size(); ++i) s << (i ? " " : "") << v[i];
  s << ")";
  return s.str();
}

std::vector<Vec> to_rat_rows(const std::vector<IVec>& rows) {
  std::vector<Vec> out;
  for (const auto& r : rows) out.push_back(to_rat(r));
  return out;
}

bool in_span(const std::vector<IVec>& span, const IVec& v) {
  Mat rows = to_rat_rows(span);
  const size_t before = rank(rows);
  rows.push_back(to_rat(v));
  return rank(rows) == before;
}

void check_lengths(const std::vector<IVec>& vs, size_t r, const char* what) {
  for (const auto& v : vs)
    if (v.size() != r)
      throw DatumError(std::string(what) + " vector " + vec_str(v) + " has length " +
                       std::to_string(v.size()) + ", expected " + std::to_string(r));
}

// Reflection matrix I - alpha alpha_vee^T, row-major.
std::vector<long long> reflection_matrix(const IVec& alpha, const IVec& coroot) {
  const size_t r = alpha.size();
  std::vector<long long> m(r * r, 0);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) m[i * r + j] = (i == j ? 1 : 0) - alpha[i] * coroot[j];
  return m;
}

std::vector<long long> mat_mul(const std::vector<long long>& a, const std::vector<long long>& b,
                               size_t r) {
  std::vector<long long> c(r * r, 0);
  for (size_t i = 0; i < r; ++i)
    for (size_t k = 0; k < r; ++k) {
      if (a[i * r + k] == 0) continue;
      for (size_t j = 0; j < r; ++j) c[i * r + j] += a[i * r + k] * b[k * r + j];
    }
  return c;
}

size_t mat_rank_of(const std::vector<long long>& m) {
  size_t r = 0;
  while (r * r < m.size()) ++r;
  return r;
}

constexpr size_t kWeylBound = 1000000;

}  // namespace

void Lattice::validate() const {
  if (rank == 0) throw DatumError("lattice rank must be positive");
  check_lengths(char_relations, rank, "char_relations");
  check_lengths(char_kernel, rank, "char_kernel");
  check_lengths(cochar_kernel, rank, "cochar_kernel");
  check_lengths(cochar_relations, rank, "cochar_relations");
  for (const auto& r : char_relations) {
    for (const auto& c : char_kernel)
      if (dot(r, c) != 0)
        throw DatumError("char relation " + vec_str(r) + " does not lie in X*");
    if (!in_span(cochar_kernel, r))
      throw DatumError("pairing not well defined: char relation " + vec_str(r) +
                       " does not annihilate X_*");
  }
  for (const auto& s : cochar_relations) {
    for (const auto& k : cochar_kernel)
      if (dot(s, k) != 0)
        throw DatumError("cochar relation " + vec_str(s) + " does not lie in X_*");
    if (!in_span(char_kernel, s))
      throw DatumError("pairing not well defined: cochar relation " + vec_str(s) +
                       " does not annihilate X*");
  }
  const size_t xr = rank - stabletrace::rank(to_rat_rows(char_kernel)) -
                    stabletrace::rank(to_rat_rows(char_relations));
  const size_t yr = rank - stabletrace::rank(to_rat_rows(cochar_kernel)) -
                    stabletrace::rank(to_rat_rows(cochar_relations));
  if (xr != yr)
    throw DatumError("X* has rank " + std::to_string(xr) + " but X_* has rank " +
                     std::to_string(yr));
  if (!inner.empty()) {
    if (inner.size() != rank) throw DatumError("inner product matrix has wrong size");
    for (size_t i = 0; i < rank; ++i) {
      if (inner[i].size() != rank) throw DatumError("inner product matrix has wrong size");
      for (size_t j = 0; j < i; ++j)
        if (inner[i][j] != inner[j][i]) throw DatumError("inner product matrix is not symmetric");
    }
  }
}

struct BasedRootDatum::Cache {
  std::once_flag once;
  std::vector<WeylElement> weyl;
  std::string error;
};

BasedRootDatum::BasedRootDatum(std::string name, std::shared_ptr<const Lattice> lattice,
                               std::vector<IVec> roots, std::vector<IVec> coroots,
                               std::vector<size_t> simple)
    : name_(std::move(name)),
      lattice_(std::move(lattice)),
      roots_(std::move(roots)),
      coroots_(std::move(coroots)),
      simple_(std::move(simple)),
      cache_(std::make_shared<Cache>()) {
  if (!lattice_) throw DatumError("root datum without a lattice");
  const Lattice& lat = *lattice_;
  lat.validate();
  const size_t r = lat.rank;
  relation_ortho_ = orthogonal_basis(to_rat_rows(lat.char_relations));

  if (roots_.size() != coroots_.size())
    throw DatumError("root count " + std::to_string(roots_.size()) + " differs from coroot count " +
                     std::to_string(coroots_.size()));
  check_lengths(roots_, r, "root");
  check_lengths(coroots_, r, "coroot");
  for (size_t i = 0; i < roots_.size(); ++i) {
    for (const auto& c : lat.char_kernel)
      if (dot(roots_[i], c) != 0) throw DatumError("root " + vec_str(roots_[i]) + " is not in X*");
    for (const auto& k : lat.cochar_kernel)
      if (dot(coroots_[i], k) != 0)
        throw DatumError("coroot " + vec_str(coroots_[i]) + " is not in X_*");
    if (dot(roots_[i], coroots_[i]) != 2)
      throw DatumError("<alpha, alpha^vee> != 2 for root " + vec_str(roots_[i]));
    if (is_zero(canonical(to_rat(roots_[i]))))
      throw DatumError("root " + vec_str(roots_[i]) + " is zero modulo relations");
  }
  for (size_t i = 0; i < roots_.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      const Vec a = canonical(to_rat(roots_[i]));
      const Vec b = canonical(to_rat(roots_[j]));
      if (rank(Mat{a, b}) > 1) continue;
      if (a == b) throw DatumError("root " + vec_str(roots_[i]) + " is listed twice");
      if (a != scale(Rat(-1), b))
        throw DatumError("root system is not reduced: " + vec_str(roots_[i]) + " and " +
                         vec_str(roots_[j]) + " are proportional");
    }

  // Coroots are compared modulo the cocharacter relations.
  const auto coroot_ortho = orthogonal_basis(to_rat_rows(lat.cochar_relations));
  auto find_coroot = [&](const Vec& v) -> std::optional<size_t> {
    const Vec c = project_away(v, coroot_ortho);
    for (size_t i = 0; i < coroots_.size(); ++i)
      if (project_away(to_rat(coroots_[i]), coroot_ortho) == c) return i;
    return std::nullopt;
  };

  for (size_t s : simple_)
    if (s >= roots_.size()) throw DatumError("simple root index out of range");
  {
    std::set<size_t> seen(simple_.begin(), simple_.end());
    if (seen.size() != simple_.size()) throw DatumError("simple root listed twice");
  }
  std::vector<Vec> simple_vecs;
  for (size_t s : simple_) simple_vecs.push_back(canonical(to_rat(roots_[s])));
  if (rank(simple_vecs) != simple_vecs.size()) throw DatumError("simple roots are linearly dependent");

  for (size_t s : simple_) {
    const IVec& a = roots_[s];
    const IVec& av = coroots_[s];
    for (size_t i = 0; i < roots_.size(); ++i) {
      IVec img = roots_[i];
      const long long p = dot(img, av);
      for (size_t k = 0; k < r; ++k) img[k] -= p * a[k];
      const auto j = find_root(to_rat(img));
      if (!j)
        throw DatumError("simple reflection of " + vec_str(a) + " does not permute the root set (" +
                         vec_str(roots_[i]) + " maps outside)");
      IVec cimg = coroots_[i];
      const long long q = dot(a, cimg);
      for (size_t k = 0; k < r; ++k) cimg[k] -= q * av[k];
      const auto cj = find_coroot(to_rat(cimg));
      if (!cj || *cj != *j)
        throw DatumError("simple reflection of " + vec_str(a) +
                         " does not permute the coroots compatibly with the roots");
    }
  }

  for (size_t i = 0; i < roots_.size(); ++i) {
    const auto c = coordinates(simple_vecs, canonical(to_rat(roots_[i])));
    bool pos = true, neg = true;
    if (c) {
      for (const auto& x : *c) {
        if (!x.is_integer()) pos = neg = false;
        if (x.sign() < 0) pos = false;
        if (x.sign() > 0) neg = false;
      }
    }
    if (!c || (!pos && !neg))
      throw DatumError("root " + vec_str(roots_[i]) +
                       " is not a signed integral combination of simple roots");
    if (pos) positive_.push_back(i);
  }

  // Invariance of the form on X* (tested on the ambient basis projected to
  // the span of X*).
  const auto kernel_ortho = orthogonal_basis(to_rat_rows(lat.char_kernel));
  std::vector<Vec> probes;
  for (size_t i = 0; i < r; ++i) {
    Vec e(r);
    e[i] = Rat(1);
    probes.push_back(project_away(e, kernel_ortho));
  }
  for (size_t s : simple_) {
    auto reflect = [&](const Vec& v) {
      const Rat p = dot(v, coroots_[s]);
      return sub(v, scale(p, to_rat(roots_[s])));
    };
    for (const auto& u : probes)
      for (const auto& v : probes)
        if (inner(*this, weight(reflect(u)), weight(reflect(v))) != inner(*this, weight(u), weight(v)))
          throw DatumError("inner product is not Weyl-invariant");
  }
}

bool BasedRootDatum::is_positive(size_t root_index) const {
  for (size_t p : positive_)
    if (p == root_index) return true;
  return false;
}

std::optional<size_t> BasedRootDatum::find_root(const Vec& v) const {
  const Vec c = canonical(v);
  for (size_t i = 0; i < roots_.size(); ++i)
    if (canonical(to_rat(roots_[i])) == c) return i;
  return std::nullopt;
}

Vec BasedRootDatum::canonical(const Vec& v) const { return project_away(v, relation_ortho_); }

bool BasedRootDatum::same_weight(const Weight& a, const Weight& b) const {
  check_weight(a);
  check_weight(b);
  return canonical(a.coords) == canonical(b.coords);
}

Rat BasedRootDatum::pair_coroot(const Weight& w, size_t i) const {
  check_weight(w);
  return dot(w.coords, coroots_.at(i));
}

void BasedRootDatum::check_weight(const Weight& w) const {
  if (w.lattice != lattice_->id)
    throw DatumError("weight belongs to lattice '" + w.lattice + "', not '" + lattice_->id + "'");
  if (w.coords.size() != lattice_->rank) throw DatumError("weight has wrong ambient length");
}

size_t BasedRootDatum::semisimple_rank() const {
  std::vector<Vec> rows;
  for (const auto& a : roots_) rows.push_back(canonical(to_rat(a)));
  return rank(rows);
}

BasedRootDatum BasedRootDatum::subsystem(std::string name,
                                         const std::vector<size_t>& positive_indices) const {
  std::vector<IVec> roots, coroots;
  for (size_t i : positive_indices) {
    if (i >= roots_.size()) throw DatumError("Levi root index out of range");
    if (!is_positive(i)) throw DatumError("Levi root " + vec_str(roots_[i]) + " is not positive");
    roots.push_back(roots_[i]);
    coroots.push_back(coroots_[i]);
  }
  const size_t n = roots.size();
  for (size_t i = 0; i < n; ++i) {
    IVec neg = roots[i], cneg = coroots[i];
    for (auto& x : neg) x = -x;
    for (auto& x : cneg) x = -x;
    roots.push_back(neg);
    coroots.push_back(cneg);
  }
  std::vector<size_t> simple;
  for (size_t i = 0; i < n; ++i) {
    const Vec target = canonical(to_rat(roots[i]));
    bool decomposable = false;
    for (size_t j = 0; j < n && !decomposable; ++j)
      for (size_t k = j; k < n && !decomposable; ++k)
        if (canonical(add(to_rat(roots[j]), to_rat(roots[k]))) == target) decomposable = true;
    if (!decomposable) simple.push_back(i);
  }
  return BasedRootDatum(std::move(name), lattice_, std::move(roots), std::move(coroots),
                        std::move(simple));
}

const std::vector<WeylElement>& weyl_group(const BasedRootDatum& d) {
  auto& cache = *d.cache_;
  std::call_once(cache.once, [&] {
    const size_t r = d.ambient_rank();
    std::vector<std::vector<long long>> gens;
    for (size_t s : d.simple_roots()) gens.push_back(reflection_matrix(d.roots()[s], d.coroots()[s]));
    WeylElement id;
    id.matrix.assign(r * r, 0);
    for (size_t i = 0; i < r; ++i) id.matrix[i * r + i] = 1;
    std::map<std::vector<long long>, size_t> seen{{id.matrix, 0}};
    std::vector<WeylElement> out{id};
    std::deque<size_t> queue{0};
    while (!queue.empty()) {
      const size_t cur = queue.front();
      queue.pop_front();
      for (size_t g = 0; g < gens.size(); ++g) {
        auto m = mat_mul(out[cur].matrix, gens[g], r);
        if (seen.count(m)) continue;
        if (out.size() >= kWeylBound) {
          cache.error = "Weyl group of '" + d.name() + "' exceeds " + std::to_string(kWeylBound) +
                        " elements";
          return;
        }
        WeylElement w;
        w.matrix = m;
        w.word = out[cur].word;
        w.word.push_back(g);
        w.sign = (w.word.size() % 2) ? -1 : 1;
        seen.emplace(std::move(m), out.size());
        out.push_back(std::move(w));
        queue.push_back(out.size() - 1);
      }
    }
    cache.weyl = std::move(out);
  });
  if (!cache.error.empty()) throw DatumError(cache.error);
  return cache.weyl;
}

Vec act(const WeylElement& w, const Vec& v) {
  const size_t r = v.size();
  if (w.matrix.size() != r * r) throw DatumError("Weyl element and vector sizes differ");
  Vec out(r);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j)
      if (w.matrix[i * r + j]) out[i] += Rat(static_cast<long>(w.matrix[i * r + j])) * v[j];
  return out;
}

Weight act(const WeylElement& w, const Weight& v) { return Weight(act(w, v.coords), v.lattice); }

WeylElement compose(const WeylElement& a, const WeylElement& b) {
  WeylElement c;
  c.matrix = mat_mul(a.matrix, b.matrix, mat_rank_of(a.matrix));
  c.sign = a.sign * b.sign;
  c.word = a.word;
  c.word.insert(c.word.end(), b.word.begin(), b.word.end());
  return c;
}

WeylElement inverse(const WeylElement& w) {
  const size_t r = mat_rank_of(w.matrix);
  Mat a(r, Vec(r));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) a[i][j] = Rat(static_cast<long>(w.matrix[i * r + j]));
  WeylElement inv;
  inv.matrix.assign(r * r, 0);
  for (size_t j = 0; j < r; ++j) {
    Vec e(r);
    e[j] = Rat(1);
    const auto col = solve(a, e);
    if (!col) throw DatumError("Weyl element matrix is singular");
    for (size_t i = 0; i < r; ++i) inv.matrix[i * r + j] = (*col)[i].to_long();
  }
  inv.sign = w.sign;
  inv.word.assign(w.word.rbegin(), w.word.rend());
  return inv;
}

IVec act_dual_inverse(const WeylElement& w, const IVec& k) {
  const WeylElement inv = inverse(w);
  const size_t r = k.size();
  IVec out(r, 0);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) out[i] += inv.matrix[j * r + i] * k[j];
  return out;
}

Weight half_sum_positive(const BasedRootDatum& d) {
  Vec s(d.ambient_rank());
  for (size_t p : d.positive_roots()) s = add(s, to_rat(d.roots()[p]));
  return d.weight(scale(Rat(1, 2), s));
}

long q_value(const BasedRootDatum& d) {
  const size_t twice = d.positive_roots().size() + d.semisimple_rank();
  if (twice % 2)
    throw DatumError("q(G) is not an integer for '" + d.name() + "': |R+| + dim span R = " +
                     std::to_string(twice));
  return static_cast<long>(twice / 2);
}

std::vector<WeylElement> kostant_set(const BasedRootDatum& d, const LeviDescriptor& levi) {
  std::vector<size_t> checks = levi.imaginary;
  checks.insert(checks.end(), levi.real.begin(), levi.real.end());
  for (size_t i : checks)
    if (i >= d.roots().size() || !d.is_positive(i))
      throw DatumError("Levi '" + levi.name + "' lists a root index that is not a positive root");
  std::vector<WeylElement> out;
  for (const auto& w : weyl_group(d)) {
    const WeylElement inv = inverse(w);
    bool ok = true;
    for (size_t i : checks) {
      const auto j = d.find_root(act(inv, to_rat(d.roots()[i])));
      if (!j || !d.is_positive(*j)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(w);
  }
  return out;
}

Rat inner(const BasedRootDatum& d, const Weight& a, const Weight& b) {
  d.check_weight(a);
  d.check_weight(b);
  const Vec pa = d.canonical(a.coords);
  const Vec pb = d.canonical(b.coords);
  const Mat& s = d.lattice().inner;
  if (s.empty()) return dot(pa, pb);
  Rat total;
  for (size_t i = 0; i < pa.size(); ++i)
    for (size_t j = 0; j < pb.size(); ++j) total += pa[i] * s[i][j] * pb[j];
  return total;
}

namespace builtin {

namespace {

std::vector<IVec> with_negatives(std::vector<IVec> pos) {
  const size_t n = pos.size();
  for (size_t i = 0; i < n; ++i) {
    IVec v = pos[i];
    for (auto& x : v) x = -x;
    pos.push_back(v);
  }
  return pos;
}

}  // namespace

BasedRootDatum sl2() {
  auto lat = std::make_shared<Lattice>();
  lat->id = "sl2";
  lat->rank = 1;
  return BasedRootDatum("sl2", lat, with_negatives({{2}}), with_negatives({{1}}), {0});
}

// Ambient Z^4 with e1..e4; X* is the quotient by e1-e2-e3+e4 and X_* the
// kernel of the same vector.
BasedRootDatum gsp4() {
  auto lat = std::make_shared<Lattice>();
  lat->id = "gsp4";
  lat->rank = 4;
  lat->char_relations = {{1, -1, -1, 1}};
  lat->cochar_kernel = {{1, -1, -1, 1}};
  return BasedRootDatum(
      "gsp4", lat, with_negatives({{1, -1, 0, 0}, {0, 1, -1, 0}, {1, 0, -1, 0}, {1, 0, 0, -1}}),
      with_negatives({{1, -1, 1, -1}, {0, 1, -1, 0}, {1, 1, -1, -1}, {1, 0, 0, -1}}), {0, 1});
}

// P(GL2 x GL2): X* = {x : x1+x2 = x3+x4} in Z^4, X_* = Z^4 / (1,1,-1,-1).
BasedRootDatum h() {
  auto lat = std::make_shared<Lattice>();
  lat->id = "h";
  lat->rank = 4;
  lat->char_kernel = {{1, 1, -1, -1}};
  lat->cochar_relations = {{1, 1, -1, -1}};
  return BasedRootDatum("h", lat, with_negatives({{1, -1, 0, 0}, {0, 0, 1, -1}}),
                        with_negatives({{1, -1, 0, 0}, {0, 0, 1, -1}}), {0, 1});
}

LeviDescriptor sl2_levi_g() { return {"G", {0}, {}, 0}; }
LeviDescriptor sl2_levi_a() { return {"A", {}, {0}, 1}; }
LeviDescriptor gsp4_levi_g() { return {"G", {0, 1, 2, 3}, {}, 0}; }
LeviDescriptor gsp4_levi_m1() { return {"M1", {0}, {2}, 1}; }
LeviDescriptor gsp4_levi_m2() { return {"M2", {1}, {3}, 1}; }
LeviDescriptor gsp4_levi_a() { return {"A", {}, {0, 1, 2, 3}, 2}; }
LeviDescriptor h_levi_h() { return {"H", {0, 1}, {}, 0}; }
LeviDescriptor h_levi_m1() { return {"M1_H", {0}, {1}, 1}; }
LeviDescriptor h_levi_m2() { return {"M2_H", {1}, {0}, 1}; }
LeviDescriptor h_levi_a() { return {"A_H", {}, {0, 1}, 2}; }

}  // namespace builtin

}  // namespace stabletrace
