#include "stabletrace/linalg.hpp"

namespace stabletrace {

Vec to_rat(const IVec& v) {
  Vec r;
  r.reserve(v.size());
  for (long long x : v) r.emplace_back(static_cast<long>(x));
  return r;
}

Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw ArithmeticError("dot product of vectors of different length");
  Rat s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const Vec& a, const IVec& b) { return dot(a, to_rat(b)); }

long long dot(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) throw ArithmeticError("dot product of vectors of different length");
  long long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec add(const Vec& a, const Vec& b) {
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Rat& c, const Vec& a) {
  Vec r = a;
  for (auto& x : r) x *= c;
  return r;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

bool is_integral(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_integer()) return false;
  return true;
}

IVec to_int(const Vec& v) {
  IVec r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(x.to_long());
  return r;
}

size_t rank(Mat rows) {
  if (rows.empty()) return 0;
  const size_t cols = rows[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows.size(); ++c) {
    size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const Rat f = rows[i][c] / rows[r][c];
      for (size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

std::optional<Vec> solve(Mat a, Vec b) {
  const size_t n = a.size();
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c].is_zero()) continue;
      const Rat f = a[i][c] / a[c][c];
      for (size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
      b[i] -= f * b[c];
    }
  }
  for (size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

std::optional<Vec> coordinates(const std::vector<Vec>& basis, const Vec& v) {
  const size_t k = basis.size();
  Mat gram(k, Vec(k));
  Vec rhs(k);
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < k; ++j) gram[i][j] = dot(basis[i], basis[j]);
    rhs[i] = dot(basis[i], v);
  }
  auto c = solve(gram, rhs);
  if (!c) return std::nullopt;
  Vec back(v.size());
  for (size_t i = 0; i < k; ++i) back = add(back, scale((*c)[i], basis[i]));
  if (back != v) return std::nullopt;
  return c;
}

std::vector<Vec> orthogonal_basis(const std::vector<Vec>& rows) {
  std::vector<Vec> out;
  for (const auto& r : rows) {
    Vec u = project_away(r, out);
    if (!is_zero(u)) out.push_back(std::move(u));
  }
  return out;
}

Vec project_away(const Vec& v, const std::vector<Vec>& ortho) {
  Vec r = v;
  for (const auto& u : ortho) r = sub(r, scale(dot(v, u) / dot(u, u), u));
  return r;
}

}  // namespace stabletrace
