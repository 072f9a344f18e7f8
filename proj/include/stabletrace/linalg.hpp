#pragma once

#include <optional>
#include <vector>

#include "stabletrace/exactnum.hpp"

namespace stabletrace {

using IVec = std::vector<long long>;
using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;  // row-major

Vec to_rat(const IVec& v);
Rat dot(const Vec& a, const Vec& b);
Rat dot(const Vec& a, const IVec& b);
long long dot(const IVec& a, const IVec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rat& c, const Vec& a);
bool is_zero(const Vec& v);
bool is_integral(const Vec& v);
/// Throws ArithmeticError if a coordinate is not an integer.
IVec to_int(const Vec& v);

/// Rank over Q.
size_t rank(Mat rows);

/// Solves A x = b for square invertible A; nullopt when A is singular.
std::optional<Vec> solve(Mat a, Vec b);

/// Coordinates c with sum_i c_i basis[i] = v, or nullopt if v is outside the
/// span. The basis rows must be linearly independent.
std::optional<Vec> coordinates(const std::vector<Vec>& basis, const Vec& v);

/// Gram-Schmidt orthogonal basis (rational, unnormalized) of the span.
std::vector<Vec> orthogonal_basis(const std::vector<Vec>& rows);

/// v minus its orthogonal projection onto span(ortho); ortho must be pairwise
/// orthogonal, as produced by orthogonal_basis.
Vec project_away(const Vec& v, const std::vector<Vec>& ortho);

}  // namespace stabletrace
