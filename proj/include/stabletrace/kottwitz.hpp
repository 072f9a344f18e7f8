#pragma once

#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "stabletrace/arthurphi.hpp"
#include "stabletrace/catalog.hpp"

namespace stabletrace {

struct Term {
  std::string label;
  Rat value;
  std::string citation;
};

struct TermReport {
  std::string group;
  std::string kind;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<Term> terms;
  Rat total;
  std::vector<std::string> flags;

  /// Appends a term and keeps total equal to the sum of the terms.
  void add(Term t);
  bool consistent() const;
};

struct OrbitalValue {
  std::string gamma_label;
  /// SO_gamma(f) / vbar(T_gamma) in the form 2 chi_K(T) / (tau(T) d(T)).
  Rat value;
  std::string citation;
};

enum class PacketMember { pi_g, pi_g_prime };
enum class H1Kind { holomorphic, large };

/// (-1)^{dim A_M/A_G} k(M)/k(G) (n^G_M)^{-1} chi_K(M)/d(M) * sign * phi_value.
/// sign is the pairing of the pseudocoefficient with the stable character:
/// (-1)^{q(G)} on G, and +-(-1)^{q(G)} through the transfer to H.
Rat st_central_term(const GroupProfile& profile, size_t levi_index, const Rat& phi_value, int sign);

OrbitalValue sl2_elliptic_orbital(const GroupCatalog& catalog, const std::string& gamma_label);

TermReport sl2_st_total(const GroupCatalog& catalog, long n);
TermReport gsp4_central_stable(const GroupCatalog& catalog, long a, long b, long t = 0);
TermReport gsp4_central_endoscopic(const GroupCatalog& catalog, long a, long b,
                                   PacketMember member = PacketMember::pi_g, long t = 0);

/// Reused evaluators for sweeps over many (a, b).
class Gsp4Central {
 public:
  explicit Gsp4Central(const GroupCatalog& catalog);
  TermReport stable(long a, long b, long t = 0) const;
  TermReport endoscopic(long a, long b, PacketMember member, long t = 0) const;

 private:
  const GroupCatalog* catalog_;
  PhiTable g_;
  PhiTable h_;
};

/// Printed closed forms of the stable and endoscopic central sums.
Rat gsp4_stable_closed_form(long a, long b);
Rat gsp4_endoscopic_closed_form(long a, long b);
Rat wakatsuki_h1(H1Kind kind, long a, long b);

struct Gsp4Row {
  long a = 0;
  long b = 0;
  Rat stable;
  Rat endoscopic;
  Rat h1_hol;
  Rat h1_large;
};

/// Odd pairs a > b > 0 with a <= a_max, ordered by a then b.
std::vector<std::pair<long, long>> odd_pairs(long a_max);
std::vector<Gsp4Row> gsp4_central_grid(const GroupCatalog& catalog,
                                       const std::vector<std::pair<long, long>>& pairs);
std::vector<Gsp4Row> gsp4_central_grid_serial(const GroupCatalog& catalog,
                                              const std::vector<std::pair<long, long>>& pairs);

struct Theorem1Failure {
  long a = 0;
  long b = 0;
  std::string identity;
  Rat lhs;
  Rat rhs;
};

struct Theorem1Result {
  long a_max = 0;
  size_t pairs = 0;
  size_t hol_failures = 0;
  size_t large_failures = 0;
  /// The first failures in (a, b) order, at most kMaxExamples.
  std::vector<Theorem1Failure> examples;
  bool ok() const { return hol_failures == 0 && large_failures == 0; }
  static constexpr size_t kMaxExamples = 25;
};

/// stable + endoscopic = H1^hol and stable - endoscopic = H1^large for all
/// odd a > b > 0 with a <= a_max. perturb flips the endoscopic sign.
Theorem1Result verify_theorem1(const GroupCatalog& catalog, long a_max, bool perturb = false);
Theorem1Result verify_theorem1_serial(const GroupCatalog& catalog, long a_max, bool perturb = false);

/// coeff[i][j] multiplies a^i b^j.
using PolyAB = std::array<std::array<Rat, 5>, 5>;

/// Exact coefficients of a polynomial of degree <= 4 in each variable,
/// interpolated on odd a in 11..19 and odd b in 1..9 and checked at one
/// further point.
PolyAB interpolate_ab(const std::function<Rat(long, long)>& f);
PolyAB wakatsuki_coefficients(H1Kind kind);
PolyAB poly_sub(const PolyAB& x, const PolyAB& y);
bool poly_is_zero(const PolyAB& p);
std::string poly_str(const PolyAB& p);

struct Theorem1Polynomial {
  PolyAB sum;         // stable + endoscopic
  PolyAB difference;  // stable - endoscopic
  PolyAB hol_residual;
  PolyAB large_residual;
  bool hol_ok() const { return poly_is_zero(hol_residual); }
  bool large_ok() const { return poly_is_zero(large_residual); }
};

Theorem1Polynomial theorem1_polynomial_check(const GroupCatalog& catalog);

}  // namespace stabletrace
