#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace stabletrace {

using Int = mpz_class;

/// Raised for arithmetic that has no exact answer (division by zero,
/// non-integral reductions, malformed literals).
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
class Rat {
 public:
  Rat() = default;
  Rat(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
  explicit Rat(const Int& v) : q_(v) {}
  Rat(const Int& num, const Int& den);

  /// Accepts "p", "-p" or "p/q" with optional sign.
  static Rat parse(std::string_view text);

  Int numerator() const { return q_.get_num(); }
  Int denominator() const { return q_.get_den(); }
  bool is_integer() const { return q_.get_den() == 1; }
  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }

  /// Throws ArithmeticError when the value is not an integer.
  Int to_int() const;
  long to_long() const;

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;
  /// Fixed-point approximation rounded half away from zero.
  std::string to_decimal(int digits) const;

  Rat operator-() const;
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return q_; }

 private:
  mpq_class q_;
};

Rat abs(const Rat& x);
/// Integer power; negative exponents invert (and throw on zero base).
Rat pow(const Rat& base, long exponent);
std::ostream& operator<<(std::ostream& os, const Rat& r);

enum class ArithOp { add, sub, mul, div };
Rat rat_arith(const Rat& a, const Rat& b, ArithOp op);

/// Bernoulli number with the convention B_1 = -1/2.
Rat bernoulli(unsigned n);

/// Coefficients of the m-th cyclotomic polynomial, constant term first.
std::vector<Int> cyclotomic_polynomial(unsigned m);

/// Element of Z[x]/(x^m - 1), read as a cyclotomic integer in Z[zeta_m].
///
/// Arithmetic happens modulo x^m - 1. Equality and integrality are decided
/// after reducing modulo the m-th cyclotomic polynomial.
class CycElt {
 public:
  explicit CycElt(unsigned order);
  static CycElt integer(unsigned order, const Int& value);
  /// zeta_m^k for any (possibly negative) k.
  static CycElt zeta_power(unsigned order, long long k);

  unsigned order() const { return static_cast<unsigned>(coeffs_.size()); }
  const std::vector<Int>& coeffs() const { return coeffs_; }

  /// Adds c * zeta^k in place.
  void add_term(long long k, const Int& c);

  CycElt& operator+=(const CycElt& o);
  CycElt& operator-=(const CycElt& o);
  CycElt operator-() const;
  friend CycElt operator+(CycElt a, const CycElt& b) { return a += b; }
  friend CycElt operator-(CycElt a, const CycElt& b) { return a -= b; }
  friend CycElt operator*(const CycElt& a, const CycElt& b);
  friend CycElt operator*(CycElt a, const Int& c);

  /// Canonical representative modulo the cyclotomic polynomial; length phi(m).
  std::vector<Int> reduced() const;
  bool is_zero() const;

  friend bool operator==(const CycElt& a, const CycElt& b);

 private:
  void check_order(const CycElt& o) const;
  std::vector<Int> coeffs_;
};

/// The rational integer represented by x; throws ArithmeticError listing the
/// residual coefficients when x is not in Z.
Int cyc_reduce_to_int(const CycElt& x);

}  // namespace stabletrace
