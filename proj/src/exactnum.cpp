#include "stabletrace/exactnum.hpp"

#include <cctype>
#include <mutex>
#include <ostream>
#include <sstream>

namespace stabletrace {

Rat::Rat(const Int& num, const Int& den) {
  if (den == 0) throw ArithmeticError("division by zero");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto to_int = [](std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return Int(std::string(s));
  };
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!valid_int(num)) throw ArithmeticError("malformed rational '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rat(to_int(num));
  const auto den = text.substr(slash + 1);
  if (!valid_int(den) || den[0] == '-' || den[0] == '+')
    throw ArithmeticError("malformed rational '" + std::string(text) + "'");
  return Rat(to_int(num), to_int(den));
}

Int Rat::to_int() const {
  if (!is_integer()) throw ArithmeticError("expected an integer, got " + str());
  return q_.get_num();
}

long Rat::to_long() const {
  const Int v = to_int();
  if (!v.fits_slong_p()) throw ArithmeticError("integer out of range: " + v.get_str());
  return v.get_si();
}

std::string Rat::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rat::to_decimal(int digits) const {
  if (digits < 0) digits = 0;
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Int num = abs(q_.get_num()) * scale;
  const Int& den = q_.get_den();
  Int quot = num / den;
  const Int rem = num - quot * den;
  if (2 * rem >= den) ++quot;
  std::string s = quot.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<size_t>(digits)) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  if (sign() < 0 && quot != 0) s.insert(0, "-");
  return s;
}

Rat Rat::operator-() const {
  Rat r;
  r.q_ = -q_;
  return r;
}

Rat& Rat::operator+=(const Rat& o) {
  q_ += o.q_;
  return *this;
}

Rat& Rat::operator-=(const Rat& o) {
  q_ -= o.q_;
  return *this;
}

Rat& Rat::operator*=(const Rat& o) {
  q_ *= o.q_;
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw ArithmeticError("division by zero");
  q_ /= o.q_;
  return *this;
}

Rat abs(const Rat& x) { return x.sign() < 0 ? -x : x; }

Rat pow(const Rat& base, long exponent) {
  if (exponent < 0) return Rat(1) / pow(base, -exponent);
  Rat result(1);
  Rat b = base;
  for (unsigned long e = static_cast<unsigned long>(exponent); e; e >>= 1) {
    if (e & 1) result *= b;
    b *= b;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat rat_arith(const Rat& a, const Rat& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw ArithmeticError("unknown arithmetic operation");
}

namespace {

Int binomial(unsigned n, unsigned k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

// sum_{k=0}^{n} C(n+1, k) B_k = 0 for n >= 1. Values are cached since the
// recurrence is quadratic.
Rat bernoulli(unsigned n) {
  static std::mutex mu;
  static std::vector<Rat> cache{Rat(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= n) {
    const unsigned m = static_cast<unsigned>(cache.size());
    Rat acc;
    for (unsigned k = 0; k < m; ++k) acc += Rat(binomial(m + 1, k)) * cache[k];
    cache.push_back(-acc / Rat(static_cast<long>(m) + 1));
  }
  return cache[n];
}

std::vector<Int> cyclotomic_polynomial(unsigned m) {
  if (m == 0) throw ArithmeticError("cyclotomic polynomial of order 0");
  // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d, by exact long division.
  std::vector<Int> num(m + 1);
  num[0] = -1;
  num[m] = 1;
  for (unsigned d = 1; d < m; ++d) {
    if (m % d) continue;
    const auto div = cyclotomic_polynomial(d);
    std::vector<Int> q(num.size() - div.size() + 1);
    for (size_t i = q.size(); i-- > 0;) {
      q[i] = num[i + div.size() - 1];  // divisor is monic
      for (size_t j = 0; j < div.size(); ++j) num[i + j] -= q[i] * div[j];
    }
    num = std::move(q);
  }
  return num;
}

CycElt::CycElt(unsigned order) : coeffs_(order) {
  if (order == 0) throw ArithmeticError("CycElt order must be positive");
}

CycElt CycElt::integer(unsigned order, const Int& value) {
  CycElt r(order);
  r.coeffs_[0] = value;
  return r;
}

CycElt CycElt::zeta_power(unsigned order, long long k) {
  CycElt r(order);
  r.add_term(k, 1);
  return r;
}

void CycElt::add_term(long long k, const Int& c) {
  const long long m = order();
  coeffs_[static_cast<size_t>(((k % m) + m) % m)] += c;
}

void CycElt::check_order(const CycElt& o) const {
  if (o.order() != order())
    throw ArithmeticError("CycElt order mismatch: " + std::to_string(order()) + " vs " +
                          std::to_string(o.order()));
}

CycElt& CycElt::operator+=(const CycElt& o) {
  check_order(o);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycElt& CycElt::operator-=(const CycElt& o) {
  check_order(o);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CycElt CycElt::operator-() const {
  CycElt r(order());
  for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = -coeffs_[i];
  return r;
}

CycElt operator*(const CycElt& a, const CycElt& b) {
  a.check_order(b);
  const size_t m = a.coeffs_.size();
  CycElt r(a.order());
  for (size_t i = 0; i < m; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < m; ++j) r.coeffs_[(i + j) % m] += a.coeffs_[i] * b.coeffs_[j];
  }
  return r;
}

CycElt operator*(CycElt a, const Int& c) {
  for (auto& x : a.coeffs_) x *= c;
  return a;
}

std::vector<Int> CycElt::reduced() const {
  const auto phi = cyclotomic_polynomial(order());
  const size_t deg = phi.size() - 1;
  std::vector<Int> r = coeffs_;
  for (size_t i = r.size(); i-- > deg;) {
    const Int c = r[i];
    if (c == 0) continue;
    for (size_t j = 0; j <= deg; ++j) r[i - deg + j] -= c * phi[j];
  }
  r.resize(deg);
  return r;
}

bool CycElt::is_zero() const {
  for (const auto& c : reduced())
    if (c != 0) return false;
  return true;
}

bool operator==(const CycElt& a, const CycElt& b) { return (a - b).is_zero(); }

Int cyc_reduce_to_int(const CycElt& x) {
  const auto r = x.reduced();
  bool integral = true;
  for (size_t i = 1; i < r.size(); ++i)
    if (r[i] != 0) integral = false;
  if (!integral) {
    std::ostringstream msg;
    msg << "cyclotomic element of order " << x.order()
        << " is not a rational integer; residual coefficients of zeta^1..zeta^"
        << r.size() - 1 << ": [";
    for (size_t i = 1; i < r.size(); ++i) msg << (i > 1 ? ", " : "") << r[i].get_str();
    msg << "]";
    throw ArithmeticError(msg.str());
  }
  return r.empty() ? Int(0) : r[0];
}

}  // namespace stabletrace
