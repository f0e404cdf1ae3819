#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

namespace qwitt {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial. Coefficients are stored low degree first and
/// the vector never ends in a zero, so the zero polynomial is the empty vector.
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(const T& v) { return Poly(std::vector<T>{v}); }
  static Poly monomial(const T& v, std::size_t k) {
    std::vector<T> c(k + 1, T(0));
    c[k] = v;
    return Poly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }
  const T& operator[](std::size_t i) const { return c_[i]; }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const T& lead() const { return c_.back(); }
  const std::vector<T>& coeffs() const { return c_; }

  std::size_t valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (sgn(c_[i]) != 0) return i;
    return 0;
  }
  bool is_monomial() const { return !c_.empty() && valuation() + 1 == c_.size(); }
  bool is_constant() const { return c_.size() <= 1; }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const T& s) {
    if (sgn(s) == 0) {
      c_.clear();
      return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend Poly operator*(Poly a, const T& s) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (sgn(a.c_[i]) == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Multiply by x^k.
  Poly shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<T> r(k, T(0));
    r.insert(r.end(), c_.begin(), c_.end());
    return Poly(std::move(r));
  }
  /// Divide by x^k; the caller guarantees valuation() >= k.
  Poly unshifted(std::size_t k) const {
    if (k >= c_.size()) return Poly();
    return Poly(std::vector<T>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
  }

  /// Horner evaluation at a point of any ring V that accepts T coefficients.
  template <class V, class Lift>
  V evaluate(const V& x, const V& zero, Lift lift) const {
    V acc = zero;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + lift(c_[i]);
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }
  std::vector<T> c_;
};

using ZPoly = Poly<Integer>;
using QPoly = Poly<Rational>;

/// Gcd of the coefficients, nonnegative; zero for the zero polynomial.
Integer content(const ZPoly& p);
ZPoly primitive_part(const ZPoly& p);
/// Greatest common divisor in Z[x], primitive with positive leading coefficient.
ZPoly gcd(const ZPoly& a, const ZPoly& b);
/// Exact quotient a / b in Z[x]; throws std::domain_error if b does not divide a.
ZPoly exact_divide(const ZPoly& a, const ZPoly& b);

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly to_qpoly(const ZPoly& p);
/// Writes p = num / den with num integral, den > 0 and gcd(content(num), den) = 1.
std::pair<ZPoly, Integer> clear_denominators(const QPoly& p);
/// Inverse of a modulo m in Q[x]/(m); throws std::domain_error if not invertible.
QPoly inverse_mod(const QPoly& a, const QPoly& m);

/// The l-th cyclotomic polynomial.
ZPoly cyclotomic_polynomial(int l);

/// p * (1 - x^k) and p / (1 - x^k) (the latter exact), both in Z[x], k >= 1.
ZPoly times_one_minus_power(const ZPoly& p, std::size_t k);
ZPoly divide_one_minus_power(const ZPoly& p, std::size_t k);

}  // namespace qwitt
