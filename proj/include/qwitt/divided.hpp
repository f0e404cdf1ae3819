#pragma once

#include <map>
#include <string>

#include "qwitt/scalar.hpp"

namespace qwitt {

/// Element of K[x, x^-1]: exponent -> nonzero coefficient.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const ScalarField& f) : field_(f) {}
  static LaurentPoly monomial(const ScalarField& f, long long n, const Scalar& c);
  static LaurentPoly monomial(const ScalarField& f, long long n) {
    return monomial(f, n, Scalar::from_int(f, 1));
  }

  const ScalarField& field() const { return field_; }
  const std::map<long long, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(long long n) const;

  void add_term(long long n, const Scalar& c);
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const Scalar& s, const LaurentPoly& p);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  ScalarField field_;
  std::map<long long, Scalar> terms_;
};

/// Element of the divided power algebra A^q(1), or of its truncation
/// A^e(1,1) in root-of-unity mode: exponent a -> coefficient of x^(a).
class DividedElement {
 public:
  DividedElement() = default;
  explicit DividedElement(const ScalarField& f) : field_(f) {}
  /// Throws std::invalid_argument for a < 0, or a >= l at a root of unity.
  static DividedElement monomial(const ScalarField& f, long long a, const Scalar& c);
  static DividedElement monomial(const ScalarField& f, long long a) {
    return monomial(f, a, Scalar::from_int(f, 1));
  }

  const ScalarField& field() const { return field_; }
  const std::map<long long, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(long long a) const;
  /// Largest legal exponent plus one (l), or 0 when unbounded.
  long long bound() const { return field_.order(); }
  bool in_range(long long a) const { return a >= 0 && (bound() == 0 || a < bound()); }

  /// Adds c*x^(a); exponents outside the legal range are identified with 0.
  void add_term(long long a, const Scalar& c);
  DividedElement& operator+=(const DividedElement& o);
  DividedElement& operator-=(const DividedElement& o);
  friend DividedElement operator+(DividedElement a, const DividedElement& b) { return a += b; }
  friend DividedElement operator-(DividedElement a, const DividedElement& b) { return a -= b; }
  friend DividedElement operator*(const Scalar& s, const DividedElement& u);
  friend bool operator==(const DividedElement& a, const DividedElement& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  ScalarField field_;
  std::map<long long, Scalar> terms_;
};

/// x^n -> (n)_q x^(n-1).
LaurentPoly jackson_derivative(const LaurentPoly& p);
/// x^n -> q^n x^n.
LaurentPoly tau(const LaurentPoly& p);
/// x^(a) -> q^a x^(a).
DividedElement tau(const DividedElement& u);
/// The Witt operator e_n = x^(n+1) d_q on Laurent polynomials.
LaurentPoly apply_witt(long long n, const LaurentPoly& p);

/// x^(a) x^(b) = [a+b, a]_q x^(a+b), truncated at x^(l) in root-of-unity
/// mode. If dropped_vanish is given it is set to false when a truncated
/// coefficient was nonzero before being dropped.
DividedElement dp_multiply(const DividedElement& u, const DividedElement& v, bool* dropped_vanish = nullptr);
/// d_q x^(a) = x^(a-1), d_q x^(0) = 0.
DividedElement dp_derivative(const DividedElement& u);
/// e_(n) = x^(n+1) d_q. Requires n >= -1, and n <= l-2 at a root of unity;
/// throws std::invalid_argument otherwise.
DividedElement apply_e(long long n, const DividedElement& u);

bool verify_skew_leibniz(const LaurentPoly& p, const LaurentPoly& r);
bool verify_skew_leibniz(const DividedElement& u, const DividedElement& v);

/// Generic mode: x^(a) as the Laurent polynomial x^a / (a)_q!.
LaurentPoly to_laurent(const DividedElement& u);

}  // namespace qwitt
