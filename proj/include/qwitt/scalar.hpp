#pragma once

#include <memory>
#include <ostream>
#include <string>
#include <string_view>

#include "qwitt/poly.hpp"

namespace qwitt {

/// The coefficient field: either the rational functions Q(q), or the
/// cyclotomic field Q(e) = Q[q]/(Phi_l) with e a primitive l-th root of 1.
class ScalarField {
 public:
  ScalarField() = default;  // generic

  static ScalarField generic() { return ScalarField(); }
  /// Throws std::invalid_argument unless l >= 2.
  static ScalarField root_of_unity(int l);

  bool is_generic() const { return ring_ == nullptr; }
  bool is_root_of_unity() const { return ring_ != nullptr; }
  /// l in root-of-unity mode, 0 in generic mode.
  int order() const { return ring_ ? ring_->l : 0; }
  /// Degree of the cyclotomic polynomial, phi(l).
  int phi() const { return ring_ ? ring_->modulus.degree() : 0; }
  const ZPoly& modulus() const;
  const QPoly& rational_modulus() const;

  std::string to_string() const;

  friend bool operator==(const ScalarField& a, const ScalarField& b) { return a.order() == b.order(); }

 private:
  struct Ring {
    int l;
    ZPoly modulus;
    QPoly rational_modulus;
  };
  std::shared_ptr<const Ring> ring_;
};

/// An exact element of a ScalarField in canonical form.
///
/// Generic mode stores num/den in Z[q] with gcd(num, den) = 1, coprime
/// contents and a positive leading denominator coefficient. Root-of-unity
/// mode stores num/den with num in Z[q] reduced modulo Phi_l and den a
/// positive integer coprime to the content of num. Equal values therefore
/// have identical representations.
class Scalar {
 public:
  Scalar() : den_(ZPoly::constant(Integer(1))) {}
  explicit Scalar(const ScalarField& f) : field_(f), den_(ZPoly::constant(Integer(1))) {}

  static Scalar from_int(const ScalarField& f, long long v);
  static Scalar from_integer(const ScalarField& f, const Integer& v);
  static Scalar from_rational(const ScalarField& f, const Rational& v);
  /// The generator q (the root e in root-of-unity mode).
  static Scalar q(const ScalarField& f) { return q_power(f, 1); }
  static Scalar q_power(const ScalarField& f, long long k);
  /// Image of an integer polynomial in q.
  static Scalar from_poly(const ScalarField& f, const ZPoly& p);
  /// Image of sum_i p_i q^(i + shift).
  static Scalar from_laurent(const ScalarField& f, const ZPoly& p, long long shift);
  static Scalar fraction(const ScalarField& f, const ZPoly& num, const ZPoly& den);

  const ScalarField& field() const { return field_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_integer() const;

  const ZPoly& numerator() const { return num_; }
  const ZPoly& denominator() const { return den_; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(Scalar a) {
    a.num_ = -a.num_;
    return a;
  }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Throws std::domain_error for zero.
  Scalar inverse() const;
  Scalar pow(long long k) const;

  /// Substitutes a rational value for q (generic mode only). Throws
  /// std::domain_error when the denominator vanishes there.
  Rational evaluate_at(const Rational& x) const;

  /// If the value is c*q^k (or c*e^k), returns true and fills c and k.
  bool as_monomial(Rational& coeff, long long& exponent) const;

  std::string to_string() const;

 private:
  void canonicalize();
  void require_same_field(const Scalar& o) const;

  ScalarField field_;
  ZPoly num_;
  ZPoly den_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Parses the text produced by Scalar::to_string (sums of c*q^k, fractions
/// (num)/(den), and polynomials in e for root-of-unity mode). Defined with
/// the expression grammar; throws ParseError on malformed input.
Scalar parse_scalar(const ScalarField& f, std::string_view text);

/// Formats sum c_k * var^k for the (coefficient, exponent) pairs given in
/// display order.
std::string format_terms(const std::vector<std::pair<Rational, long long>>& terms, std::string_view var);

/// "c*m" for a coefficient c and a monomial text m, with c parenthesized
/// when it is a sum; an empty monomial stands for 1.
std::string coefficient_times(const Scalar& c, const std::string& mono);
/// Joins signed pieces as "a + b - c".
std::string join_signed(const std::vector<std::string>& pieces);

}  // namespace qwitt
