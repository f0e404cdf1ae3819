#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "qwitt/scalar.hpp"

namespace qwitt {

enum class Family { E, L, C };

/// A homogeneous basis vector: e(i) (Witt generator, plain or divided),
/// L(j) (quantum base space generator) or C (the Virasoro central element).
struct BasisElement {
  Family family = Family::E;
  long long index = 0;

  static BasisElement e(long long i) { return {Family::E, i}; }
  static BasisElement L(long long j) { return {Family::L, j}; }
  static BasisElement central() { return {Family::C, 0}; }

  long long degree() const { return family == Family::C ? 0 : index; }
  std::string to_string() const;

  // E's by index, then L's by index, then C: this is also the PBW order.
  friend auto operator<=>(const BasisElement&, const BasisElement&) = default;
};

/// Finite linear combination of basis elements.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(const ScalarField& f) : field_(f) {}
  static AlgebraElement basis(const ScalarField& f, const BasisElement& b, const Scalar& c);
  static AlgebraElement basis(const ScalarField& f, const BasisElement& b) {
    return basis(f, b, Scalar::from_int(f, 1));
  }

  const ScalarField& field() const { return field_; }
  const std::map<BasisElement, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const BasisElement& b) const;

  void add_term(const BasisElement& b, const Scalar& c);
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator-(const AlgebraElement& a);
  friend AlgebraElement operator*(const Scalar& s, const AlgebraElement& a);
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.terms_ == b.terms_; }

  /// Homogeneous components by degree.
  std::map<long long, AlgebraElement> components() const;

  std::string to_string() const;

 private:
  ScalarField field_;
  std::map<BasisElement, Scalar> terms_;
};

std::ostream& operator<<(std::ostream& os, const BasisElement& b);
std::ostream& operator<<(std::ostream& os, const AlgebraElement& a);

}  // namespace qwitt
