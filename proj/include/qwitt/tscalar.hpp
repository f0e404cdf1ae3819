#pragma once

#include <string>
#include <vector>

#include "qwitt/scalar.hpp"

namespace qwitt {

/// Polynomial in an extra indeterminate t over a ScalarField. Used for
/// module matrices whose entries depend on the e(0)-eigenvalue t, so that a
/// single computation covers every value of t.
class TScalar {
 public:
  TScalar() = default;
  explicit TScalar(const ScalarField& f) : field_(f) {}
  TScalar(const Scalar& s) : field_(s.field()) {  // NOLINT: implicit on purpose
    if (!s.is_zero()) c_.push_back(s);
  }

  static TScalar t(const ScalarField& f) {
    TScalar r(f);
    r.c_ = {Scalar(f), Scalar::from_int(f, 1)};
    return r;
  }

  const ScalarField& field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  /// Coefficient of t^k.
  Scalar coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Scalar(field_); }
  bool is_constant() const { return c_.size() <= 1; }
  Scalar constant_term() const { return coeff(0); }

  /// Substitute a value for t.
  Scalar at(const Scalar& v) const {
    Scalar acc(field_);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * v + c_[i];
    return acc;
  }

  TScalar& operator+=(const TScalar& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(field_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  TScalar& operator-=(const TScalar& o) { return *this += -o; }
  friend TScalar operator+(TScalar a, const TScalar& b) { return a += b; }
  friend TScalar operator-(TScalar a, const TScalar& b) { return a -= b; }
  friend TScalar operator-(TScalar a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend TScalar operator*(const TScalar& a, const TScalar& b) {
    TScalar r(a.field_);
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Scalar(a.field_));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
  }
  TScalar& operator*=(const TScalar& o) { return *this = *this * o; }
  friend bool operator==(const TScalar& a, const TScalar& b) { return a.c_ == b.c_; }

  std::string to_string() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  ScalarField field_;
  std::vector<Scalar> c_;
};

std::ostream& operator<<(std::ostream& os, const TScalar& s);

}  // namespace qwitt
