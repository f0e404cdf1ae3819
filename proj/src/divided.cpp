#include "qwitt/divided.hpp"

#include <stdexcept>

#include "qwitt/qnumbers.hpp"

namespace qwitt {

namespace {

void accumulate(std::map<long long, Scalar>& terms, long long k, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms.find(k);
  if (it == terms.end()) {
    terms.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

std::string format(const std::map<long long, Scalar>& terms, bool divided) {
  std::vector<std::string> pieces;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const std::string mono = divided ? "x^(" + std::to_string(it->first) + ")" : "x^" + std::to_string(it->first);
    pieces.push_back(coefficient_times(it->second, mono));
  }
  return join_signed(pieces);
}

}  // namespace

LaurentPoly LaurentPoly::monomial(const ScalarField& f, long long n, const Scalar& c) {
  LaurentPoly p(f);
  p.add_term(n, c);
  return p;
}

Scalar LaurentPoly::coeff(long long n) const {
  auto it = terms_.find(n);
  return it == terms_.end() ? Scalar(field_) : it->second;
}

void LaurentPoly::add_term(long long n, const Scalar& c) { accumulate(terms_, n, c); }

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [n, c] : o.terms_) add_term(n, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [n, c] : o.terms_) add_term(n, -c);
  return *this;
}

LaurentPoly operator*(const Scalar& s, const LaurentPoly& p) {
  LaurentPoly r(p.field_);
  for (const auto& [n, c] : p.terms_) r.add_term(n, s * c);
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r(a.field_);
  for (const auto& [m, c] : a.terms_)
    for (const auto& [n, d] : b.terms_) r.add_term(m + n, c * d);
  return r;
}

std::string LaurentPoly::to_string() const { return format(terms_, false); }

DividedElement DividedElement::monomial(const ScalarField& f, long long a, const Scalar& c) {
  DividedElement u(f);
  if (!u.in_range(a))
    throw std::invalid_argument("divided power exponent " + std::to_string(a) + " out of range for " + f.to_string());
  u.add_term(a, c);
  return u;
}

Scalar DividedElement::coeff(long long a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? Scalar(field_) : it->second;
}

void DividedElement::add_term(long long a, const Scalar& c) {
  if (in_range(a)) accumulate(terms_, a, c);
}

DividedElement& DividedElement::operator+=(const DividedElement& o) {
  for (const auto& [a, c] : o.terms_) add_term(a, c);
  return *this;
}

DividedElement& DividedElement::operator-=(const DividedElement& o) {
  for (const auto& [a, c] : o.terms_) add_term(a, -c);
  return *this;
}

DividedElement operator*(const Scalar& s, const DividedElement& u) {
  DividedElement r(u.field_);
  for (const auto& [a, c] : u.terms_) r.add_term(a, s * c);
  return r;
}

std::string DividedElement::to_string() const { return format(terms_, true); }

LaurentPoly jackson_derivative(const LaurentPoly& p) {
  LaurentPoly r(p.field());
  for (const auto& [n, c] : p.terms()) r.add_term(n - 1, q_integer(p.field(), n) * c);
  return r;
}

LaurentPoly tau(const LaurentPoly& p) {
  LaurentPoly r(p.field());
  for (const auto& [n, c] : p.terms()) r.add_term(n, Scalar::q_power(p.field(), n) * c);
  return r;
}

DividedElement tau(const DividedElement& u) {
  DividedElement r(u.field());
  for (const auto& [a, c] : u.terms()) r.add_term(a, Scalar::q_power(u.field(), a) * c);
  return r;
}

LaurentPoly apply_witt(long long n, const LaurentPoly& p) {
  return LaurentPoly::monomial(p.field(), n + 1) * jackson_derivative(p);
}

DividedElement dp_multiply(const DividedElement& u, const DividedElement& v, bool* dropped_vanish) {
  const ScalarField& f = u.field();
  DividedElement r(f);
  for (const auto& [a, c] : u.terms())
    for (const auto& [b, d] : v.terms()) {
      const Scalar coeff = gauss_binomial(f, a + b, a) * c * d;
      if (r.in_range(a + b))
        r.add_term(a + b, coeff);
      else if (dropped_vanish && !coeff.is_zero())
        *dropped_vanish = false;
    }
  return r;
}

DividedElement dp_derivative(const DividedElement& u) {
  DividedElement r(u.field());
  for (const auto& [a, c] : u.terms()) r.add_term(a - 1, c);
  return r;
}

DividedElement apply_e(long long n, const DividedElement& u) {
  const long long l = u.field().order();
  if (n < -1 || (l != 0 && n > l - 2))
    throw std::invalid_argument("e(" + std::to_string(n) + ") is not defined for " + u.field().to_string());
  return dp_multiply(DividedElement::monomial(u.field(), n + 1), dp_derivative(u));
}

bool verify_skew_leibniz(const LaurentPoly& p, const LaurentPoly& r) {
  return jackson_derivative(p * r) == jackson_derivative(p) * r + tau(p) * jackson_derivative(r);
}

bool verify_skew_leibniz(const DividedElement& u, const DividedElement& v) {
  return dp_derivative(dp_multiply(u, v)) ==
         dp_multiply(dp_derivative(u), v) + dp_multiply(tau(u), dp_derivative(v));
}

LaurentPoly to_laurent(const DividedElement& u) {
  if (!u.field().is_generic()) throw std::logic_error("x^(a) = x^a/(a)! needs generic mode");
  LaurentPoly p(u.field());
  for (const auto& [a, c] : u.terms()) p.add_term(a, c / q_factorial(u.field(), a));
  return p;
}

}  // namespace qwitt
