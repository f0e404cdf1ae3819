#include "qwitt/basis.hpp"

namespace qwitt {

std::string BasisElement::to_string() const {
  switch (family) {
    case Family::E:
      return "e(" + std::to_string(index) + ")";
    case Family::L:
      return "L(" + std::to_string(index) + ")";
    case Family::C:
      return "C";
  }
  return "?";
}

AlgebraElement AlgebraElement::basis(const ScalarField& f, const BasisElement& b, const Scalar& c) {
  AlgebraElement a(f);
  a.add_term(b, c);
  return a;
}

Scalar AlgebraElement::coeff(const BasisElement& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Scalar(field_) : it->second;
}

void AlgebraElement::add_term(const BasisElement& b, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(b);
  if (it == terms_.end()) {
    terms_.emplace(b, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [b, c] : o.terms_) add_term(b, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [b, c] : o.terms_) add_term(b, -c);
  return *this;
}

AlgebraElement operator-(const AlgebraElement& a) {
  AlgebraElement r(a.field_);
  for (const auto& [b, c] : a.terms_) r.terms_.emplace(b, -c);
  return r;
}

AlgebraElement operator*(const Scalar& s, const AlgebraElement& a) {
  AlgebraElement r(a.field_);
  if (s.is_zero()) return r;
  for (const auto& [b, c] : a.terms_) r.terms_.emplace(b, s * c);
  return r;
}

std::map<long long, AlgebraElement> AlgebraElement::components() const {
  std::map<long long, AlgebraElement> out;
  for (const auto& [b, c] : terms_) {
    auto [it, fresh] = out.try_emplace(b.degree(), field_);
    it->second.add_term(b, c);
  }
  return out;
}

std::string AlgebraElement::to_string() const {
  std::vector<std::string> pieces;
  for (const auto& [b, c] : terms_) pieces.push_back(coefficient_times(c, b.to_string()));
  return join_signed(pieces);
}

std::ostream& operator<<(std::ostream& os, const BasisElement& b) { return os << b.to_string(); }
std::ostream& operator<<(std::ostream& os, const AlgebraElement& a) { return os << a.to_string(); }

}  // namespace qwitt
