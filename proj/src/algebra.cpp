#include "qwitt/algebra.hpp"

#include <stdexcept>

#include "qwitt/qnumbers.hpp"
#include "qwitt/virasoro.hpp"

namespace qwitt {

namespace {

bool is_witt_family(AlgebraKind k) { return k != AlgebraKind::QAbelian; }

bool has_l_generators(AlgebraKind k) {
  return k == AlgebraKind::HolomorphQ || k == AlgebraKind::HolomorphEps1 || k == AlgebraKind::QAbelian;
}

// [i+j+1, i+1]_q - [i+j+1, j+1]_q, the divided-power Witt constant.
Scalar divided_constant(const ScalarField& f, long long i, long long j) {
  return gauss_binomial(f, i + j + 1, i + 1) - gauss_binomial(f, i + j + 1, j + 1);
}

}  // namespace

GradedAlgebra::GradedAlgebra(AlgebraKind k, const ScalarField& f, long long size) : kind_(k), field_(f), size_(size) {
  if (!is_finite()) return;
  auto t = std::make_shared<Table>();
  if (is_witt_family(k))
    for (long long i = -1; i <= size_ - 2; ++i) t->basis.push_back(BasisElement::e(i));
  if (has_l_generators(k))
    for (long long j = 0; j < size_; ++j) t->basis.push_back(BasisElement::L(j));
  table_ = t;  // position() needs the basis before the brackets exist
  for (const auto& x : t->basis)
    for (const auto& y : t->basis) t->brackets.push_back(compute_bracket(x, y));
}

GradedAlgebra GradedAlgebra::witt_q(const ScalarField& f) { return GradedAlgebra(AlgebraKind::WittQ, f, 0); }
GradedAlgebra GradedAlgebra::witt_q1(const ScalarField& f) { return GradedAlgebra(AlgebraKind::WittQ1, f, 0); }
GradedAlgebra GradedAlgebra::holomorph_q(const ScalarField& f) { return GradedAlgebra(AlgebraKind::HolomorphQ, f, 0); }

GradedAlgebra GradedAlgebra::witt_eps11(int l) {
  return GradedAlgebra(AlgebraKind::WittEps11, ScalarField::root_of_unity(l), l);
}

GradedAlgebra GradedAlgebra::holomorph_eps1(int l) {
  return GradedAlgebra(AlgebraKind::HolomorphEps1, ScalarField::root_of_unity(l), l);
}

GradedAlgebra GradedAlgebra::virasoro_q() { return GradedAlgebra(AlgebraKind::VirasoroQ, ScalarField::generic(), 0); }

GradedAlgebra GradedAlgebra::q_abelian(const ScalarField& f, long long n) {
  if (n < 0) throw std::invalid_argument("q-abelian dimension must be nonnegative");
  return GradedAlgebra(AlgebraKind::QAbelian, f, n);
}

GradedAlgebra GradedAlgebra::by_name(const std::string& name, const ScalarField& f, long long size) {
  auto need_root = [&] {
    if (!f.is_root_of_unity()) throw std::invalid_argument(name + " needs --mode root with --l");
    return f.order();
  };
  if (name == "witt-q") return witt_q(f);
  if (name == "witt-q1") return witt_q1(f);
  if (name == "witt-eps") return witt_eps11(need_root());
  if (name == "holomorph-q") return holomorph_q(f);
  if (name == "holomorph-eps") return holomorph_eps1(need_root());
  if (name == "q-abelian") return q_abelian(f, size);
  if (name == "virasoro-q") {
    if (!f.is_generic()) throw std::invalid_argument("virasoro-q is only defined for generic q");
    return virasoro_q();
  }
  throw std::invalid_argument("unknown algebra '" + name + "'");
}

std::string GradedAlgebra::name() const {
  switch (kind_) {
    case AlgebraKind::WittQ:
      return "witt-q";
    case AlgebraKind::WittQ1:
      return "witt-q1";
    case AlgebraKind::WittEps11:
      return "witt-eps";
    case AlgebraKind::VirasoroQ:
      return "virasoro-q";
    case AlgebraKind::HolomorphQ:
      return "holomorph-q";
    case AlgebraKind::HolomorphEps1:
      return "holomorph-eps";
    case AlgebraKind::QAbelian:
      return "q-abelian";
  }
  return "?";
}

bool GradedAlgebra::is_finite() const {
  return kind_ == AlgebraKind::WittEps11 || kind_ == AlgebraKind::HolomorphEps1 ||
         (kind_ == AlgebraKind::QAbelian && size_ > 0);
}

bool GradedAlgebra::contains(const BasisElement& b) const {
  switch (b.family) {
    case Family::C:
      return kind_ == AlgebraKind::VirasoroQ && b.index == 0;
    case Family::L:
      if (!has_l_generators(kind_) || b.index < 0) return false;
      return kind_ == AlgebraKind::HolomorphQ || size_ == 0 || b.index < size_;
    case Family::E:
      switch (kind_) {
        case AlgebraKind::WittQ:
        case AlgebraKind::VirasoroQ:
          return true;
        case AlgebraKind::WittQ1:
        case AlgebraKind::HolomorphQ:
          return b.index >= -1;
        case AlgebraKind::WittEps11:
        case AlgebraKind::HolomorphEps1:
          return b.index >= -1 && b.index <= size_ - 2;
        case AlgebraKind::QAbelian:
          return false;
      }
  }
  return false;
}

void GradedAlgebra::require(const BasisElement& b) const {
  if (!contains(b)) throw std::invalid_argument(b.to_string() + " is not a basis element of " + name());
}

const std::vector<BasisElement>& GradedAlgebra::basis() const {
  if (!table_) throw std::logic_error(name() + " is infinite-dimensional; use a window");
  return table_->basis;
}

std::vector<BasisElement> GradedAlgebra::window(long long lo, long long hi) const {
  std::vector<BasisElement> out;
  if (is_witt_family(kind_))
    for (long long i = lo; i <= hi; ++i)
      if (contains(BasisElement::e(i))) out.push_back(BasisElement::e(i));
  if (has_l_generators(kind_))
    for (long long j = lo; j <= hi; ++j)
      if (contains(BasisElement::L(j))) out.push_back(BasisElement::L(j));
  if (kind_ == AlgebraKind::VirasoroQ && lo <= 0 && 0 <= hi) out.push_back(BasisElement::central());
  return out;
}

std::size_t GradedAlgebra::position(const BasisElement& b) const {
  // e(-1..l-2) first, then L(0..)
  if (b.family == Family::E) return static_cast<std::size_t>(b.index + 1);
  const std::size_t offset = is_witt_family(kind_) ? static_cast<std::size_t>(size_) : 0;
  return offset + static_cast<std::size_t>(b.index);
}

AlgebraElement GradedAlgebra::bracket(const BasisElement& x, const BasisElement& y) const {
  require(x);
  require(y);
  if (table_ && table_->brackets.size() == table_->basis.size() * table_->basis.size())
    return table_->brackets[position(x) * table_->basis.size() + position(y)];
  return compute_bracket(x, y);
}

AlgebraElement GradedAlgebra::compute_bracket(const BasisElement& x, const BasisElement& y) const {
  const ScalarField& f = field_;
  AlgebraElement r(f);
  if (x == y || x.family == Family::C || y.family == Family::C || kind_ == AlgebraKind::QAbelian) return r;
  if (x.family == Family::L && y.family == Family::L) return r;
  if (x.family == Family::L) return -compute_bracket(y, x);

  const long long i = x.index, j = y.index;
  if (y.family == Family::L) {
    // {e_(i), L_j} = q^(i+1) [i+j, i+1]_q L_(i+j), with L_(-1) = 0
    const BasisElement target = BasisElement::L(i + j);
    if (!contains(target)) return r;
    r.add_term(target, Scalar::q_power(f, i + 1) * gauss_binomial(f, i + j, i + 1));
    return r;
  }

  switch (kind_) {
    case AlgebraKind::WittQ:
      r.add_term(BasisElement::e(i + j), witt_constant(f, i, j));
      break;
    case AlgebraKind::VirasoroQ:
      r.add_term(BasisElement::e(i + j), witt_constant(f, i, j));
      if (i + j == 0) r.add_term(BasisElement::central(), virasoro_cocycle(f, i));
      break;
    default: {
      const BasisElement target = BasisElement::e(i + j);
      if (contains(target)) r.add_term(target, divided_constant(f, i, j));
      break;
    }
  }
  return r;
}

AlgebraElement GradedAlgebra::bracket(const AlgebraElement& x, const AlgebraElement& y) const {
  AlgebraElement r(field_);
  for (const auto& [a, c] : x.terms())
    for (const auto& [b, d] : y.terms()) {
      if (a == b) continue;
      r += (c * d) * bracket(a, b);
    }
  return r;
}

AlgebraElement tilde_weight(const AlgebraElement& x) {
  AlgebraElement r(x.field());
  for (const auto& [b, c] : x.terms()) r.add_term(b, Scalar::q_power(x.field(), b.degree() + 1) * c);
  return r;
}

AlgebraElement bracket_inhomogeneous(const GradedAlgebra& alg, const AlgebraElement& x, const AlgebraElement& y) {
  return alg.bracket(x, y);
}

}  // namespace qwitt
