#include "qwitt/realize.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "qwitt/divided.hpp"
#include "qwitt/qnumbers.hpp"

namespace qwitt {

namespace {

std::string pair_text(const BasisElement& x, const BasisElement& y) {
  return "{" + x.to_string() + ", " + y.to_string() + "}";
}

TMatrix square(std::size_t n, const ScalarField& f) { return TMatrix(n, n, TScalar(f)); }

// The matrix of x^(i+1) d (x) id + d(x^(i+1)) tau (x) t on x^(0..dim-1),
// dropping images beyond the last grade.
TMatrix witt_action(const ScalarField& f, long long i, std::size_t dim, const TScalar& t) {
  TMatrix m = square(dim, f);
  const DividedElement lifted = DividedElement::monomial(f, i + 1);
  const DividedElement shifted = dp_derivative(lifted);
  for (std::size_t a = 0; a < dim; ++a) {
    const DividedElement u = DividedElement::monomial(f, static_cast<long long>(a));
    const DividedElement plain = apply_e(i, u);
    const DividedElement twisted = dp_multiply(shifted, tau(u));
    for (const auto& [b, c] : plain.terms())
      if (b < static_cast<long long>(dim)) m(static_cast<std::size_t>(b), a) += TScalar(c);
    for (const auto& [b, c] : twisted.terms())
      if (b < static_cast<long long>(dim)) m(static_cast<std::size_t>(b), a) += TScalar(c) * t;
  }
  return m;
}

std::vector<long long> identity_grading(std::size_t dim) {
  std::vector<long long> g(dim);
  for (std::size_t a = 0; a < dim; ++a) g[a] = static_cast<long long>(a);
  return g;
}

Integer classical_binomial(long long n, long long r) {
  if (r < 0 || n < r) return Integer(0);
  Integer acc(1);
  for (long long k = 1; k <= r; ++k) acc = acc * Integer(static_cast<long>(n - r + k)) / Integer(static_cast<long>(k));
  return acc;
}

}  // namespace

TMatrix ModuleRealization::zero_matrix() const { return square(dim, algebra.field()); }

TMatrix ModuleRealization::act(const AlgebraElement& a) const {
  TMatrix r = zero_matrix();
  for (const auto& [b, c] : a.terms()) {
    auto it = action.find(b);
    if (it == action.end()) throw std::out_of_range("no matrix for " + b.to_string());
    r += TScalar(c) * it->second;
  }
  return r;
}

ModuleRealization realize_module(int l, const TScalar& t) {
  ModuleRealization m{GradedAlgebra::witt_eps11(l), static_cast<std::size_t>(l), identity_grading(l), {}, {}};
  const ScalarField& f = m.algebra.field();
  for (const auto& b : m.algebra.basis()) m.action.emplace(b, witt_action(f, b.index, m.dim, t));
  return m;
}

ModuleRealization realize_module(int l) { return realize_module(l, TScalar::t(ScalarField::root_of_unity(l))); }

ModuleRealization realize_module_generic(long long window, const TScalar& t) {
  if (window < 1) throw std::invalid_argument("window must be at least 1");
  if (!t.field().is_generic()) throw std::invalid_argument("generic realization needs a generic weight");
  const auto dim = static_cast<std::size_t>(window + 1);
  ModuleRealization m{GradedAlgebra::witt_q1(), dim, identity_grading(dim), {}, window};
  for (long long i = -1; i < window; ++i)
    m.action.emplace(BasisElement::e(i), witt_action(t.field(), i, dim, t));
  return m;
}

CheckReport verify_module_axiom(const ModuleRealization& m) {
  CheckReport rep;
  rep.name = "module axiom";
  const ScalarField& f = m.algebra.field();
  if (m.grading) {
    for (const auto& [x, a] : m.action)
      for (std::size_t r = 0; r < m.dim; ++r)
        for (std::size_t c = 0; c < m.dim; ++c)
          if (!a(r, c).is_zero())
            rep.record((*m.grading)[r] == (*m.grading)[c] + x.degree(),
                       x.to_string() + " breaks the grading at (" + std::to_string(r) + ", " + std::to_string(c) + ")");
  }
  for (const auto& [x, ax] : m.action)
    for (const auto& [y, ay] : m.action) {
      const AlgebraElement br = m.algebra.bracket(x, y);
      bool inside = true;
      for (const auto& [b, c] : br.terms()) inside = inside && m.action.count(b) > 0;
      if (!inside) continue;
      const TMatrix lhs = m.act(br);
      const TMatrix rhs = TScalar(Scalar::q_power(f, x.degree() + 1)) * (ax * ay) -
                          TScalar(Scalar::q_power(f, y.degree() + 1)) * (ay * ax);
      bool good = true;
      for (std::size_t c = 0; c < m.dim && good; ++c) {
        if (m.window && m.grading) {
          const long long g = (*m.grading)[c];
          if (g + x.degree() > *m.window || g + y.degree() > *m.window) continue;
        }
        for (std::size_t r = 0; r < m.dim; ++r) good = good && lhs(r, c) == rhs(r, c);
      }
      rep.record(good, pair_text(x, y));
    }
  return rep;
}

SubmoduleAnalysis graded_submodule_analysis(const ModuleRealization& m) {
  if (m.dim > 20) throw std::invalid_argument("submodule search is limited to dimension 20");
  const std::size_t n = m.dim;
  // reach[c]: basis vectors hit by one generator applied to vector c
  std::vector<std::uint32_t> reach(n, 0);
  for (const auto& [x, a] : m.action)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (!a(r, c).is_zero()) reach[c] |= std::uint32_t{1} << r;

  auto closed = [&](std::uint32_t s) {
    for (std::size_t c = 0; c < n; ++c)
      if ((s >> c & 1U) && (reach[c] & ~s)) return false;
    return true;
  };
  auto indices = [&](std::uint32_t s) {
    std::vector<std::size_t> v;
    for (std::size_t c = 0; c < n; ++c)
      if (s >> c & 1U) v.push_back(c);
    return v;
  };

  std::vector<std::uint32_t> subs;
  const std::uint32_t full = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
  for (std::uint32_t s = 0;; ++s) {
    if (closed(s)) subs.push_back(s);
    if (s == full) break;
  }
  auto size_lex = [&](std::uint32_t a, std::uint32_t b) {
    const int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    if (pa != pb) return pa < pb;
    return indices(a) < indices(b);
  };
  std::sort(subs.begin(), subs.end(), size_lex);

  SubmoduleAnalysis out;
  for (auto s : subs) out.submodules.push_back(indices(s));
  std::uint32_t cur = 0;
  out.composition_series.push_back({});
  while (cur != full) {
    // the smallest closed proper superset has nothing strictly between
    for (auto s : subs)
      if ((s & cur) == cur && s != cur) {
        out.factor_dims.push_back(static_cast<std::size_t>(__builtin_popcount(s) - __builtin_popcount(cur)));
        cur = s;
        break;
      }
    out.composition_series.push_back(indices(cur));
  }
  out.irreducible = n > 0 && subs.size() == 2;
  return out;
}

std::pair<TScalar, TScalar> base_top_eigenvalues(const ModuleRealization& m) {
  if (!m.grading || m.dim == 0) throw std::invalid_argument("base and top need a graded module");
  const auto& g = *m.grading;
  const auto lo = static_cast<std::size_t>(std::min_element(g.begin(), g.end()) - g.begin());
  const auto hi = static_cast<std::size_t>(std::max_element(g.begin(), g.end()) - g.begin());
  const TMatrix& e0 = m.action.at(BasisElement::e(0));
  return {e0(lo, lo), e0(hi, hi)};
}

TScalar predicted_top_eigenvalue(int l, const TScalar& t) {
  const ScalarField f = ScalarField::root_of_unity(l);
  return TScalar(q_integer(f, -1)) * (TScalar(Scalar::from_int(f, 1)) - t);
}

TMatrix HolomorphRepTriple::psi_of(long long j) const {
  auto it = psi.find(j);
  return it == psi.end() ? phi.zero_matrix() : it->second;
}

HolomorphRepTriple example_holomorph_triple(int l) {
  HolomorphRepTriple h{realize_module(l, TScalar(ScalarField::root_of_unity(l))), {}, {}};
  const ScalarField& f = h.phi.algebra.field();
  for (long long j = 0; j < l; ++j) {
    TMatrix m = square(h.phi.dim, f);
    const DividedElement xj = DividedElement::monomial(f, j);
    for (std::size_t a = 0; a < h.phi.dim; ++a) {
      const DividedElement img = dp_multiply(xj, tau(DividedElement::monomial(f, static_cast<long long>(a))));
      for (const auto& [b, c] : img.terms()) m(static_cast<std::size_t>(b), a) = TScalar(c);
    }
    h.psi.emplace(j, std::move(m));
  }
  h.rho_omega = TMatrix(1, 1, TScalar(f));
  h.rho_omega(0, 0) = TScalar(Scalar::from_int(f, 1));
  return h;
}

std::string CompatReport::normalization() const {
  if (!proportionality.ok()) return "none";
  if (printed) return "printed";
  if (scaled) return "scaled";
  return "none";
}

CompatReport holomorph_compat_check(const HolomorphRepTriple& triple) {
  CompatReport rep;
  rep.proportionality.name = "holomorph compatibility";
  rep.printed = rep.scaled = true;
  const ScalarField& f = triple.phi.algebra.field();
  for (const auto& [x, phi_i] : triple.phi.action) {
    if (x.family != Family::E) continue;
    const long long i = x.index;
    for (const auto& [j, psi_j] : triple.psi) {
      CompatEntry e;
      e.i = i;
      e.j = j;
      const TMatrix lhs = phi_i * psi_j - TScalar(Scalar::q_power(f, j - i)) * (psi_j * phi_i);
      const TMatrix target = triple.psi_of(i + j);
      if (target.is_zero()) {
        e.proportional = lhs.is_zero();
        e.printed = e.scaled = e.proportional;
      } else {
        std::size_t r = 0, c = 0;
        [&] {
          for (r = 0; r < target.rows(); ++r)
            for (c = 0; c < target.cols(); ++c)
              if (!target(r, c).is_zero()) return;
        }();
        if (!target(r, c).is_constant()) throw std::invalid_argument("psi entries must not depend on t");
        const TScalar mu = lhs(r, c) * TScalar(target(r, c).constant_term().inverse());
        e.mu = mu;
        e.proportional = lhs == mu * target;
        const Scalar printed = gauss_binomial(f, i + j, i + 1);
        e.printed = e.proportional && mu == TScalar(printed);
        e.scaled = e.proportional && mu == TScalar(Scalar::q_power(f, i + 1) * printed);
      }
      rep.proportionality.record(e.proportional, "(" + std::to_string(i) + ", " + std::to_string(j) + ")");
      rep.printed = rep.printed && e.printed;
      rep.scaled = rep.scaled && e.scaled;
      rep.entries.push_back(std::move(e));
    }
  }
  return rep;
}

ModuleRealization deform_representation(const HolomorphRepTriple& triple, const TScalar& a) {
  if (!holomorph_compat_check(triple).ok()) throw std::invalid_argument("phi and psi are not compatible");
  ModuleRealization m = triple.phi;
  for (auto& [x, mat] : m.action)
    if (x.family == Family::E) mat += a * triple.psi_of(x.index);
  return m;
}

ModuleRealization tensor_representation(const HolomorphRepTriple& triple, const TMatrix& rho_omega) {
  if (rho_omega.rows() != rho_omega.cols() || rho_omega.rows() == 0)
    throw std::invalid_argument("rho(omega) must be a nonempty square matrix");
  const ScalarField& f = triple.phi.algebra.field();
  const std::size_t k = rho_omega.rows();
  const TMatrix id = TMatrix::identity(k, TScalar(f), TScalar(Scalar::from_int(f, 1)));
  ModuleRealization m{triple.phi.algebra, triple.phi.dim * k, std::nullopt, {}, triple.phi.window};
  if (triple.phi.grading) {
    std::vector<long long> g;
    for (long long d : *triple.phi.grading) g.insert(g.end(), k, d);
    m.grading = std::move(g);
  }
  for (const auto& [x, mat] : triple.phi.action)
    m.action.emplace(x, kron(mat, id) + kron(triple.psi_of(x.index), rho_omega));
  return m;
}

ModuleRealization tensor_representation(const HolomorphRepTriple& triple) {
  return tensor_representation(triple, triple.rho_omega);
}

CheckReport verify_psi_commutation(const HolomorphRepTriple& triple) {
  CheckReport rep;
  rep.name = "psi e-commutation";
  const ScalarField& f = triple.phi.algebra.field();
  for (const auto& [i, a] : triple.psi)
    for (const auto& [j, b] : triple.psi)
      rep.record(TScalar(Scalar::q_power(f, i + 1)) * (a * b) == TScalar(Scalar::q_power(f, j + 1)) * (b * a),
                 "L(" + std::to_string(i) + "), L(" + std::to_string(j) + ")");
  return rep;
}

CheckReport verify_classical_realization(const ModuleRealization& m, long long max_grade) {
  CheckReport rep;
  rep.name = "classical limit of the realization";
  if (!m.algebra.field().is_generic()) throw std::invalid_argument("q = 1 needs a generic realization");
  const Rational one(1);
  for (const auto& [x, a] : m.action) {
    const long long i = x.index;
    for (std::size_t c = 0; c < m.dim; ++c)
      for (std::size_t r = 0; r < m.dim; ++r) {
        const auto ai = static_cast<long long>(c), row = static_cast<long long>(r);
        if (ai > max_grade || row > max_grade) continue;
        const TScalar& v = a(r, c);
        Rational expect0(0), expect1(0);
        if (row == ai + i) {
          expect0 = Rational(classical_binomial(ai + i, i + 1));
          expect1 = Rational(classical_binomial(ai + i, i));
        }
        const bool good = v.degree() <= 1 && v.coeff(0).evaluate_at(one) == expect0 &&
                          v.coeff(1).evaluate_at(one) == expect1;
        rep.record(good, x.to_string() + " at (" + std::to_string(r) + ", " + std::to_string(c) + ")");
      }
  }
  return rep;
}

}  // namespace qwitt
