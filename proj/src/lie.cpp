#include "qwitt/lie.hpp"

#include <map>

#include "qwitt/divided.hpp"
#include "qwitt/matrix.hpp"
#include "qwitt/parallel.hpp"
#include "qwitt/qnumbers.hpp"
#include "qwitt/virasoro.hpp"

namespace qwitt {

namespace {

std::string triple_text(const BasisElement& x, const BasisElement& y, const BasisElement& z) {
  return "(" + x.to_string() + ", " + y.to_string() + ", " + z.to_string() + ")";
}

// Indexes the basis elements occurring in a family of elements.
class Coordinates {
 public:
  void add(const AlgebraElement& a) {
    for (const auto& [b, c] : a.terms()) index_.try_emplace(b, index_.size());
  }
  std::size_t size() const { return index_.size(); }
  std::size_t at(const BasisElement& b) const { return index_.at(b); }

 private:
  std::map<BasisElement, std::size_t> index_;
};

std::vector<AlgebraElement> to_elements(const std::vector<std::vector<Scalar>>& vecs,
                                        const std::vector<BasisElement>& window, const ScalarField& f) {
  std::vector<AlgebraElement> out;
  for (const auto& v : vecs) {
    AlgebraElement a(f);
    for (std::size_t k = 0; k < window.size(); ++k) a.add_term(window[k], v[k]);
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace

CheckReport verify_antisymmetry(const GradedAlgebra& alg, const std::vector<BasisElement>& basis) {
  CheckReport rep;
  rep.name = "antisymmetry";
  for (const auto& x : basis)
    for (const auto& y : basis) {
      const bool good = x == y ? alg.bracket(x, y).is_zero() : alg.bracket(x, y) == -alg.bracket(y, x);
      rep.record(good, "{" + x.to_string() + ", " + y.to_string() + "}");
    }
  return rep;
}

CheckReport verify_grading(const GradedAlgebra& alg, const std::vector<BasisElement>& basis) {
  CheckReport rep;
  rep.name = "grading";
  for (const auto& x : basis)
    for (const auto& y : basis) {
      bool good = true;
      const AlgebraElement br = alg.bracket(x, y);
      for (const auto& [b, c] : br.terms()) good = good && b.degree() == x.degree() + y.degree();
      rep.record(good, "{" + x.to_string() + ", " + y.to_string() + "}");
    }
  return rep;
}

AlgebraElement weighted_jacobi_sum(const GradedAlgebra& alg, const BasisElement& x, const BasisElement& y,
                                   const BasisElement& z) {
  const ScalarField& f = alg.field();
  auto term = [&](const BasisElement& a, const BasisElement& b, const BasisElement& c) {
    const AlgebraElement inner = alg.bracket(b, c);
    if (inner.is_zero()) return AlgebraElement(f);
    return two_at_power(f, a.degree()) * alg.bracket(AlgebraElement::basis(f, a), inner);
  };
  return term(x, y, z) + term(y, z, x) + term(z, x, y);
}

bool verify_weighted_jacobi(const GradedAlgebra& alg, const BasisElement& x, const BasisElement& y,
                            const BasisElement& z) {
  return weighted_jacobi_sum(alg, x, y, z).is_zero();
}

std::vector<Triple> all_triples(const std::vector<BasisElement>& basis) {
  std::vector<Triple> out;
  out.reserve(basis.size() * basis.size() * basis.size());
  for (const auto& x : basis)
    for (const auto& y : basis)
      for (const auto& z : basis) out.push_back({x, y, z});
  return out;
}

std::vector<Triple> virasoro_triples(long long bound) {
  std::vector<Triple> out;
  for (long long i = -bound; i <= bound; ++i)
    for (long long j = -bound; j <= bound; ++j)
      out.push_back({BasisElement::e(i), BasisElement::e(j), BasisElement::e(-i - j)});
  return out;
}

CheckReport sweep_weighted_jacobi(const GradedAlgebra& alg, const std::vector<Triple>& triples, int jobs) {
  std::vector<char> good(triples.size(), 0);
  parallel_for(triples.size(), jobs, [&](std::size_t k) {
    const auto& t = triples[k];
    good[k] = verify_weighted_jacobi(alg, t[0], t[1], t[2]) ? 1 : 0;
  });
  CheckReport rep;
  rep.name = "weighted Jacobi";
  for (std::size_t k = 0; k < triples.size(); ++k)
    rep.record(good[k] != 0, triple_text(triples[k][0], triples[k][1], triples[k][2]));
  return rep;
}

std::vector<AlgebraElement> q_centralizer(const GradedAlgebra& alg, const std::vector<AlgebraElement>& subset,
                                          const std::vector<BasisElement>& window) {
  const ScalarField& f = alg.field();
  // column k: the brackets {window[k], s} for every s, stacked
  std::vector<std::vector<AlgebraElement>> cols(window.size());
  std::vector<Coordinates> coords(subset.size());
  for (std::size_t k = 0; k < window.size(); ++k)
    for (std::size_t s = 0; s < subset.size(); ++s) {
      cols[k].push_back(alg.bracket(AlgebraElement::basis(f, window[k]), subset[s]));
      coords[s].add(cols[k].back());
    }
  std::size_t rows = 0;
  std::vector<std::size_t> offset;
  for (const auto& c : coords) {
    offset.push_back(rows);
    rows += c.size();
  }
  ScalarMatrix m(rows, window.size(), alg.zero());
  for (std::size_t k = 0; k < window.size(); ++k)
    for (std::size_t s = 0; s < subset.size(); ++s)
      for (const auto& [b, c] : cols[k][s].terms()) m(offset[s] + coords[s].at(b), k) = c;
  return to_elements(nullspace(m), window, f);
}

std::vector<AlgebraElement> q_normalizer(const GradedAlgebra& alg, const std::vector<AlgebraElement>& spanning,
                                         const std::vector<BasisElement>& window) {
  const ScalarField& f = alg.field();
  // reduce S to a basis first
  Coordinates sc;
  for (const auto& s : spanning) sc.add(s);
  std::vector<AlgebraElement> S;
  {
    std::vector<BasisElement> keys(sc.size());
    for (const auto& s : spanning)
      for (const auto& [b, c] : s.terms()) keys[sc.at(b)] = b;
    std::vector<std::vector<Scalar>> rows;
    for (const auto& s : spanning) {
      std::vector<Scalar> row(sc.size(), alg.zero());
      for (const auto& [b, c] : s.terms()) row[sc.at(b)] = c;
      rows.push_back(std::move(row));
    }
    for (const auto& row : row_basis(std::move(rows), alg.zero())) {
      AlgebraElement a(f);
      for (std::size_t k = 0; k < row.size(); ++k) a.add_term(keys[k], row[k]);
      S.push_back(std::move(a));
    }
  }
  if (S.empty()) {
    std::vector<AlgebraElement> all;
    for (const auto& b : window) all.push_back(AlgebraElement::basis(f, b));
    return all;
  }
  const std::size_t n = window.size(), m = S.size();
  // unknowns: a_k (k < n) and lambda_{t,k'} (one block of m per t)
  std::vector<std::vector<AlgebraElement>> br(n);
  std::vector<Coordinates> coords(m);
  for (std::size_t t = 0; t < m; ++t) {
    for (const auto& s : S) coords[t].add(s);
    for (std::size_t k = 0; k < n; ++k) {
      if (t == 0) br[k].resize(m);
      br[k][t] = alg.bracket(AlgebraElement::basis(f, window[k]), S[t]);
      coords[t].add(br[k][t]);
    }
  }
  std::size_t rows = 0;
  std::vector<std::size_t> offset;
  for (const auto& c : coords) {
    offset.push_back(rows);
    rows += c.size();
  }
  ScalarMatrix mat(rows, n + m * m, alg.zero());
  for (std::size_t t = 0; t < m; ++t) {
    for (std::size_t k = 0; k < n; ++k)
      for (const auto& [b, c] : br[k][t].terms()) mat(offset[t] + coords[t].at(b), k) = c;
    for (std::size_t kk = 0; kk < m; ++kk)
      for (const auto& [b, c] : S[kk].terms()) mat(offset[t] + coords[t].at(b), n + t * m + kk) = -c;
  }
  std::vector<std::vector<Scalar>> proj;
  for (auto& v : nullspace(mat)) {
    v.resize(n, alg.zero());
    proj.push_back(std::move(v));
  }
  return to_elements(row_basis(std::move(proj), alg.zero()), window, f);
}

bool is_q_central(const GradedAlgebra& alg, const AlgebraElement& x, const std::vector<BasisElement>& window) {
  for (const auto& b : window)
    if (!alg.bracket(x, AlgebraElement::basis(alg.field(), b)).is_zero()) return false;
  return true;
}

bool in_span(const std::vector<AlgebraElement>& span, const AlgebraElement& v) {
  if (v.is_zero()) return true;
  Coordinates c;
  for (const auto& s : span) c.add(s);
  c.add(v);
  const Scalar zero(v.field());
  auto row_of = [&](const AlgebraElement& a) {
    std::vector<Scalar> row(c.size(), zero);
    for (const auto& [b, x] : a.terms()) row[c.at(b)] = x;
    return row;
  };
  std::vector<std::vector<Scalar>> rows;
  for (const auto& s : span) rows.push_back(row_of(s));
  const std::size_t r0 = row_basis(rows, zero).size();
  rows.push_back(row_of(v));
  return row_basis(std::move(rows), zero).size() == r0;
}

CheckReport verify_operator_consistency(const ScalarField& f, long long bound) {
  CheckReport rep;
  rep.name = "operator bracket";
  const GradedAlgebra w = GradedAlgebra::witt_q(f);
  auto act = [&](const AlgebraElement& a, const LaurentPoly& p) {
    LaurentPoly r(f);
    for (const auto& [b, c] : a.terms()) r += c * apply_witt(b.index, p);
    return r;
  };
  for (long long i = -bound; i <= bound; ++i)
    for (long long j = -bound; j <= bound; ++j) {
      const AlgebraElement br = w.bracket(BasisElement::e(i), BasisElement::e(j));
      for (long long n = -bound; n <= bound; ++n) {
        const LaurentPoly x = LaurentPoly::monomial(f, n);
        const LaurentPoly lhs = Scalar::q_power(f, i + 1) * apply_witt(i, apply_witt(j, x)) -
                                Scalar::q_power(f, j + 1) * apply_witt(j, apply_witt(i, x));
        rep.record(lhs == act(br, x), "i=" + std::to_string(i) + " j=" + std::to_string(j) + " n=" + std::to_string(n));
      }
    }
  return rep;
}

CheckReport verify_classical_limit(long long bound) {
  CheckReport rep;
  rep.name = "q -> 1 limit of W^q";
  const GradedAlgebra w = GradedAlgebra::witt_q();
  for (long long i = -bound; i <= bound; ++i)
    for (long long j = -bound; j <= bound; ++j) {
      const Scalar c = w.bracket(BasisElement::e(i), BasisElement::e(j)).coeff(BasisElement::e(i + j));
      rep.record(i == j || c.evaluate_at(Rational(1)) == Rational(static_cast<long>(j - i)),
                 "i=" + std::to_string(i) + " j=" + std::to_string(j));
    }
  return rep;
}

CheckReport verify_split_extension(int l) {
  CheckReport rep;
  rep.name = "split extension by L_0";
  const GradedAlgebra h = GradedAlgebra::holomorph_eps1(l);
  const GradedAlgebra w = GradedAlgebra::witt_eps11(l);
  const BasisElement L0 = BasisElement::L(0);
  for (const auto& x : w.basis()) {
    rep.record(h.bracket(x, L0).is_zero(), "{" + x.to_string() + ", L(0)} != 0");
    for (const auto& y : w.basis()) rep.record(h.bracket(x, y) == w.bracket(x, y), "{" + x.to_string() + ", " + y.to_string() + "} leaves W");
  }
  return rep;
}

}  // namespace qwitt
