#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qwitt/basis.hpp"

namespace qwitt {

enum class AlgebraKind { WittQ, WittQ1, WittEps11, VirasoroQ, HolomorphQ, HolomorphEps1, QAbelian };

/// One of the cataloged q-Lie algebras: a graded basis plus the structure
/// constants of the weighted bracket {x, y}_q.
///
/// Finite algebras precompute their bracket table at construction, so the
/// object is immutable and may be shared between threads.
class GradedAlgebra {
 public:
  /// W^q: e_i for all integers i.
  static GradedAlgebra witt_q(const ScalarField& f = ScalarField::generic());
  /// W^q(1): e_(i), i >= -1, divided-power normalization.
  static GradedAlgebra witt_q1(const ScalarField& f = ScalarField::generic());
  /// W^e(1,1): e_(i), -1 <= i <= l-2, at a primitive l-th root of unity.
  static GradedAlgebra witt_eps11(int l);
  /// Vir^q: e_i plus the central C; generic q only.
  static GradedAlgebra virasoro_q();
  /// H^q: W^q(1) plus L_j, j >= 0.
  static GradedAlgebra holomorph_q(const ScalarField& f = ScalarField::generic());
  /// H^e(1): W^e(1,1) plus L_j, 0 <= j <= l-1.
  static GradedAlgebra holomorph_eps1(int l);
  /// The q-abelian space spanned by L_0..L_(n-1), or all L_j, j >= 0, when n = 0.
  static GradedAlgebra q_abelian(const ScalarField& f, long long n = 0);

  /// Looks up a catalog entry by its CLI name (witt-q, witt-q1, witt-eps,
  /// virasoro-q, holomorph-q, holomorph-eps, q-abelian).
  static GradedAlgebra by_name(const std::string& name, const ScalarField& f, long long size = 0);

  AlgebraKind kind() const { return kind_; }
  const ScalarField& field() const { return field_; }
  std::string name() const;
  bool is_finite() const;

  bool contains(const BasisElement& b) const;
  /// Throws std::invalid_argument unless contains(b).
  void require(const BasisElement& b) const;

  /// The whole basis in PBW order; throws std::logic_error for infinite algebras.
  const std::vector<BasisElement>& basis() const;
  /// Basis elements with index in [lo, hi] (C included when 0 is in range).
  /// For finite algebras this clips the full basis.
  std::vector<BasisElement> window(long long lo, long long hi) const;

  /// {x, y}_q for basis elements.
  AlgebraElement bracket(const BasisElement& x, const BasisElement& y) const;
  /// Bilinear extension over homogeneous components.
  AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) const;

  Scalar zero() const { return Scalar(field_); }
  Scalar one() const { return Scalar::from_int(field_, 1); }

 private:
  GradedAlgebra(AlgebraKind k, const ScalarField& f, long long size);
  AlgebraElement compute_bracket(const BasisElement& x, const BasisElement& y) const;
  std::size_t position(const BasisElement& b) const;

  AlgebraKind kind_;
  ScalarField field_;
  long long size_ = 0;  // l for the root-of-unity algebras, n for q-abelian
  struct Table {
    std::vector<BasisElement> basis;
    std::vector<AlgebraElement> brackets;  // row-major over basis positions
  };
  std::shared_ptr<const Table> table_;
};

/// x~ = sum_i q^(i+1) x_i over the homogeneous components x_i.
AlgebraElement tilde_weight(const AlgebraElement& x);

/// Same as alg.bracket on elements, kept as a free function for callers that
/// think of it as the inhomogeneous extension.
AlgebraElement bracket_inhomogeneous(const GradedAlgebra& alg, const AlgebraElement& x, const AlgebraElement& y);

}  // namespace qwitt
