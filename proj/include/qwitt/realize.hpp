#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qwitt/algebra.hpp"
#include "qwitt/matrix.hpp"
#include "qwitt/report.hpp"

namespace qwitt {

/// A representation given by generator matrices. Entries are polynomials in
/// an indeterminate t, so a single realization can cover every e(0)-weight.
struct ModuleRealization {
  GradedAlgebra algebra;
  std::size_t dim = 0;
  /// Degree of each basis vector; absent for non-graded constructions.
  std::optional<std::vector<long long>> grading;
  std::map<BasisElement, TMatrix> action;
  /// Set for truncations of infinite-dimensional modules: only vectors whose
  /// intermediate images stay at grade <= window are meaningful.
  std::optional<long long> window;

  TMatrix zero_matrix() const;
  /// Matrix of a linear combination of generators. Throws std::out_of_range
  /// if a generator has no matrix.
  TMatrix act(const AlgebraElement& a) const;
};

/// A_e(1,1) (x) V(t) for the W^e(1,1)-module V(t) = K v with e(0).v = t v.
/// Pass TScalar::t(field) for a symbolic weight or a constant for a fixed one.
ModuleRealization realize_module(int l, const TScalar& t);
/// Same with t symbolic.
ModuleRealization realize_module(int l);

/// The W^q(1)-module A^q(1) (x) V(t), cut to grades 0..window. Generators are
/// e(-1)..e(window - 1).
ModuleRealization realize_module_generic(long long window, const TScalar& t);

/// {x_i, x_j}.m = q^(i+1) x_i.(x_j.m) - q^(j+1) x_j.(x_i.m) for every pair
/// of generators with matrices, plus the grading when present. Windowed
/// realizations check only the columns where no intermediate leaves the window.
CheckReport verify_module_axiom(const ModuleRealization& m);

struct SubmoduleAnalysis {
  /// Spans of basis vectors closed under every generator, by size then lexicographically.
  std::vector<std::vector<std::size_t>> submodules;
  /// 0 = S_0 < S_1 < ... < S_n = M with no graded submodule strictly between neighbours.
  std::vector<std::vector<std::size_t>> composition_series;
  /// dim S_k / S_(k-1), bottom first.
  std::vector<std::size_t> factor_dims;
  bool irreducible = false;
};

/// Graded submodule lattice of a module whose graded pieces are lines. An
/// entry counts as nonzero when it is a nonzero polynomial in t, so symbolic
/// t gives the answer for generic weights. Throws for dim > 20.
SubmoduleAnalysis graded_submodule_analysis(const ModuleRealization& m);

/// e(0)-eigenvalues on the lowest and highest graded vectors.
std::pair<TScalar, TScalar> base_top_eigenvalues(const ModuleRealization& m);
/// (-1)_e (1 - t): the highest weight predicted for realize_module(l, t).
TScalar predicted_top_eigenvalue(int l, const TScalar& t);

/// phi: the Witt part, psi: matrices of L_j (missing indices act as 0),
/// rho_omega: the image of the element omega in the third representation.
struct HolomorphRepTriple {
  ModuleRealization phi;
  std::map<long long, TMatrix> psi;
  TMatrix rho_omega;

  TMatrix psi_of(long long j) const;
};

/// phi(e(i)) = x^(i+1) d_e and psi(L_j) = x^(j) tau_e on A_e(1,1), with
/// rho(omega) = (1) on a line.
HolomorphRepTriple example_holomorph_triple(int l);

struct CompatEntry {
  long long i = 0, j = 0;
  /// mu with phi(e(i)) psi(L_j) - e^(j-i) psi(L_j) phi(e(i)) = mu psi(L_(i+j)).
  std::optional<TScalar> mu;
  bool proportional = false;
  bool printed = false;  // mu == binom(i+j, i+1)
  bool scaled = false;   // mu == e^(i+1) binom(i+j, i+1)
};

struct CompatReport {
  std::vector<CompatEntry> entries;
  CheckReport proportionality;
  bool printed = false;  // every entry matches the unscaled constants
  bool scaled = false;   // every entry matches the scaled constants
  /// "printed", "scaled", or "none"; "printed" wins when both hold.
  std::string normalization() const;
  bool ok() const { return proportionality.ok() && (printed || scaled); }
};

CompatReport holomorph_compat_check(const HolomorphRepTriple& triple);

/// phi(e(i)) + a psi(L_i). Throws std::invalid_argument unless the pair passes
/// holomorph_compat_check.
ModuleRealization deform_representation(const HolomorphRepTriple& triple, const TScalar& a);

/// phi(e(i)) (x) id + psi(L_i) (x) rho(omega) on M (x) V.
ModuleRealization tensor_representation(const HolomorphRepTriple& triple, const TMatrix& rho_omega);
ModuleRealization tensor_representation(const HolomorphRepTriple& triple);

/// e^(i+1) psi(L_i) psi(L_j) = e^(j+1) psi(L_j) psi(L_i) for all indices present.
CheckReport verify_psi_commutation(const HolomorphRepTriple& triple);

/// The q = 1 image of a generic realization: entry of e(i) at (a+i, a) must
/// be binom(a+i, i+1) + t binom(a+i, i) for every grade a <= max_grade, t symbolic.
CheckReport verify_classical_realization(const ModuleRealization& m, long long max_grade);

}  // namespace qwitt
