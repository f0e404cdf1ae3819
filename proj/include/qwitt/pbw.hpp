#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qwitt/algebra.hpp"
#include "qwitt/report.hpp"

namespace qwitt {

using Word = std::vector<BasisElement>;

std::string word_to_string(const Word& w);
/// True iff the letters are nondecreasing in the basis order.
bool is_ordered(const Word& w);
/// Number of pairs p < r with w[p] > w[r].
long long disordering_index(const Word& w);

/// Element of the tensor algebra: a finite combination of words.
class NoncommPoly {
 public:
  NoncommPoly() = default;
  explicit NoncommPoly(const ScalarField& f) : field_(f) {}
  static NoncommPoly one(const ScalarField& f);
  static NoncommPoly word(const ScalarField& f, Word w, const Scalar& c);
  static NoncommPoly word(const ScalarField& f, Word w) { return word(f, std::move(w), Scalar::from_int(f, 1)); }
  static NoncommPoly letter(const ScalarField& f, const BasisElement& b) { return word(f, Word{b}); }
  static NoncommPoly scalar(const Scalar& c) { return word(c.field(), Word{}, c); }
  /// Embeds a Lie algebra element as a combination of length-1 words.
  static NoncommPoly from_element(const AlgebraElement& a);

  const ScalarField& field() const { return field_; }
  const std::map<Word, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const Word& w) const;
  std::size_t size() const { return terms_.size(); }
  /// Longest word length; -1 for zero.
  long long max_length() const;

  void add_term(const Word& w, const Scalar& c);
  NoncommPoly& operator+=(const NoncommPoly& o);
  NoncommPoly& operator-=(const NoncommPoly& o);
  friend NoncommPoly operator+(NoncommPoly a, const NoncommPoly& b) { return a += b; }
  friend NoncommPoly operator-(NoncommPoly a, const NoncommPoly& b) { return a -= b; }
  friend NoncommPoly operator-(const NoncommPoly& a);
  friend NoncommPoly operator*(const Scalar& s, const NoncommPoly& a);
  /// Concatenation product.
  friend NoncommPoly operator*(const NoncommPoly& a, const NoncommPoly& b);
  friend bool operator==(const NoncommPoly& a, const NoncommPoly& b) { return a.terms_ == b.terms_; }

  NoncommPoly pow(unsigned n) const;

  /// Words by decreasing length, then increasing basis order.
  std::vector<std::pair<Word, Scalar>> sorted_terms() const;
  std::string to_string() const;

 private:
  ScalarField field_;
  std::map<Word, Scalar> terms_;
};

std::ostream& operator<<(std::ostream& os, const NoncommPoly& p);

enum class Strategy { Leftmost, Rightmost };

/// Rewriting rules y x -> q^(i-j) x y - q^(-(j+1)) {x, y}_q for every pair of
/// basis elements x < y of degrees i and j. These eliminate descending pairs,
/// so the irreducible words are exactly the ordered monomials.
class ReductionSystem {
 public:
  explicit ReductionSystem(GradedAlgebra alg);

  const GradedAlgebra& algebra() const { return alg_; }
  const ScalarField& field() const { return alg_.field(); }

  /// Right-hand side of the rule for the descending pair (y, x), y > x.
  const std::vector<std::pair<Word, Scalar>>& rule(const BasisElement& y, const BasisElement& x) const;

  /// Applies the rule at position p of w (w[p] > w[p+1] required).
  NoncommPoly rewrite_at(const Word& w, std::size_t p) const;
  NoncommPoly rewrite_at(const Word& w, std::size_t p, const Scalar& c) const;

  /// Reduces every word to a combination of ordered words.
  NoncommPoly normal_form(const NoncommPoly& p, Strategy s = Strategy::Leftmost) const;
  NoncommPoly normal_form(const Word& w, Strategy s = Strategy::Leftmost) const;

  /// Product in the enveloping algebra, in normal form.
  NoncommPoly multiply(const NoncommPoly& a, const NoncommPoly& b) const;

 private:
  using Rhs = std::vector<std::pair<Word, Scalar>>;
  Rhs compute_rule(const BasisElement& y, const BasisElement& x) const;

  GradedAlgebra alg_;
  std::uint64_t id_;  // keys the per-thread rule cache of infinite algebras
  std::shared_ptr<const std::map<std::pair<BasisElement, BasisElement>, Rhs>> table_;
};

/// J(x_k, x_j, x_i) for x_i < x_j < x_k: the six-term q-Jacobi sum of
/// length-2 tensors built from the brackets.
NoncommPoly q_jacobi_sum(const GradedAlgebra& alg, const BasisElement& xi, const BasisElement& xj,
                         const BasisElement& xk);

struct ConfluenceReport {
  CheckReport ambiguities;     // z y x via the two first steps
  CheckReport jacobi_sums;     // nf(J) = 0
  CheckReport relations;       // nf(q^(i+1) x y - q^(j+1) y x) = {x, y}
  CheckReport compatibility;   // each rule strictly lowers the word order
  bool ok() const { return ambiguities.ok() && jacobi_sums.ok() && relations.ok() && compatibility.ok(); }
};

/// nf(r_left(z y x)) - nf(r_right(z y x)) for x < y < z: the two first
/// reductions of the overlap, each taken to normal form.
NoncommPoly ambiguity_defect(const ReductionSystem& sys, const BasisElement& x, const BasisElement& y,
                             const BasisElement& z);

/// Checks every overlap ambiguity z y x (x < y < z) among the given letters.
ConfluenceReport check_confluence(const ReductionSystem& sys, const std::vector<BasisElement>& letters, int jobs = 1);

/// Leftmost and rightmost reduction agree on `samples` random words of the
/// given length drawn from `letters`.
CheckReport strategy_agreement(const ReductionSystem& sys, const std::vector<BasisElement>& letters,
                               std::size_t length, std::size_t samples, std::uint64_t seed, int jobs = 1);

/// Products of random nonzero normal forms of word length <= 2 are nonzero.
CheckReport zero_divisor_sample(const ReductionSystem& sys, const std::vector<BasisElement>& letters,
                                std::size_t samples, std::uint64_t seed);

/// Everything the power commutation identities produce for one (i, j, n).
struct PowerCommutation {
  long long i = 0, j = 0, n = 0;
  bool first_equality = false;   // iterated-bracket form (or the e(0) form when j = 0)
  bool closed_form = false;      // H_ij^(k) with the printed prefactor
  bool has_closed_form = true;   // false for j = 0, where only the first form exists
  std::string discrepancy;       // nf(closed) - nf(lhs), empty when they agree
};

/// H_ij^(k) as printed: e^(-k - j binom(k+1,2)) prod_s c_s when -1 <= i+j <= l-2, else 0.
Scalar power_coefficient(const ScalarField& f, long long i, long long j, long long k);

/// The iterated q-commutator [...[e(i), e(j)]_e, ..., e(j)]_e with k copies
/// of e(j), where [X, e(j)]_e = X e(j) - e^(j-d) e(j) X for X of degree d.
NoncommPoly iterated_q_commutator(const ReductionSystem& sys, long long i, long long j, long long k);

PowerCommutation power_commutation_check(const ReductionSystem& sys, long long i, long long j, long long n);

/// z_i = e(i)^l for i != 0 and z_0 = (e(0) - 1/(1 - e))^l.
NoncommPoly central_element(const ScalarField& f, long long i);

/// [g, z] = g z - z g normal-forms to zero for every generator g and every z_i.
CheckReport central_elements_check(const ReductionSystem& sys, int jobs = 1);

/// nf(e(i) e(j)) - e^(j-i) nf(e(j) e(i)) has word length < 2 for every pair.
CheckReport graded_leading_term_check(const ReductionSystem& sys);

}  // namespace qwitt
