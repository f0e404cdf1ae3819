#include "doctest.h"

#include <random>

#include "qwitt/divided.hpp"
#include "qwitt/matrix.hpp"
#include "qwitt/pbw.hpp"
#include "qwitt/qnumbers.hpp"

using namespace qwitt;

namespace {

const ScalarField G = ScalarField::generic();
BasisElement e(long long i) { return BasisElement::e(i); }

// Oracle: U(W) acts on the divided power algebra through e(n) = x^(n+1) d_q,
// so a polynomial and its normal form must give the same operator.
ScalarMatrix operator_of(const ScalarField& f, long long n, long long dim) {
  ScalarMatrix m(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim), Scalar(f));
  for (long long a = 0; a < dim; ++a) {
    const DividedElement img = apply_e(n, DividedElement::monomial(f, a));
    for (const auto& [b, c] : img.terms())
      if (b < dim) m(static_cast<std::size_t>(b), static_cast<std::size_t>(a)) = c;
  }
  return m;
}

ScalarMatrix act(const NoncommPoly& p, long long dim) {
  const ScalarField& f = p.field();
  const Scalar one = Scalar::from_int(f, 1);
  ScalarMatrix total(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim), Scalar(f));
  for (const auto& [w, c] : p.terms()) {
    ScalarMatrix m = ScalarMatrix::identity(static_cast<std::size_t>(dim), Scalar(f), one);
    for (const auto& b : w) m = m * operator_of(f, b.index, dim);
    total += c * m;
  }
  return total;
}

}  // namespace

TEST_CASE("basic normal forms") {
  const ReductionSystem sys(GradedAlgebra::witt_q1());
  const Scalar qi = Scalar::q_power(G, -1);
  NoncommPoly expect = NoncommPoly::word(G, {e(0), e(1)}, qi);
  expect.add_term({e(1)}, -qi);
  const NoncommPoly nf = sys.normal_form(Word{e(1), e(0)});
  CHECK(nf == expect);
  CHECK(nf.to_string() == "q^-1*e(0)*e(1) - q^-1*e(1)");
  CHECK(sys.normal_form(Word{e(-1), e(0), e(3)}) == NoncommPoly::word(G, {e(-1), e(0), e(3)}));
  CHECK(sys.normal_form(NoncommPoly::one(G)) == NoncommPoly::one(G));
  CHECK(sys.normal_form(NoncommPoly(G)).is_zero());
}

TEST_CASE("normal form is idempotent and linear") {
  const ReductionSystem sys(GradedAlgebra::witt_eps11(5));
  const ScalarField& f = sys.field();
  const auto& basis = sys.algebra().basis();
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  auto random_word = [&](std::size_t n) {
    Word w;
    for (std::size_t k = 0; k < n; ++k) w.push_back(basis[pick(rng)]);
    return w;
  };
  for (int t = 0; t < 30; ++t) {
    NoncommPoly p = NoncommPoly::word(f, random_word(3)) + NoncommPoly::word(f, random_word(3), Scalar::q(f));
    NoncommPoly r = NoncommPoly::word(f, random_word(2));
    const NoncommPoly nf = sys.normal_form(p);
    CHECK(sys.normal_form(nf) == nf);
    for (const auto& [w, c] : nf.terms()) CHECK(is_ordered(w));
    const NoncommPoly right = sys.normal_form(p, Strategy::Rightmost);
    for (const auto& [w, c] : right.terms()) CHECK(is_ordered(w));
    const Scalar a = Scalar::from_int(f, 3), b = Scalar::q_power(f, 2);
    CHECK(sys.normal_form(a * p + b * r) == a * nf + b * sys.normal_form(r));
  }
}

TEST_CASE("normal forms preserve the operator action") {
  for (int l : {3, 5}) {
    const ReductionSystem sys(GradedAlgebra::witt_eps11(l));
    const auto& basis = sys.algebra().basis();
    std::mt19937_64 rng(static_cast<std::uint64_t>(l));
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    for (int t = 0; t < 25; ++t) {
      Word w;
      for (int k = 0; k < 4; ++k) w.push_back(basis[pick(rng)]);
      const NoncommPoly p = NoncommPoly::word(sys.field(), w);
      CHECK(act(sys.normal_form(p), l) == act(p, l));
    }
  }
  // generic W^q(1), restricted to a window where the truncation is harmless
  const ReductionSystem sys(GradedAlgebra::witt_q1());
  for (long long a = -1; a <= 3; ++a)
    for (long long b = -1; b <= 3; ++b)
      for (long long c = -1; c <= 3; ++c) {
        const NoncommPoly p = NoncommPoly::word(G, {e(a), e(b), e(c)});
        const NoncommPoly nf = sys.normal_form(p);
        bool same = true;
        for (long long x = 0; x <= 6; ++x) {
          const DividedElement v = DividedElement::monomial(G, x);
          auto apply_poly = [&](const NoncommPoly& q) {
            DividedElement out(G);
            for (const auto& [word, k] : q.terms()) {
              DividedElement cur = v;
              for (auto it = word.rbegin(); it != word.rend(); ++it) cur = apply_e(it->index, cur);
              out += k * cur;
            }
            return out;
          };
          same = same && apply_poly(nf) == apply_poly(p);
        }
        CHECK(same);
      }
}

// Chasing z y x through both first reductions by hand gives
// nf(left) - nf(right) = q^(-(2k+j+1)) nf(J(z, y, x)).
bool defect_matches_jacobi(const ReductionSystem& sys, const BasisElement& x, const BasisElement& y,
                           const BasisElement& z) {
  const Scalar s = Scalar::q_power(sys.field(), -(2 * z.degree() + y.degree() + 1));
  return ambiguity_defect(sys, x, y, z) == s * sys.normal_form(q_jacobi_sum(sys.algebra(), x, y, z));
}

void check_defect_law(const ReductionSystem& sys, const std::vector<BasisElement>& letters) {
  for (std::size_t a = 0; a < letters.size(); ++a)
    for (std::size_t b = a + 1; b < letters.size(); ++b)
      for (std::size_t c = b + 1; c < letters.size(); ++c)
        CHECK(defect_matches_jacobi(sys, letters[a], letters[b], letters[c]));
}

TEST_CASE("overlap ambiguities") {
  const ReductionSystem sys3(GradedAlgebra::witt_eps11(3));
  const auto rep3 = check_confluence(sys3, sys3.algebra().basis(), 2);
  CHECK(rep3.ok());
  CHECK(rep3.ambiguities.checked == 1);

  for (int l : {3, 5, 7}) {
    const ReductionSystem sys(GradedAlgebra::witt_eps11(l));
    const auto rep = check_confluence(sys, sys.algebra().basis(), 2);
    CHECK(rep.ambiguities.checked == l * (l - 1) * (l - 2) / 6);
    CHECK(rep.relations.ok());
    CHECK(rep.compatibility.ok());
    CHECK(rep.ambiguities.failed == rep.jacobi_sums.failed);
    check_defect_law(sys, sys.algebra().basis());
    // a degree-0 letter makes every weight in the sum agree
    for (const auto& x : sys.algebra().basis())
      for (const auto& z : sys.algebra().basis())
        if (x < e(0) && e(0) < z) CHECK(ambiguity_defect(sys, x, e(0), z).is_zero());
  }
  for (int l : {3, 5}) {
    const ReductionSystem h(GradedAlgebra::holomorph_eps1(l));
    check_defect_law(h, h.algebra().basis());
  }
  const ReductionSystem w(GradedAlgebra::witt_q1());
  check_defect_law(w, w.algebra().window(-1, 4));
  const ReductionSystem vir(GradedAlgebra::virasoro_q());
  check_defect_law(vir, vir.algebra().window(-3, 3));

  CHECK(check_confluence(w, {e(1), e(1), e(0)}).ambiguities.checked == 0);
  const ReductionSystem sys5(GradedAlgebra::witt_eps11(5));
  CHECK(ambiguity_defect(sys5, e(-1), e(0), e(1)).is_zero());
}

TEST_CASE("the ambiguity e(2) e(1) e(-1) of W^q(1)") {
  const ReductionSystem w(GradedAlgebra::witt_q1());
  const NoncommPoly J = w.normal_form(q_jacobi_sum(w.algebra(), e(-1), e(1), e(2)));
  // {e(2), e(1)} = -(q^4 + q^2) e(3); the two terms of J containing it reorder
  // to (q^2 + 1 - q^3 - q) e(-1) e(3), and nothing else contributes to that word
  const Scalar q = Scalar::q(G), one = Scalar::from_int(G, 1);
  CHECK(J.coeff(Word{e(-1), e(3)}) == (one - q) * (one + q * q));
  CHECK_FALSE(J.is_zero());
  // every coefficient of the defect vanishes classically
  const NoncommPoly defect = ambiguity_defect(w, e(-1), e(1), e(2));
  for (const auto& [word, c] : defect.terms())
    CHECK(c.evaluate_at(Rational(1)) == Rational(0));
}

TEST_CASE("Jacobi sums") {
  const GradedAlgebra alg = GradedAlgebra::witt_eps11(5);
  const ReductionSystem sys(alg);
  CHECK(sys.normal_form(q_jacobi_sum(alg, e(-1), e(0), e(1))).is_zero());
  CHECK_FALSE(sys.normal_form(q_jacobi_sum(alg, e(-1), e(1), e(2))).is_zero());
}

TEST_CASE("strategy agreement and sampled zero divisors") {
  const ReductionSystem sys3(GradedAlgebra::witt_eps11(3));
  CHECK(strategy_agreement(sys3, sys3.algebra().basis(), 4, 200, 0).ok());
  const ReductionSystem sys(GradedAlgebra::witt_eps11(5));
  const auto agree = strategy_agreement(sys, sys.algebra().basis(), 4, 200, 0, 2);
  CHECK(agree.checked == 200);
  std::vector<BasisElement> with_zero = {e(-1), e(0), e(1)};
  CHECK(strategy_agreement(sys, with_zero, 4, 200, 1).ok());
  const auto z = zero_divisor_sample(sys3, sys3.algebra().basis(), 50, 0);
  CHECK(z.ok());
  CHECK(z.checked > 0);
}

TEST_CASE("power commutation") {
  const ReductionSystem sys(GradedAlgebra::witt_eps11(5));
  const ScalarField& f = sys.field();
  const auto r = power_commutation_check(sys, 1, 0, 1);
  CHECK(r.first_equality);
  NoncommPoly expect = Scalar::q_power(f, -1) * (NoncommPoly::word(f, {e(0), e(1)}) - NoncommPoly::letter(f, e(1)));
  CHECK(sys.normal_form(Word{e(1), e(0)}) == expect);
  for (long long i = -1; i <= 3; ++i) CHECK(power_commutation_check(sys, i, 0, 0).first_equality);
  CHECK(power_commutation_check(sys, -1, 1, 3).first_equality);
  CHECK(power_coefficient(f, 1, 2, 0).is_one());
  CHECK(power_coefficient(f, 2, 3, 1).is_zero());
  for (int l : {3, 5}) {
    const ReductionSystem s(GradedAlgebra::witt_eps11(l));
    for (long long i = -1; i <= l - 2; ++i)
      for (long long n = 1; n <= l; ++n) CHECK(power_commutation_check(s, i, 0, n).first_equality);
  }
}

TEST_CASE("central elements at roots of unity") {
  const ReductionSystem sys(GradedAlgebra::witt_eps11(3));
  const auto rep = central_elements_check(sys);
  CHECK(rep.ok());
  CHECK(rep.checked == 9);
  const ScalarField& f = sys.field();
  const NoncommPoly z0 = central_element(f, 0);
  const NoncommPoly g = NoncommPoly::letter(f, e(0));
  CHECK(sys.normal_form(g * z0 - z0 * g).is_zero());
  // a non-central power for contrast
  const NoncommPoly p = NoncommPoly::letter(f, e(1)).pow(2);
  CHECK_FALSE(sys.normal_form(NoncommPoly::letter(f, e(-1)) * p - p * NoncommPoly::letter(f, e(-1))).is_zero());
  CHECK_THROWS_AS(central_element(G, 1), std::invalid_argument);
}

TEST_CASE("graded leading-term law") {
  for (int l : {3, 5}) CHECK(graded_leading_term_check(ReductionSystem(GradedAlgebra::witt_eps11(l))).ok());
  const ReductionSystem sys(GradedAlgebra::witt_eps11(3));
  const ScalarField& f = sys.field();
  CHECK(sys.normal_form(Word{e(1), e(-1)}).coeff(Word{e(-1), e(1)}) == Scalar::q_power(f, -2));
}

TEST_CASE("Virasoro enveloping algebra") {
  const ReductionSystem sys(GradedAlgebra::virasoro_q());
  const BasisElement C = BasisElement::central();
  // {e(i), C} = 0 leaves the quadratic part: C e(i) = q^i e(i) C
  for (long long i = -3; i <= 3; ++i)
    CHECK(sys.normal_form(Word{C, e(i)}) == NoncommPoly::word(G, {e(i), C}, Scalar::q_power(G, i)));
  const auto rep = check_confluence(sys, sys.algebra().window(-3, 3));
  CHECK(rep.relations.ok());
  CHECK(rep.compatibility.ok());
}
