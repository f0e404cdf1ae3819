#include "doctest.h"

#include "qwitt/divided.hpp"
#include "qwitt/qnumbers.hpp"

using namespace qwitt;

namespace {

const ScalarField G = ScalarField::generic();

Scalar one(const ScalarField& f) { return Scalar::from_int(f, 1); }

DividedElement xd(const ScalarField& f, long long a) { return DividedElement::monomial(f, a); }
LaurentPoly xl(const ScalarField& f, long long n) { return LaurentPoly::monomial(f, n); }

// Difference quotient (P(qx) - P(x)) / (qx - x) on a monomial, formed directly.
LaurentPoly difference_quotient(const ScalarField& f, long long n) {
  const Scalar q = Scalar::q(f);
  const Scalar c = (q.pow(n) - one(f)) / (q - one(f));
  return LaurentPoly::monomial(f, n - 1, c);
}

}  // namespace

TEST_CASE("Jackson derivative") {
  CHECK(jackson_derivative(xl(G, 0)).is_zero());
  CHECK(jackson_derivative(xl(G, -1)) == LaurentPoly::monomial(G, -2, -Scalar::q_power(G, -1)));
  for (long long n = -10; n <= 10; ++n) {
    CHECK(jackson_derivative(xl(G, n)) == LaurentPoly::monomial(G, n - 1, q_integer(G, n)));
    if (n != 0) CHECK(jackson_derivative(xl(G, n)) == difference_quotient(G, n));
  }
}

TEST_CASE("tau") {
  CHECK(tau(xl(G, 0)) == xl(G, 0));
  CHECK(tau(xl(G, 3)) == LaurentPoly::monomial(G, 3, Scalar::q_power(G, 3)));
  CHECK(tau(xd(G, 2)) == DividedElement::monomial(G, 2, Scalar::q_power(G, 2)));
  // automorphism
  for (long long m = -4; m <= 4; ++m)
    for (long long n = -4; n <= 4; ++n) CHECK(tau(xl(G, m) * xl(G, n)) == tau(xl(G, m)) * tau(xl(G, n)));
}

TEST_CASE("divided power products") {
  CHECK(dp_multiply(xd(G, 0), xd(G, 4)) == xd(G, 4));
  CHECK(dp_multiply(xd(G, 1), xd(G, 1)) == DividedElement::monomial(G, 2, one(G) + Scalar::q(G)));
  const auto f3 = ScalarField::root_of_unity(3);
  bool vanish = true;
  CHECK(dp_multiply(xd(f3, 2), xd(f3, 2), &vanish).is_zero());
  CHECK(vanish);

  for (long long a = 0; a <= 5; ++a)
    for (long long b = 0; b <= 5; ++b) {
      CHECK(dp_multiply(xd(G, a), xd(G, b)) == dp_multiply(xd(G, b), xd(G, a)));
      for (long long c = 0; c <= 5; ++c)
        CHECK(dp_multiply(dp_multiply(xd(G, a), xd(G, b)), xd(G, c)) ==
              dp_multiply(xd(G, a), dp_multiply(xd(G, b), xd(G, c))));
    }
  for (int l : {3, 4, 5, 7}) {
    const auto f = ScalarField::root_of_unity(l);
    for (long long a = 0; a < l; ++a)
      for (long long b = 0; b < l; ++b)
        for (long long c = 0; c < l; ++c)
          CHECK(dp_multiply(dp_multiply(xd(f, a), xd(f, b)), xd(f, c)) ==
                dp_multiply(xd(f, a), dp_multiply(xd(f, b), xd(f, c))));
  }
}

TEST_CASE("generic x^(a) matches x^a / (a)!") {
  for (long long a = 0; a <= 6; ++a)
    for (long long b = 0; b <= 6; ++b)
      CHECK(to_laurent(dp_multiply(xd(G, a), xd(G, b))) == to_laurent(xd(G, a)) * to_laurent(xd(G, b)));
}

TEST_CASE("l-th powers vanish at roots of unity") {
  for (int l : {3, 4, 5, 6, 7}) {
    const auto f = ScalarField::root_of_unity(l);
    for (long long a = 1; a < l; ++a) {
      DividedElement p = xd(f, 0);
      bool vanish = true;
      for (int k = 0; k < l; ++k) p = dp_multiply(p, xd(f, a), &vanish);
      CHECK(p.is_zero());
      CHECK(vanish);
    }
  }
}

TEST_CASE("divided derivative and e(n)") {
  CHECK(dp_derivative(xd(G, 0)).is_zero());
  CHECK(dp_derivative(xd(G, 5)) == xd(G, 4));
  const DividedElement u = xd(G, 1) + Scalar::from_int(G, 2) * xd(G, 3);
  CHECK(dp_derivative(u) == xd(G, 0) + Scalar::from_int(G, 2) * xd(G, 2));

  for (long long a = 1; a <= 8; ++a) {
    CHECK(apply_e(-1, xd(G, a)) == xd(G, a - 1));
    CHECK(apply_e(0, xd(G, a)) == DividedElement::monomial(G, a, q_integer(G, a)));
  }
  CHECK(apply_e(2, xd(G, 0)).is_zero());
  for (long long n = -1; n <= 5; ++n)
    for (long long a = 0; a <= 6; ++a) {
      const DividedElement expect =
          a == 0 ? DividedElement(G) : DividedElement::monomial(G, a + n, gauss_binomial(G, a + n, n + 1));
      CHECK(apply_e(n, xd(G, a)) == expect);
    }
  const auto f5 = ScalarField::root_of_unity(5);
  CHECK_THROWS_AS(apply_e(4, xd(f5, 1)), std::invalid_argument);
  CHECK_THROWS_AS(apply_e(-2, xd(G, 1)), std::invalid_argument);
  CHECK_THROWS_AS(xd(f5, 5), std::invalid_argument);
  CHECK_NOTHROW(apply_e(3, xd(f5, 4)));
}

TEST_CASE("rescaled e(n) is x^(n+1) d_q") {
  for (long long n = -1; n <= 6; ++n)
    for (long long a = 0; a <= 10; ++a) {
      const LaurentPoly lhs = to_laurent(q_factorial(G, n + 1) * apply_e(n, xd(G, a)));
      CHECK(lhs == apply_witt(n, to_laurent(xd(G, a))));
    }
}

TEST_CASE("skew Leibniz rule") {
  CHECK(verify_skew_leibniz(xl(G, 2), xl(G, 3)));
  CHECK(jackson_derivative(xl(G, 2) * xl(G, 3)) == LaurentPoly::monomial(G, 4, q_integer(G, 5)));
  for (long long m = -10; m <= 10; ++m)
    for (long long n = -10; n <= 10; ++n) CHECK(verify_skew_leibniz(xl(G, m), xl(G, n)));
  for (long long a = 0; a <= 8; ++a)
    for (long long b = 0; b <= 8; ++b) CHECK(verify_skew_leibniz(xd(G, a), xd(G, b)));
  CHECK(verify_skew_leibniz(xd(G, 0), xd(G, 0)));
  for (int l : {3, 5, 7, 8}) {
    const auto f = ScalarField::root_of_unity(l);
    for (long long a = 0; a < l; ++a)
      for (long long b = 0; b < l; ++b) CHECK(verify_skew_leibniz(xd(f, a), xd(f, b)));
    for (long long m = -5; m <= 5; ++m)
      for (long long n = -5; n <= 5; ++n) CHECK(verify_skew_leibniz(xl(f, m), xl(f, n)));
  }
}

TEST_CASE("text form") {
  CHECK(DividedElement::monomial(G, 2, one(G) + Scalar::q(G)).to_string() == "(q + 1)*x^(2)");
  CHECK((xl(G, -1) - xl(G, 3)).to_string() == "-x^3 + x^-1");
  CHECK(DividedElement(G).to_string() == "0");
}
