#pragma once

#include "qwitt/scalar.hpp"

namespace qwitt {

/// A Laurent polynomial sum_i coeffs[i] * q^(i + shift) with integer coefficients.
struct LaurentZ {
  ZPoly coeffs;
  long long shift = 0;
};

/// (n)_q = 1 + q + ... + q^(n-1) for n > 0, 0 for n = 0 and
/// (-n)_q = -q^(-n) (n)_q.
Scalar q_integer(const ScalarField& f, long long n);

/// (1)_q (2)_q ... (n)_q; throws std::invalid_argument for n < 0.
Scalar q_factorial(const ScalarField& f, long long n);

/// The Gaussian polynomial [n choose r] as a Laurent polynomial in q.
/// r < 0 or 0 <= n < r gives 0, r = 0 gives 1, negative n is continued by
/// running the q-Pascal rule backwards.
LaurentZ gaussian_polynomial(long long n, long long r);

/// [n choose r]_q evaluated in the field. The polynomial is formed first and
/// only then reduced, so roots of unity never see a 0/0.
Scalar gauss_binomial(const ScalarField& f, long long n, long long r);

/// [n choose r] evaluated at base q^power instead of q (e.g. power = -j for
/// the base e^(-j)).
Scalar gauss_binomial_at_power(const ScalarField& f, long long n, long long r, long long power);

/// (2)_{q^d} = 1 + q^d.
Scalar two_at_power(const ScalarField& f, long long d);

/// (a)_q + q^a (b)_q = (a+b)_q together with
/// [a+b-1, a-1]_q + q^a [a+b-1, a]_q = [a+b, a]_q.
bool verify_q_pascal(const ScalarField& f, long long a, long long b);

}  // namespace qwitt
