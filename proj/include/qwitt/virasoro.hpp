#pragma once

#include "qwitt/report.hpp"
#include "qwitt/scalar.hpp"

namespace qwitt {

/// o(i, j) = (j+1)_q - (i+1)_q, the W^q structure constant.
Scalar witt_constant(const ScalarField& f, long long i, long long j);

/// Coefficient of C in {e_i, e_-i}_q:
///   (i-1)_q (i)_q (i+1)_q / (q^i (2)_{q^i} (2)_q (3)_q).
/// Generic mode only; throws std::invalid_argument at a root of unity,
/// where (2)_{q^i} or (2)_q (3)_q can vanish.
Scalar virasoro_cocycle(const ScalarField& f, long long i);

/// c(i, j): the cocycle above when i + j = 0 and zero otherwise.
Scalar cocycle(const ScalarField& f, long long i, long long j);

/// Delta(r) = (r+1)_q (r)_q (r-1)_q / ((2)_q (3)_q), normalized by Delta(2) = 1.
Scalar cocycle_delta(const ScalarField& f, long long r);

/// Runs Delta(r) = (r+1)_q / (r-2)_q * Delta(r-1) from Delta(2) = 1 and
/// compares with the closed form and with q^r (2)_{q^r} c(r,-r) for
/// 3 <= r <= r_max; also checks that the two forms of the ratio,
/// (q^2 - q^(1-r)) / (q^-1 - q^(1-r)) and (r+1)_q / (r-2)_q, agree.
CheckReport verify_cocycle_recursion(const ScalarField& f, long long r_max);

/// c(-i, i) = -c(i, -i) for 1 <= i <= i_max.
CheckReport verify_cocycle_antisymmetry(const ScalarField& f, long long i_max);

}  // namespace qwitt
