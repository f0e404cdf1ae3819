#pragma once

#include <array>
#include <vector>

#include "qwitt/algebra.hpp"
#include "qwitt/report.hpp"

namespace qwitt {

using Triple = std::array<BasisElement, 3>;

/// {x, x} = 0 and {x, y} = -{y, x} over all pairs of the given basis.
CheckReport verify_antisymmetry(const GradedAlgebra& alg, const std::vector<BasisElement>& basis);

/// Every bracket of two listed basis elements has the summed degree.
CheckReport verify_grading(const GradedAlgebra& alg, const std::vector<BasisElement>& basis);

/// (2)_{q^deg x} {x,{y,z}} + (2)_{q^deg y} {y,{z,x}} + (2)_{q^deg z} {z,{x,y}}.
AlgebraElement weighted_jacobi_sum(const GradedAlgebra& alg, const BasisElement& x, const BasisElement& y,
                                   const BasisElement& z);
bool verify_weighted_jacobi(const GradedAlgebra& alg, const BasisElement& x, const BasisElement& y,
                            const BasisElement& z);

/// All ordered triples of the basis (n^3 of them).
std::vector<Triple> all_triples(const std::vector<BasisElement>& basis);
/// Vir^q triples (e_i, e_j, e_k) with i + j + k = 0 and |i|, |j| <= bound.
std::vector<Triple> virasoro_triples(long long bound);

CheckReport sweep_weighted_jacobi(const GradedAlgebra& alg, const std::vector<Triple>& triples, int jobs = 1);

/// Basis of {x in span(window) : {x, s} = 0 for all s in subset}.
std::vector<AlgebraElement> q_centralizer(const GradedAlgebra& alg, const std::vector<AlgebraElement>& subset,
                                          const std::vector<BasisElement>& window);
/// Basis of {x in span(window) : {x, S} is contained in S}, S = span(spanning).
std::vector<AlgebraElement> q_normalizer(const GradedAlgebra& alg, const std::vector<AlgebraElement>& spanning,
                                         const std::vector<BasisElement>& window);
/// {x, b} = 0 for every b in the window.
bool is_q_central(const GradedAlgebra& alg, const AlgebraElement& x, const std::vector<BasisElement>& window);

/// True iff v lies in the span of the given elements.
bool in_span(const std::vector<AlgebraElement>& span, const AlgebraElement& v);

/// The bracket computed from the structure constants agrees with the
/// operator bracket q^(i+1) e_i e_j - q^(j+1) e_j e_i of e_n = x^(n+1) d_q on
/// x^n, for |i|, |j|, |n| <= bound.
CheckReport verify_operator_consistency(const ScalarField& f, long long bound);

/// At q = 1 the W^q constants become j - i, for |i|, |j| <= bound.
CheckReport verify_classical_limit(long long bound);

/// In H^e(1), L_0 is central and span{L_0} + W^e(1,1) is a direct sum of ideals.
CheckReport verify_split_extension(int l);

}  // namespace qwitt
