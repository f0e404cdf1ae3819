#include "qwitt/qnumbers.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qwitt {

namespace {

LaurentZ laurent_sub(const LaurentZ& a, const LaurentZ& b) {
  if (b.coeffs.is_zero()) return a;
  if (a.coeffs.is_zero()) return {-b.coeffs, b.shift};
  const long long s = std::min(a.shift, b.shift);
  ZPoly r = a.coeffs.shifted(static_cast<std::size_t>(a.shift - s)) -
            b.coeffs.shifted(static_cast<std::size_t>(b.shift - s));
  return {std::move(r), s};
}

LaurentZ laurent_from(ZPoly p) { return {std::move(p), 0}; }

// [n choose r] for n >= 0 via the product of (1 - q^(n-r+k)) / (1 - q^k);
// every partial product is itself a Gaussian polynomial, so each division is exact.
ZPoly gaussian_nonnegative(long long n, long long r) {
  if (r < 0 || r > n) return ZPoly();
  r = std::min(r, n - r);
  ZPoly p = ZPoly::constant(Integer(1));
  for (long long k = 1; k <= r; ++k) {
    p = times_one_minus_power(p, static_cast<std::size_t>(n - r + k));
    p = divide_one_minus_power(p, static_cast<std::size_t>(k));
  }
  return p;
}

}  // namespace

Scalar q_integer(const ScalarField& f, long long n) {
  if (n == 0) return Scalar(f);
  const long long m = n > 0 ? n : -n;
  std::vector<Integer> ones(static_cast<std::size_t>(m), Integer(1));
  ZPoly p(std::move(ones));
  if (n > 0) return Scalar::from_poly(f, p);
  return Scalar::from_laurent(f, -p, -m);
}

Scalar q_factorial(const ScalarField& f, long long n) {
  if (n < 0) throw std::invalid_argument("q_factorial of negative integer " + std::to_string(n));
  Scalar r = Scalar::from_int(f, 1);
  for (long long k = 2; k <= n && !r.is_zero(); ++k) r *= q_integer(f, k);
  return r;
}

LaurentZ gaussian_polynomial(long long n, long long r) {
  if (r < 0) return {};
  if (r == 0) return laurent_from(ZPoly::constant(Integer(1)));
  if (n >= 0) return laurent_from(gaussian_nonnegative(n, r));
  // Backward q-Pascal: [m-1, s] = q^(-s) ([m, s] - [m-1, s-1]), starting from row m = 0.
  std::vector<LaurentZ> row(static_cast<std::size_t>(r + 1));
  row[0] = laurent_from(ZPoly::constant(Integer(1)));
  for (long long m = 0; m > n; --m) {
    std::vector<LaurentZ> next(row.size());
    next[0] = laurent_from(ZPoly::constant(Integer(1)));
    for (std::size_t s = 1; s < row.size(); ++s) {
      LaurentZ d = laurent_sub(row[s], next[s - 1]);
      d.shift -= static_cast<long long>(s);
      next[s] = std::move(d);
    }
    row = std::move(next);
  }
  LaurentZ out = row.back();
  if (!out.coeffs.is_zero()) {
    const std::size_t v = out.coeffs.valuation();
    out.coeffs = out.coeffs.unshifted(v);
    out.shift += static_cast<long long>(v);
  }
  return out;
}

Scalar gauss_binomial(const ScalarField& f, long long n, long long r) {
  const LaurentZ g = gaussian_polynomial(n, r);
  return Scalar::from_laurent(f, g.coeffs, g.shift);
}

Scalar gauss_binomial_at_power(const ScalarField& f, long long n, long long r, long long power) {
  if (power == 1) return gauss_binomial(f, n, r);
  const LaurentZ g = gaussian_polynomial(n, r);
  if (g.coeffs.is_zero()) return Scalar(f);
  std::map<long long, Integer> terms;
  for (std::size_t i = 0; i < g.coeffs.size(); ++i) {
    if (sgn(g.coeffs[i]) == 0) continue;
    terms[power * (static_cast<long long>(i) + g.shift)] += g.coeffs[i];
  }
  const long long lo = terms.begin()->first;
  const long long hi = terms.rbegin()->first;
  std::vector<Integer> c(static_cast<std::size_t>(hi - lo + 1), Integer(0));
  for (const auto& [e, v] : terms) c[static_cast<std::size_t>(e - lo)] = v;
  return Scalar::from_laurent(f, ZPoly(std::move(c)), lo);
}

Scalar two_at_power(const ScalarField& f, long long d) { return Scalar::from_int(f, 1) + Scalar::q_power(f, d); }

bool verify_q_pascal(const ScalarField& f, long long a, long long b) {
  const Scalar qa = Scalar::q_power(f, a);
  const bool integers = q_integer(f, a) + qa * q_integer(f, b) == q_integer(f, a + b);
  const bool binomials =
      gauss_binomial(f, a + b - 1, a - 1) + qa * gauss_binomial(f, a + b - 1, a) == gauss_binomial(f, a + b, a);
  return integers && binomials;
}

}  // namespace qwitt
