#include "qwitt/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace qwitt {

Integer content(const ZPoly& p) {
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly primitive_part(const ZPoly& p) {
  if (p.is_zero()) return p;
  Integer g = content(p);
  if (sgn(p.lead()) < 0) g = -g;
  if (g == 1) return p;
  std::vector<Integer> c = p.coeffs();
  for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return ZPoly(std::move(c));
}

namespace {

ZPoly pseudo_remainder(ZPoly r, const ZPoly& g) {
  const int d = g.degree();
  const Integer& lc = g.lead();
  while (!r.is_zero() && r.degree() >= d) {
    Integer c = r.lead();
    const auto s = static_cast<std::size_t>(r.degree() - d);
    r *= lc;
    r -= (g * c).shifted(s);
    // the leading term cancels exactly; trim() inside -= drops it
  }
  return r;
}

}  // namespace

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  const std::size_t v = std::min(a.valuation(), b.valuation());
  if (a.is_monomial() || b.is_monomial()) return ZPoly::monomial(Integer(1), v);
  ZPoly f = primitive_part(a.unshifted(a.valuation()));
  ZPoly g = primitive_part(b.unshifted(b.valuation()));
  if (f.degree() < g.degree()) std::swap(f, g);
  while (!g.is_zero()) {
    if (g.degree() == 0) {
      f = ZPoly::constant(Integer(1));
      break;
    }
    ZPoly r = pseudo_remainder(f, g);
    f = std::move(g);
    g = primitive_part(r);
  }
  return primitive_part(f).shifted(v);
}

ZPoly exact_divide(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.is_zero()) return a;
  if (b.is_monomial()) {
    const std::size_t k = b.valuation();
    if (a.valuation() < k) throw std::domain_error("inexact polynomial division");
    ZPoly q = a.unshifted(k);
    const Integer& c = b.lead();
    if (c == 1) return q;
    std::vector<Integer> cs = q.coeffs();
    for (auto& x : cs) {
      if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t()))
        throw std::domain_error("inexact polynomial division");
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    }
    return ZPoly(std::move(cs));
  }
  if (a.degree() < b.degree()) throw std::domain_error("inexact polynomial division");
  std::vector<Integer> r = a.coeffs();
  const int db = b.degree();
  std::vector<Integer> q(static_cast<std::size_t>(a.degree() - db + 1), Integer(0));
  const Integer& lb = b.lead();
  for (int k = a.degree() - db; k >= 0; --k) {
    Integer& top = r[static_cast<std::size_t>(k + db)];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t()))
      throw std::domain_error("inexact polynomial division");
    Integer c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(k + i)] -= c * b[static_cast<std::size_t>(i)];
    q[static_cast<std::size_t>(k)] = c;
  }
  for (const auto& x : r)
    if (sgn(x) != 0) throw std::domain_error("inexact polynomial division");
  return ZPoly(std::move(q));
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {QPoly(), a};
  std::vector<Rational> r = a.coeffs();
  const int db = b.degree();
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  const Rational inv_lead = 1 / b.lead();
  for (int k = a.degree() - db; k >= 0; --k) {
    const Rational c = r[static_cast<std::size_t>(k + db)] * inv_lead;
    if (sgn(c) == 0) continue;
    for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(k + i)] -= c * b[static_cast<std::size_t>(i)];
    q[static_cast<std::size_t>(k)] = c;
  }
  r.resize(static_cast<std::size_t>(db));
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly to_qpoly(const ZPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.size());
  for (const auto& v : p.coeffs()) c.emplace_back(v);
  return QPoly(std::move(c));
}

std::pair<ZPoly, Integer> clear_denominators(const QPoly& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> z;
  z.reserve(p.size());
  for (const auto& c : p.coeffs()) {
    Integer v = l / c.get_den();
    z.push_back(v * c.get_num());
  }
  ZPoly num(std::move(z));
  Integer g = content(num);
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), l.get_mpz_t());
  if (g != 1 && g != 0) {
    std::vector<Integer> c = num.coeffs();
    for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    num = ZPoly(std::move(c));
    mpz_divexact(l.get_mpz_t(), l.get_mpz_t(), g.get_mpz_t());
  }
  return {std::move(num), std::move(l)};
}

QPoly inverse_mod(const QPoly& a, const QPoly& m) {
  // extended Euclid: track s with s*a = r (mod m)
  QPoly r0 = m, r1 = divmod(a, m).second;
  QPoly s0, s1 = QPoly::constant(Rational(1));
  while (!r1.is_zero()) {
    auto [quot, rem] = divmod(r0, r1);
    QPoly s2 = s0 - quot * s1;
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.degree() != 0) throw std::domain_error("element is not invertible");
  const Rational inv = 1 / r0.lead();
  return divmod(s0 * inv, m).second;
}

ZPoly cyclotomic_polynomial(int l) {
  if (l < 1) throw std::invalid_argument("cyclotomic order must be positive");
  ZPoly p = ZPoly::monomial(Integer(1), static_cast<std::size_t>(l)) - ZPoly::constant(Integer(1));
  for (int d = 1; d < l; ++d)
    if (l % d == 0) p = exact_divide(p, cyclotomic_polynomial(d));
  return p;
}

ZPoly times_one_minus_power(const ZPoly& p, std::size_t k) { return p - p.shifted(k); }

ZPoly divide_one_minus_power(const ZPoly& p, std::size_t k) {
  if (p.is_zero()) return p;
  const std::size_t n = p.size();
  if (n <= k) throw std::domain_error("inexact division by 1 - x^k");
  std::vector<Integer> h(n, Integer(0));
  for (std::size_t i = 0; i < n; ++i) {
    h[i] = p[i];
    if (i >= k) h[i] += h[i - k];
  }
  for (std::size_t i = n - k; i < n; ++i)
    if (sgn(h[i]) != 0) throw std::domain_error("inexact division by 1 - x^k");
  h.resize(n - k);
  return ZPoly(std::move(h));
}

}  // namespace qwitt
