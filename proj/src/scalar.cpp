#include "qwitt/scalar.hpp"

#include <sstream>
#include <stdexcept>

namespace qwitt {

ScalarField ScalarField::root_of_unity(int l) {
  if (l < 2) throw std::invalid_argument("root of unity order must be at least 2, got " + std::to_string(l));
  ScalarField f;
  ZPoly m = cyclotomic_polynomial(l);
  QPoly mq = to_qpoly(m);
  f.ring_ = std::make_shared<const Ring>(Ring{l, std::move(m), std::move(mq)});
  return f;
}

const ZPoly& ScalarField::modulus() const {
  if (!ring_) throw std::logic_error("generic field has no cyclotomic modulus");
  return ring_->modulus;
}

const QPoly& ScalarField::rational_modulus() const {
  if (!ring_) throw std::logic_error("generic field has no cyclotomic modulus");
  return ring_->rational_modulus;
}

std::string ScalarField::to_string() const {
  return ring_ ? "root(" + std::to_string(ring_->l) + ")" : std::string("generic");
}

namespace {

const ZPoly& one_poly() {
  static const ZPoly one = ZPoly::constant(Integer(1));
  return one;
}

// Reduces p modulo the monic cyclotomic polynomial of order l.
ZPoly reduce_cyclotomic(const ZPoly& p, const ScalarField& f) {
  const ZPoly& m = f.modulus();
  const auto l = static_cast<std::size_t>(f.order());
  const int dm = m.degree();
  if (p.degree() < dm) return p;
  // Phi_l divides x^l - 1, so fold exponents modulo l first.
  std::vector<Integer> c(std::min(p.size(), l), Integer(0));
  for (std::size_t i = 0; i < p.size(); ++i) c[i % l] += p[i];
  for (int k = static_cast<int>(c.size()) - 1; k >= dm; --k) {
    const Integer top = c[static_cast<std::size_t>(k)];
    if (sgn(top) == 0) continue;
    const int s = k - dm;
    for (int i = 0; i <= dm; ++i) c[static_cast<std::size_t>(s + i)] -= top * m[static_cast<std::size_t>(i)];
  }
  if (c.size() > static_cast<std::size_t>(dm)) c.resize(static_cast<std::size_t>(dm));
  return ZPoly(std::move(c));
}

void divide_all(ZPoly& p, const Integer& g) {
  std::vector<Integer> c = p.coeffs();
  for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  p = ZPoly(std::move(c));
}

}  // namespace

Scalar Scalar::from_int(const ScalarField& f, long long v) { return from_integer(f, Integer(static_cast<long>(v))); }

Scalar Scalar::from_integer(const ScalarField& f, const Integer& v) {
  Scalar s(f);
  s.num_ = ZPoly::constant(v);
  return s;
}

Scalar Scalar::from_rational(const ScalarField& f, const Rational& v) {
  Scalar s(f);
  s.num_ = ZPoly::constant(v.get_num());
  s.den_ = ZPoly::constant(v.get_den());
  return s;
}

Scalar Scalar::q_power(const ScalarField& f, long long k) {
  return from_laurent(f, one_poly(), k);
}

Scalar Scalar::from_poly(const ScalarField& f, const ZPoly& p) { return from_laurent(f, p, 0); }

Scalar Scalar::from_laurent(const ScalarField& f, const ZPoly& p, long long shift) {
  Scalar s(f);
  if (p.is_zero()) return s;
  if (f.is_root_of_unity()) {
    const long long l = f.order();
    const auto k = static_cast<std::size_t>(((shift % l) + l) % l);
    s.num_ = reduce_cyclotomic(p.shifted(k), f);
    return s;
  }
  if (shift >= 0) {
    s.num_ = p.shifted(static_cast<std::size_t>(shift));
    return s;
  }
  s.num_ = p;
  s.den_ = ZPoly::monomial(Integer(1), static_cast<std::size_t>(-shift));
  s.canonicalize();
  return s;
}

Scalar Scalar::fraction(const ScalarField& f, const ZPoly& num, const ZPoly& den) {
  if (den.is_zero()) throw std::domain_error("division by zero");
  if (f.is_root_of_unity()) return from_poly(f, num) / from_poly(f, den);
  Scalar s(f);
  s.num_ = num;
  s.den_ = den;
  s.canonicalize();
  return s;
}

bool Scalar::is_one() const { return num_ == one_poly() && den_ == one_poly(); }

bool Scalar::is_integer() const { return num_.is_constant() && den_ == one_poly(); }

void Scalar::canonicalize() {
  if (den_.is_zero()) throw std::domain_error("division by zero");
  if (num_.is_zero()) {
    den_ = one_poly();
    return;
  }
  if (field_.is_root_of_unity()) {
    num_ = reduce_cyclotomic(num_, field_);
    if (num_.is_zero()) {
      den_ = one_poly();
      return;
    }
  } else if (!den_.is_constant()) {
    ZPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = exact_divide(num_, g);
      den_ = exact_divide(den_, g);
    }
  }
  Integer c = content(num_);
  Integer cd = content(den_);
  mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), cd.get_mpz_t());
  if (sgn(den_.lead()) < 0) c = -c;
  if (c != 1) {
    divide_all(num_, c);
    divide_all(den_, c);
  }
}

void Scalar::require_same_field(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw std::invalid_argument("scalar field mismatch: " + field_.to_string() + " vs " + o.field_.to_string());
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (den_ == one_poly()) return *this;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  canonicalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = o;
  num_ = num_ * o.num_;
  const bool unit_dens = den_ == one_poly() && o.den_ == one_poly();
  if (!(o.den_ == one_poly())) den_ = den_ * o.den_;
  if (unit_dens && field_.is_generic()) return *this;
  canonicalize();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Scalar r(field_);
  if (field_.is_generic()) {
    r.num_ = den_;
    r.den_ = num_;
    r.canonicalize();
    return r;
  }
  QPoly inv = inverse_mod(to_qpoly(num_), field_.rational_modulus());
  auto [z, d] = clear_denominators(inv);
  r.num_ = z * den_.lead();
  r.den_ = ZPoly::constant(d);
  r.canonicalize();
  return r;
}

Scalar Scalar::pow(long long k) const {
  if (k < 0) return inverse().pow(-k);
  Scalar result = from_int(field_, 1);
  Scalar base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

Rational Scalar::evaluate_at(const Rational& x) const {
  if (!field_.is_generic()) throw std::logic_error("evaluate_at requires generic mode");
  auto lift = [](const Integer& c) { return Rational(c); };
  const Rational n = num_.evaluate(x, Rational(0), lift);
  const Rational d = den_.evaluate(x, Rational(0), lift);
  if (sgn(d) == 0) throw std::domain_error("pole at the substituted value");
  return n / d;
}

bool Scalar::as_monomial(Rational& coeff, long long& exponent) const {
  if (!num_.is_monomial() || !den_.is_monomial()) return false;
  coeff = Rational(num_.lead(), den_.lead());
  coeff.canonicalize();
  exponent = static_cast<long long>(num_.valuation()) - static_cast<long long>(den_.valuation());
  return true;
}

std::string format_terms(const std::vector<std::pair<Rational, long long>>& terms, std::string_view var) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, k] : terms) {
    const bool neg = sgn(c) < 0;
    const Rational mag = abs(c);
    std::string piece;
    if (k == 0) {
      piece = mag.get_str();
    } else {
      std::string mono(var);
      if (k != 1) mono += "^" + std::to_string(k);
      piece = mag == 1 ? mono : mag.get_str() + "*" + mono;
    }
    if (first) {
      out = neg ? "-" + piece : piece;
      first = false;
    } else {
      out += neg ? " - " : " + ";
      out += piece;
    }
  }
  return out;
}

namespace {

std::string format_poly(const ZPoly& p, const Integer& scale, long long shift, std::string_view var) {
  std::vector<std::pair<Rational, long long>> terms;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (sgn(p[i]) == 0) continue;
    Rational c(p[i], scale);
    c.canonicalize();
    terms.emplace_back(c, static_cast<long long>(i) + shift);
  }
  return format_terms(terms, var);
}

}  // namespace

std::string Scalar::to_string() const {
  if (is_zero()) return "0";
  if (field_.is_root_of_unity()) return format_poly(num_, den_.lead(), 0, "e");
  if (den_.is_monomial())
    return format_poly(num_, den_.lead(), -static_cast<long long>(den_.valuation()), "q");
  return "(" + format_poly(num_, Integer(1), 0, "q") + ")/(" + format_poly(den_, Integer(1), 0, "q") + ")";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

std::string coefficient_times(const Scalar& c, const std::string& mono) {
  if (mono.empty()) {
    const std::string s = c.to_string();
    return s.find(' ') == std::string::npos ? s : "(" + s + ")";
  }
  if (c.is_one()) return mono;
  if ((-c).is_one()) return "-" + mono;
  const std::string s = c.to_string();
  if (s.find(' ') == std::string::npos) return s + "*" + mono;
  return "(" + s + ")*" + mono;
}

std::string join_signed(const std::vector<std::string>& pieces) {
  if (pieces.empty()) return "0";
  std::string out = pieces.front();
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    const std::string& p = pieces[i];
    if (!p.empty() && p[0] == '-')
      out += " - " + p.substr(1);
    else
      out += " + " + p;
  }
  return out;
}

}  // namespace qwitt
