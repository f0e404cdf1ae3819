#include "qwitt/expr.hpp"

#include <cctype>
#include <functional>

namespace qwitt {

namespace {

using Kind = Expr::Kind;

ExprPtr node(Kind k, std::size_t offset, std::vector<ExprPtr> args = {}) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->offset = offset;
  e->args = std::move(args);
  return e;
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  ExprPtr run() {
    ExprPtr e = expr();
    skip();
    if (p_ != s_.size()) fail("unexpected '" + std::string(1, s_[p_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(p_, what); }

  void skip() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }
  bool peek(char c) {
    skip();
    return p_ < s_.size() && s_[p_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++p_;
  }

  Integer natural() {
    skip();
    const std::size_t start = p_;
    while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
    if (start == p_) fail("expected integer");
    return Integer(std::string(s_.substr(start, p_ - start)));
  }
  long long small_natural() {
    const std::size_t at = (skip(), p_);
    const Integer v = natural();
    if (!v.fits_slong_p()) throw ParseError(at, "integer too large");
    return v.get_si();
  }
  long long integer() {
    bool neg = false;
    if (peek('-')) {
      ++p_;
      neg = true;
    }
    const long long v = small_natural();
    return neg ? -v : v;
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (true) {
      skip();
      if (p_ >= s_.size() || (s_[p_] != '+' && s_[p_] != '-')) return lhs;
      const std::size_t at = p_;
      const Kind k = s_[p_++] == '+' ? Kind::Add : Kind::Sub;
      lhs = node(k, at, {lhs, term()});
    }
  }
  ExprPtr term() {
    ExprPtr lhs = unary();
    while (true) {
      skip();
      if (p_ >= s_.size() || (s_[p_] != '*' && s_[p_] != '/')) return lhs;
      const std::size_t at = p_;
      const Kind k = s_[p_++] == '*' ? Kind::Mul : Kind::Div;
      lhs = node(k, at, {lhs, unary()});
    }
  }
  ExprPtr unary() {
    if (peek('-')) {
      const std::size_t at = p_++;
      return node(Kind::Neg, at, {unary()});
    }
    return factor();
  }
  ExprPtr factor() {
    ExprPtr base = atom();
    if (!peek('^')) return base;
    const std::size_t at = p_++;
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Pow;
    e->offset = at;
    e->index = integer();
    e->args = {base};
    return e;
  }
  ExprPtr atom() {
    skip();
    if (p_ >= s_.size()) fail("unexpected end of input");
    const std::size_t at = p_;
    const char c = s_[p_];
    if (c == '(') {
      ++p_;
      ExprPtr inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto e = std::make_shared<Expr>();
      e->kind = Kind::Number;
      e->offset = at;
      e->number = natural();
      return e;
    }
    ++p_;
    const bool call = p_ < s_.size() && s_[p_] == '(';
    switch (c) {
      case 'q':
        return node(Kind::Q, at);
      case 't':
        return node(Kind::T, at);
      case 'C':
        return generator(at, BasisElement::central());
      case 'e':
        if (!call) return node(Kind::Eps, at);
        [[fallthrough]];
      case 'L': {
        if (!call) fail("expected '('");
        ++p_;
        const long long i = integer();
        expect(')');
        return generator(at, c == 'e' ? BasisElement::e(i) : BasisElement::L(i));
      }
      case 'x': {
        if (p_ >= s_.size() || s_[p_] != '^') fail("expected '^' after x");
        ++p_;
        auto e = std::make_shared<Expr>();
        e->offset = at;
        if (p_ < s_.size() && s_[p_] == '(') {
          ++p_;
          e->kind = Kind::Divided;
          e->index = small_natural();
          expect(')');
        } else {
          e->kind = Kind::Laurent;
          e->index = integer();
        }
        return e;
      }
      default:
        p_ = at;
        fail("unexpected '" + std::string(1, c) + "'");
    }
  }
  ExprPtr generator(std::size_t at, const BasisElement& b) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Gen;
    e->offset = at;
    e->generator = b;
    return e;
  }

  std::string_view s_;
  std::size_t p_ = 0;
};

int precedence(Kind k) {
  switch (k) {
    case Kind::Add:
    case Kind::Sub:
      return 1;
    case Kind::Mul:
    case Kind::Div:
      return 2;
    case Kind::Neg:
      return 3;
    case Kind::Pow:
      return 4;
    default:
      return 5;
  }
}

std::string wrap(const Expr& e, int min_prec) {
  const std::string s = print(e);
  return precedence(e.kind) < min_prec ? "(" + s + ")" : s;
}

bool scalar_only(const Expr& e) {
  switch (e.kind) {
    case Kind::Gen:
    case Kind::Divided:
    case Kind::Laurent:
    case Kind::T:
      return false;
    default:
      for (const auto& a : e.args)
        if (!scalar_only(*a)) return false;
      return true;
  }
}

// Shared evaluation over any ring with +, -, * and scalar embedding.
template <class R>
R fold(const Expr& e, const ScalarField& f, const std::function<R(const Expr&)>& leaf,
       const std::function<R(const Scalar&)>& embed, const std::function<R(const R&, const R&)>& mul) {
  auto rec = [&](const Expr& x) { return fold<R>(x, f, leaf, embed, mul); };
  if (scalar_only(e)) return embed(eval_scalar(e, f));
  switch (e.kind) {
    case Kind::Add:
      return rec(*e.args[0]) + rec(*e.args[1]);
    case Kind::Sub:
      return rec(*e.args[0]) - rec(*e.args[1]);
    case Kind::Neg:
      return mul(embed(Scalar::from_int(f, -1)), rec(*e.args[0]));
    case Kind::Mul:
      return mul(rec(*e.args[0]), rec(*e.args[1]));
    case Kind::Div: {
      if (!scalar_only(*e.args[1])) throw ParseError(e.offset, "can only divide by a scalar");
      const Scalar d = eval_scalar(*e.args[1], f);
      if (d.is_zero()) throw ParseError(e.offset, "division by zero");
      return mul(rec(*e.args[0]), embed(d.inverse()));
    }
    case Kind::Pow: {
      if (e.index < 0) throw ParseError(e.offset, "negative powers are only defined for scalars");
      R base = rec(*e.args[0]);
      R acc = embed(Scalar::from_int(f, 1));
      for (long long k = 0; k < e.index; ++k) acc = mul(acc, base);
      return acc;
    }
    default:
      return leaf(e);
  }
}

[[noreturn]] void misplaced(const Expr& e, const std::string& what) { throw ParseError(e.offset, what + " is not allowed here"); }

}  // namespace

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.number != b.number || a.generator != b.generator || a.index != b.index ||
      a.args.size() != b.args.size())
    return false;
  for (std::size_t k = 0; k < a.args.size(); ++k)
    if (!(*a.args[k] == *b.args[k])) return false;
  return true;
}

ExprPtr parse(std::string_view text) { return Parser(text).run(); }

std::string print(const Expr& e) {
  switch (e.kind) {
    case Kind::Number:
      return e.number.get_str();
    case Kind::Q:
      return "q";
    case Kind::Eps:
      return "e";
    case Kind::T:
      return "t";
    case Kind::Gen:
      return e.generator.to_string();
    case Kind::Divided:
      return "x^(" + std::to_string(e.index) + ")";
    case Kind::Laurent:
      return "x^" + std::to_string(e.index);
    case Kind::Add:
      return wrap(*e.args[0], 1) + " + " + wrap(*e.args[1], 2);
    case Kind::Sub:
      return wrap(*e.args[0], 1) + " - " + wrap(*e.args[1], 2);
    case Kind::Mul:
      return wrap(*e.args[0], 2) + "*" + wrap(*e.args[1], 3);
    case Kind::Div:
      return wrap(*e.args[0], 2) + "/" + wrap(*e.args[1], 3);
    case Kind::Neg:
      return "-" + wrap(*e.args[0], 3);
    case Kind::Pow:
      return wrap(*e.args[0], 5) + "^" + std::to_string(e.index);
  }
  return "";
}

Scalar eval_scalar(const Expr& e, const ScalarField& f) {
  auto rec = [&](std::size_t k) { return eval_scalar(*e.args[k], f); };
  switch (e.kind) {
    case Kind::Number:
      return Scalar::from_integer(f, e.number);
    case Kind::Q:
      return Scalar::q(f);
    case Kind::Eps:
      if (!f.is_root_of_unity()) throw ParseError(e.offset, "'e' needs root-of-unity mode");
      return Scalar::q(f);
    case Kind::Add:
      return rec(0) + rec(1);
    case Kind::Sub:
      return rec(0) - rec(1);
    case Kind::Mul:
      return rec(0) * rec(1);
    case Kind::Div: {
      const Scalar d = rec(1);
      if (d.is_zero()) throw ParseError(e.offset, "division by zero");
      return rec(0) / d;
    }
    case Kind::Neg:
      return -rec(0);
    case Kind::Pow: {
      const Scalar b = rec(0);
      if (b.is_zero() && e.index < 0) throw ParseError(e.offset, "division by zero");
      return b.pow(e.index);
    }
    case Kind::T:
      misplaced(e, "the weight t");
    case Kind::Gen:
      misplaced(e, "generator " + e.generator.to_string());
    case Kind::Divided:
    case Kind::Laurent:
      misplaced(e, "a monomial in x");
  }
  misplaced(e, "this expression");
}

TScalar eval_weight(const Expr& e, const ScalarField& f) {
  return fold<TScalar>(
      e, f,
      [&](const Expr& x) -> TScalar {
        if (x.kind == Kind::T) return TScalar::t(f);
        misplaced(x, x.kind == Kind::Gen ? "generator " + x.generator.to_string() : "a monomial in x");
      },
      [](const Scalar& s) { return TScalar(s); }, [](const TScalar& a, const TScalar& b) { return a * b; });
}

NoncommPoly eval_noncomm(const Expr& e, const GradedAlgebra& alg) {
  const ScalarField& f = alg.field();
  return fold<NoncommPoly>(
      e, f,
      [&](const Expr& x) -> NoncommPoly {
        if (x.kind != Kind::Gen) misplaced(x, x.kind == Kind::T ? "the weight t" : "a monomial in x");
        if (!alg.contains(x.generator))
          throw ParseError(x.offset, x.generator.to_string() + " is not a generator of " + alg.name());
        return NoncommPoly::letter(f, x.generator);
      },
      [](const Scalar& s) { return NoncommPoly::scalar(s); },
      [](const NoncommPoly& a, const NoncommPoly& b) { return a * b; });
}

AlgebraElement eval_element(const Expr& e, const GradedAlgebra& alg) {
  const NoncommPoly p = eval_noncomm(e, alg);
  AlgebraElement out(alg.field());
  for (const auto& [w, c] : p.terms()) {
    if (w.size() != 1) throw ParseError(e.offset, "expected a linear combination of generators");
    out.add_term(w.front(), c);
  }
  return out;
}

DividedElement eval_divided(const Expr& e, const ScalarField& f) {
  return fold<DividedElement>(
      e, f,
      [&](const Expr& x) -> DividedElement {
        if (x.kind != Kind::Divided) misplaced(x, x.kind == Kind::Laurent ? "a Laurent monomial" : "this atom");
        if (x.index < 0 || (f.is_root_of_unity() && x.index >= f.order()))
          throw ParseError(x.offset, "x^(" + std::to_string(x.index) + ") is out of range");
        return DividedElement::monomial(f, x.index);
      },
      [&](const Scalar& s) { return DividedElement::monomial(f, 0, s); },
      [](const DividedElement& a, const DividedElement& b) { return dp_multiply(a, b); });
}

LaurentPoly eval_laurent(const Expr& e, const ScalarField& f) {
  return fold<LaurentPoly>(
      e, f,
      [&](const Expr& x) -> LaurentPoly {
        if (x.kind != Kind::Laurent) misplaced(x, x.kind == Kind::Divided ? "a divided power" : "this atom");
        return LaurentPoly::monomial(f, x.index);
      },
      [&](const Scalar& s) { return LaurentPoly::monomial(f, 0, s); },
      [](const LaurentPoly& a, const LaurentPoly& b) { return a * b; });
}

Scalar parse_scalar(const ScalarField& f, std::string_view text) { return eval_scalar(*parse(text), f); }

}  // namespace qwitt
