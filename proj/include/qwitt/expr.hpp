#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qwitt/algebra.hpp"
#include "qwitt/divided.hpp"
#include "qwitt/pbw.hpp"
#include "qwitt/poly.hpp"
#include "qwitt/tscalar.hpp"

namespace qwitt {

/// Input error with the byte offset where it was detected.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : std::runtime_error("syntax error at offset " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Grammar:
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*
///   unary  := '-' unary | factor
///   factor := atom ('^' int)?
///   atom   := nat | 'q' | 'e' | 't' | 'e(' int ')' | 'L(' int ')' | 'C'
///           | 'x^(' nat ')' | 'x^' int | '(' expr ')'
/// 'e' alone is the root of unity; 'e(' starts a generator. 't' is the
/// module weight and is accepted only where a weight is expected.
struct Expr {
  enum class Kind { Number, Q, Eps, T, Gen, Divided, Laurent, Add, Sub, Mul, Div, Neg, Pow };
  Kind kind = Kind::Number;
  Integer number;           // Number
  BasisElement generator;   // Gen
  long long index = 0;      // Divided, Laurent, Pow exponent
  std::vector<std::shared_ptr<const Expr>> args;
  std::size_t offset = 0;

  /// Structural equality, ignoring offsets.
  friend bool operator==(const Expr& a, const Expr& b);
};

using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr parse(std::string_view text);
/// Minimal-parenthesis rendering; parse(print(e)) == e.
std::string print(const Expr& e);

Scalar eval_scalar(const Expr& e, const ScalarField& f);
TScalar eval_weight(const Expr& e, const ScalarField& f);
/// Scalars become multiples of the empty word; generators are checked
/// against the algebra.
NoncommPoly eval_noncomm(const Expr& e, const GradedAlgebra& alg);
/// A linear combination of generators; throws ParseError on products.
AlgebraElement eval_element(const Expr& e, const GradedAlgebra& alg);
DividedElement eval_divided(const Expr& e, const ScalarField& f);
LaurentPoly eval_laurent(const Expr& e, const ScalarField& f);

}  // namespace qwitt
