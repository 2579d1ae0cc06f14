#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "w22/module.hpp"

// Expression language for elements of U(W) and module vectors:
//
//   expr    := term (('+' | '-') term)*
//   term    := factor ('*' factor)*
//   factor  := primary ('^' uint)? | '-' factor
//   primary := atom | '(' expr ')'
//   atom    := 'L' '[' int ']' | 'W' '[' int ']' | 'z' | 'w' | uint ('/' uint)?
//
// Vector expressions end every product in w; algebra expressions contain no w.

namespace w22 {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  /// The message without the position prefix.
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

enum class ExprKind { Algebra, Vector };

struct Expr {
  enum class Op { Generator, Central, Cyclic, Number, Add, Subtract, Multiply, Negate, Power };

  Op op = Op::Number;
  Generator generator = Generator::z();  // Op::Generator
  Rational number;                        // Op::Number
  unsigned exponent = 0;                  // Op::Power
  std::shared_ptr<const Expr> left;       // binary operand, or the operand of Negate/Power
  std::shared_ptr<const Expr> right;
  ExprKind kind = ExprKind::Algebra;
  std::size_t line = 1;
  std::size_t column = 1;

  /// Structural equality; positions are ignored.
  friend bool operator==(const Expr& a, const Expr& b);
};

/// Throws ParseError on syntax errors, non-integer indices, negative
/// exponents and misplaced w.
Expr parse(std::string_view source);

/// Minimal-parenthesis rendering; parse(render(e)) == e.
std::string render(const Expr& e);

using Value = std::variant<UEAElement, ModuleVector>;

/// Algebra expressions normalize to UEAElements; vector expressions act on
/// the cyclic vector of `module`.
Value eval(const Expr& e, const WhittakerModule& module);
/// Evaluates an algebra expression. Throws std::invalid_argument for vectors.
UEAElement eval_algebra(const Expr& e);

/// "universal" or a product of monic linear factors, e.g. "(z-1)^2*(z+3)".
QuotientSpec parse_quotient(std::string_view source);

}  // namespace w22
