#pragma once

// Expressions over the single variable i, used by enumerator programs.
//
//   or_expr  := and_expr ("or" and_expr)*
//   and_expr := cmp_expr ("and" cmp_expr)*
//   cmp_expr := add_expr (("==" | "!=" | "<" | "<=") add_expr)?
//   add_expr := mul_expr (("+" | "-") mul_expr)*
//   mul_expr := factor (("*" | "mod") factor)*
//   factor   := natural | "i" | "(" or_expr ")"
//
// Arithmetic is over 64-bit naturals: "-" truncates at zero, overflow and
// "mod 0" raise EvaluationError.

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "eolab/pattern.hpp"

namespace eolab {

enum class ExprType { arithmetic, boolean };

class Expression {
 public:
  // Throws ParseError on syntax errors, unknown identifiers and ill-typed
  // operands.
  static Expression parse(std::string_view source);

  ExprType type() const noexcept;
  const std::string& source() const noexcept { return source_; }

  // Requires type() == arithmetic.
  Natural evaluate(Natural i) const;
  // Requires type() == boolean.
  bool holds(Natural i) const;

 private:
  enum class Op : std::uint8_t {
    literal, variable,
    add, sub, mul, mod,
    eq, ne, lt, le,
    logical_and, logical_or,
  };
  struct Node {
    Op op;
    Natural value = 0;
    std::int32_t lhs = -1;
    std::int32_t rhs = -1;
  };
  class Parser;

  Natural eval_arith(std::int32_t node, Natural i) const;
  bool eval_bool(std::int32_t node, Natural i) const;

  std::string source_;
  std::shared_ptr<const std::vector<Node>> nodes_;
  std::int32_t root_ = -1;
};

}  // namespace eolab
