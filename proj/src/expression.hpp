#pragma once

// Shared recursive-descent parser for polynomial and derivation text.
//
//   sum    := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' integer)?
//   atom   := integer | x<i> | y<i> | d/dx<i> | d/dy<i> | '(' sum ')'
//
// A value is a polynomial plus an optional vector-field part; products
// of two vector-field parts are rejected.

#include <string_view>
#include <vector>

#include "detarr/polynomial.hpp"

namespace detarr::detail {

struct ParsedExpr {
  Polynomial scalar;
  bool has_field = false;
  std::vector<Polynomial> field;  // 2n slots, x_i at 2(i-1), y_i at 2(i-1)+1
};

ParsedExpr parse_expression(std::string_view text, int ambient);

}  // namespace detarr::detail
