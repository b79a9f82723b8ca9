#pragma once

#include <string>
#include <vector>

#include "milnorhp/errors.hpp"
#include "milnorhp/mpoly.hpp"

namespace milnorhp {

class parse_error : public domain_error {
public:
  parse_error(const std::string& what, std::size_t pos)
      : domain_error(what + " (at position " + std::to_string(pos) + ")"),
        pos(pos) {}
  std::size_t pos;
};

// Recursive-descent parser for
//   expr   := ["+"|"-"] term (("+"|"-") term)*
//   term   := factor (("*" | juxtaposition) factor)*
//   factor := integer | rational | variable | "(" expr ")" | factor "^" int
// Juxtaposition multiplies when the next token starts a variable or "(",
// so "2x", "y z w" and "(x+y)(x-y)" work; "x 2" does not. Powers expand at
// parse time. Whitespace is insignificant. Variable tokens must match one
// of `vars` (longest match wins, so x2 style names coexist with x).
MPoly parse_poly(const std::string& expr, const std::vector<std::string>& vars);

// Variable-name inference for expressions written in the default alphabets:
// single letters from {x, y, z, w}, or indexed names x0..x9 when a digit
// immediately follows an x. Returns the names that actually occur, in
// canonical order. Mixing the two styles is an error.
std::vector<std::string> infer_vars(const std::string& expr);

}  // namespace milnorhp
