#pragma once

#include <string>
#include <vector>

#include "npcoh/polynomial.hpp"

namespace npcoh {

// Recursive-descent parser for polynomial expressions:
//
//   expr     := term {("+"|"-") term}
//   term     := factor {"*" factor}
//   factor   := rational | variable ["^" nat] | "(" expr ")"
//   rational := ["-"] nat ["/" nat]
//
// No implicit multiplication, no unary minus on variables, exponents are
// positive integers. Unknown names and malformed input raise ParseError with
// the byte position of the offending token.
Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& vars);

// Variable table for user input: the given names, or x1..xn when empty.
// For n <= 4 the single-letter aliases x, y, z, t are accepted on top of the
// default names (only when no explicit names were supplied).
std::vector<std::string> resolve_variable_names(
    int n, const std::vector<std::string>& explicit_names);

Polynomial parse_polynomial_with_aliases(const std::string& text, int n);

}  // namespace npcoh
