#pragma once

#include <string>

#include "poly.hpp"

namespace crgeo {

// Parses the expression grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' posint)?
//   base   := rational | 'i' | var | 'conj(' expr ')' | 'Re(' expr ')'
//           | 'Im(' expr ')' | '|' expr '|^2' | '(' expr ')'
//   var    := 'z' posint | 'w'
// Sugar is expanded exactly in the parser: |e|^2 -> e*conj(e),
// Re(e) -> (e+conj(e))/2, Im(e) -> (e-conj(e))/(2i).
Poly parse_poly(const std::string& text, int n);

// Comma-separated list of n+1 constant expressions -> evaluation point.
Point parse_point(const std::string& text, int n);

}  // namespace crgeo
