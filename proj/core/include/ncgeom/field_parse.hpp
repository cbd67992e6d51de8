#pragma once

#include <string_view>

#include "ncgeom/rational_function.hpp"

namespace ncgeom {

// Parses an exact scalar-field expression over variables x1..xm, e.g.
//   "x1^2",  "1/x2",  "(x1+x2)/(x1-x2)",  "3/4*i*x1 - (1-2*i)".
// Supported: + - * / ^ (nonnegative integer exponents), parentheses, integer
// literals, the imaginary unit `i`.  `line` seeds error locations so callers
// embedding expressions in larger files report useful positions.
RationalFunction parse_rational_function(std::string_view text, std::size_t nvars,
                                         std::size_t line = 1);

// Parses "p" or "p/q" with optional leading minus into an exact rational.
BigRational parse_big_rational(std::string_view text, std::size_t line = 1,
                               std::size_t column = 1);

}  // namespace ncgeom
