#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "curvesos/bi_poly.hpp"
#include "curvesos/uni_poly.hpp"

namespace curvesos {

// One parsed term: coefficient and variable -> exponent (exponents may be negative).
struct TextTerm {
  Rational coeff;
  std::map<std::string, int> powers;
};

// Grammar: [sign] term {(+|-) term}; term = factor {* factor};
// factor = integer [/ integer] | name [^ [-] integer]. Throws ParseError.
std::vector<TextTerm> parse_terms(std::string_view s);

BiPoly parse_bipoly(std::string_view s, const std::string& xv = "x", const std::string& yv = "y");

// Polynomial in a single variable of any name ("t", "u", ...).
UniPoly parse_unipoly(std::string_view s);

// Laurent polynomial t^low * p(t) in a single variable; low may be negative.
struct LaurentText {
  int low = 0;
  UniPoly p;
};
LaurentText parse_laurent(std::string_view s);

}  // namespace curvesos
