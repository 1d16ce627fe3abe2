#pragma once

#include <string>
#include <vector>

#include "curvesos/component_function.hpp"
#include "curvesos/exact_matrix.hpp"
#include "curvesos/uni_poly.hpp"

namespace curvesos {

enum class SosMode { Exact, Numeric };

struct UniSos {
  std::vector<UniPoly> squares;  // p = sum squares[i]^2 (exactly when `exact`)
  bool exact = true;
  double residual = 0.0;  // max |coefficient| of sum squares - p
  std::string method;     // two_squares | gram | numeric
};

// Throws NotPsd (message carries a rational point with p < 0) or NumericFailure.
UniSos uni_sos_two_squares(const UniPoly& p, SosMode mode = SosMode::Exact, double tol = 1e-9);

// Max |coefficient| of sum squares - p, computed exactly then rounded.
double sos_residual(const std::vector<UniPoly>& squares, const UniPoly& p);

struct LaurentSos {
  std::vector<Laurent> squares;
  bool exact = true;
  double residual = 0.0;
  std::string method;
};

// Decomposition of a Laurent polynomial psd on the punctured line (or the line when
// f is a polynomial): clears the pole with an even power of t, decomposes, shifts back.
LaurentSos laurent_sos(const Laurent& f, SosMode mode = SosMode::Exact, double tol = 1e-9);

// Exact Gram decomposition of a strictly positive polynomial (interior rounding and
// exact projection); empty when rounding does not land inside the PSD cone.
std::vector<UniPoly> gram_sos_positive(const UniPoly& r);

}  // namespace curvesos
