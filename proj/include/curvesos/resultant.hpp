#pragma once

#include <vector>

#include "curvesos/bi_poly.hpp"
#include "curvesos/uni_poly.hpp"

namespace curvesos {

// Determinant of a square matrix over Q[s] by fraction-free (Bareiss) elimination.
UniPoly bareiss_determinant(std::vector<std::vector<UniPoly>> m);

// Sylvester resultant with respect to `var`; a polynomial in the other variable.
UniPoly resultant_eliminate(const BiPoly& F, const BiPoly& G, Axis var);

// Coefficients [c_0, ..., c_k] of the k-th subresultant S_k = sum c_j v^j, where v
// is the eliminated variable; each c_j is a polynomial in the other variable.
std::vector<UniPoly> subresultant(const BiPoly& F, const BiPoly& G, Axis var, int k);

}  // namespace curvesos
