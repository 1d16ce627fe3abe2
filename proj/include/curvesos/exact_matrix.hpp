#pragma once

#include <optional>
#include <vector>

#include "curvesos/rational.hpp"

namespace curvesos {

using RVector = std::vector<Rational>;
using RMatrix = std::vector<RVector>;

RMatrix rmatrix(int rows, int cols);
RMatrix rmatrix_identity(int n);
RMatrix mul(const RMatrix& a, const RMatrix& b);
RMatrix transpose(const RMatrix& a);

struct Ldl {
  RMatrix L;  // unit lower triangular
  RVector d;
};

// G = L diag(d) L^T without pivoting; nullopt when G is not PSD.
std::optional<Ldl> ldlt_psd(const RMatrix& G);

// Vectors c_k with G = sum c_k c_k^T (LDL^T with each pivot split into rational squares).
std::optional<std::vector<RVector>> rational_square_factors(const RMatrix& G);

// Basis of the null space of the rows of A (exact Gaussian elimination).
std::vector<RVector> null_space(const RMatrix& A, int cols);

// Indices of a maximal linearly independent subset of rows.
std::vector<int> independent_rows(const RMatrix& A);

// Solves the square system M x = b; nullopt when singular.
std::optional<RVector> solve(RMatrix M, RVector b);

}  // namespace curvesos
