#include "curvesos/exact_matrix.hpp"

#include "curvesos/four_squares.hpp"

namespace curvesos {

RMatrix rmatrix(int rows, int cols) { return RMatrix(rows, RVector(cols, Rational(0))); }

RMatrix rmatrix_identity(int n) {
  RMatrix m = rmatrix(n, n);
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RMatrix mul(const RMatrix& a, const RMatrix& b) {
  const size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RMatrix out = rmatrix(static_cast<int>(n), static_cast<int>(m));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (sgn(a[i][l]) == 0) continue;
      for (size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

RMatrix transpose(const RMatrix& a) {
  if (a.empty()) return {};
  RMatrix out = rmatrix(static_cast<int>(a[0].size()), static_cast<int>(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) out[j][i] = a[i][j];
  return out;
}

std::optional<Ldl> ldlt_psd(const RMatrix& G) {
  const int n = static_cast<int>(G.size());
  RMatrix A = G;
  Ldl out{rmatrix_identity(n), RVector(n, Rational(0))};
  for (int k = 0; k < n; ++k) {
    const Rational dk = A[k][k];
    if (sgn(dk) < 0) return std::nullopt;
    if (sgn(dk) == 0) {
      for (int i = k + 1; i < n; ++i)
        if (sgn(A[i][k]) != 0) return std::nullopt;
      continue;
    }
    out.d[k] = dk;
    for (int i = k + 1; i < n; ++i) out.L[i][k] = A[i][k] / dk;
    for (int i = k + 1; i < n; ++i) {
      if (sgn(out.L[i][k]) == 0) continue;
      for (int j = k + 1; j <= i; ++j) {
        A[i][j] -= out.L[i][k] * out.L[j][k] * dk;
        A[j][i] = A[i][j];
      }
    }
  }
  return out;
}

std::optional<std::vector<RVector>> rational_square_factors(const RMatrix& G) {
  auto ldl = ldlt_psd(G);
  if (!ldl) return std::nullopt;
  const int n = static_cast<int>(G.size());
  std::vector<RVector> out;
  for (int k = 0; k < n; ++k) {
    for (const Rational& w : rational_four_squares(ldl->d[k])) {
      RVector c(n, Rational(0));
      for (int i = k; i < n; ++i) c[i] = w * ldl->L[i][k];
      out.push_back(std::move(c));
    }
  }
  return out;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RMatrix& A, int cols) {
  std::vector<int> pivots;
  int row = 0;
  const int rows = static_cast<int>(A.size());
  for (int c = 0; c < cols && row < rows; ++c) {
    int p = -1;
    for (int r = row; r < rows; ++r)
      if (sgn(A[r][c]) != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(A[row], A[p]);
    const int width = static_cast<int>(A[row].size());
    Rational inv = 1 / A[row][c];
    for (int j = c; j < width; ++j) A[row][j] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == row || sgn(A[r][c]) == 0) continue;
      Rational f = A[r][c];
      for (int j = c; j < width; ++j) A[r][j] -= f * A[row][j];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<RVector> null_space(const RMatrix& A0, int cols) {
  RMatrix A = A0;
  std::vector<int> pivots = rref(A, cols);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<RVector> out;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RVector v(cols, Rational(0));
    v[f] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -A[r][f];
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<int> independent_rows(const RMatrix& A) {
  if (A.empty()) return {};
  const int cols = static_cast<int>(A[0].size());
  RMatrix basis;  // echelon rows kept so far
  std::vector<int> lead;
  std::vector<int> out;
  for (size_t i = 0; i < A.size(); ++i) {
    RVector v = A[i];
    for (size_t b = 0; b < basis.size(); ++b) {
      if (sgn(v[lead[b]]) == 0) continue;
      Rational f = v[lead[b]] / basis[b][lead[b]];
      for (int j = 0; j < cols; ++j) v[j] -= f * basis[b][j];
    }
    int l = -1;
    for (int j = 0; j < cols; ++j)
      if (sgn(v[j]) != 0) {
        l = j;
        break;
      }
    if (l < 0) continue;
    basis.push_back(std::move(v));
    lead.push_back(l);
    out.push_back(static_cast<int>(i));
  }
  return out;
}

std::optional<RVector> solve(RMatrix M, RVector b) {
  const int n = static_cast<int>(M.size());
  for (int i = 0; i < n; ++i) M[i].push_back(b[i]);
  std::vector<int> pivots = rref(M, n);
  if (static_cast<int>(pivots.size()) < n) return std::nullopt;
  RVector x(n);
  for (int i = 0; i < n; ++i) x[i] = M[i][n];
  return x;
}

}  // namespace curvesos
