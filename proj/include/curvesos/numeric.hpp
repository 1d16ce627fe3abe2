#pragma once

#include <complex>
#include <vector>

namespace curvesos {

// Dense row-major square matrix of doubles.
struct DMatrix {
  int n = 0;
  std::vector<double> a;
  DMatrix() = default;
  explicit DMatrix(int size) : n(size), a(static_cast<size_t>(size) * size, 0.0) {}
  double& operator()(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  double operator()(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
  static DMatrix identity(int size);
};

struct SymEigen {
  std::vector<double> values;                // ascending
  std::vector<std::vector<double>> vectors;  // vectors[k] belongs to values[k]
  int sweeps = 0;
};

// Cyclic Jacobi rotations in fixed row-major pivot order.
SymEigen jacobi_eigen(const DMatrix& m, int max_sweeps = 30, double threshold = 1e-14);

// Nearest PSD matrix in Frobenius norm: negative eigenvalues clipped to `floor`.
DMatrix project_psd(const DMatrix& m, double floor = 0.0);

double min_eigenvalue(const DMatrix& m);

// Complex roots of sum c[k] t^k via the companion matrix.
std::vector<std::complex<double>> polynomial_roots(const std::vector<double>& c);

}  // namespace curvesos
