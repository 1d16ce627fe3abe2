#include "curvesos/numeric.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "curvesos/error.hpp"

namespace curvesos {

DMatrix DMatrix::identity(int size) {
  DMatrix m(size);
  for (int i = 0; i < size; ++i) m(i, i) = 1.0;
  return m;
}

SymEigen jacobi_eigen(const DMatrix& m, int max_sweeps, double threshold) {
  const int n = m.n;
  DMatrix a = m;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) a(i, j) = a(j, i) = 0.5 * (m(i, j) + m(j, i));
  DMatrix v = DMatrix::identity(n);
  double norm = 0.0;
  for (double x : a.a) norm += x * x;
  norm = std::sqrt(norm);
  SymEigen out;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += 2.0 * a(i, j) * a(i, j);
    if (std::sqrt(off) <= threshold * std::max(norm, 1e-300)) break;
    ++out.sweeps;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = a(p, q);
        if (apq == 0.0) continue;
        double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) { return a(x, x) < a(y, y); });
  for (int k : idx) {
    out.values.push_back(a(k, k));
    std::vector<double> col(n);
    for (int i = 0; i < n; ++i) col[i] = v(i, k);
    out.vectors.push_back(std::move(col));
  }
  return out;
}

DMatrix project_psd(const DMatrix& m, double floor) {
  SymEigen e = jacobi_eigen(m);
  DMatrix out(m.n);
  for (size_t k = 0; k < e.values.size(); ++k) {
    double lam = std::max(e.values[k], floor);
    if (lam == 0.0) continue;
    const auto& x = e.vectors[k];
    for (int i = 0; i < m.n; ++i)
      for (int j = 0; j < m.n; ++j) out(i, j) += lam * x[i] * x[j];
  }
  return out;
}

double min_eigenvalue(const DMatrix& m) {
  if (m.n == 0) return 0.0;
  return jacobi_eigen(m).values.front();
}

std::vector<std::complex<double>> polynomial_roots(const std::vector<double>& c) {
  int d = static_cast<int>(c.size()) - 1;
  while (d > 0 && c[d] == 0.0) --d;
  if (d <= 0) return {};
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) comp(i, d - 1) = -c[i] / c[d];
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
  if (es.info() != Eigen::Success) fail(ErrorCode::NumericFailure, "companion eigenvalue solver failed");
  std::vector<std::complex<double>> out(es.eigenvalues().data(), es.eigenvalues().data() + d);
  // Polish each root with a few Newton steps on the original polynomial.
  for (auto& z : out) {
    for (int it = 0; it < 3; ++it) {
      std::complex<double> p = 0.0, dp = 0.0;
      for (int k = d; k >= 0; --k) {
        dp = dp * z + p;
        p = p * z + c[k];
      }
      if (std::abs(dp) == 0.0) break;
      z -= p / dp;
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  return out;
}

}  // namespace curvesos
