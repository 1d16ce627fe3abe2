#include "curvesos/resultant.hpp"

#include "curvesos/error.hpp"

namespace curvesos {

UniPoly bareiss_determinant(std::vector<std::vector<UniPoly>> m) {
  const size_t n = m.size();
  if (n == 0) return UniPoly::constant(1);
  bool negate = false;
  UniPoly prev = UniPoly::constant(1);
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return {};
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        UniPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = exact_div(num, prev);
      }
      m[i][k] = UniPoly();
    }
    prev = m[k][k];
  }
  UniPoly d = m[n - 1][n - 1];
  return negate ? -d : d;
}

namespace {

// Rows of the k-th subresultant matrix; entry [r][c] multiplies v^(width-1-c).
std::vector<std::vector<UniPoly>> subresultant_rows(const std::vector<UniPoly>& a,
                                                    const std::vector<UniPoly>& b, int k) {
  const int m = static_cast<int>(a.size()) - 1;
  const int n = static_cast<int>(b.size()) - 1;
  const int width = m + n - k;
  std::vector<std::vector<UniPoly>> rows;
  auto push_shifted = [&](const std::vector<UniPoly>& c, int deg, int shift) {
    std::vector<UniPoly> row(width);
    for (int e = 0; e <= deg; ++e) row[width - 1 - (e + shift)] = c[e];
    rows.push_back(std::move(row));
  };
  for (int i = n - k - 1; i >= 0; --i) push_shifted(a, m, i);
  for (int i = m - k - 1; i >= 0; --i) push_shifted(b, n, i);
  return rows;
}

void check_inputs(const BiPoly& F, const BiPoly& G, Axis var) {
  if (F.is_zero() || G.is_zero()) fail(ErrorCode::ZeroPolynomial, "resultant of zero polynomial");
  if (F.degree_in(var) <= 0 || G.degree_in(var) <= 0)
    fail(ErrorCode::DegenerateInput, "input constant in the eliminated variable");
}

}  // namespace

std::vector<UniPoly> subresultant(const BiPoly& F, const BiPoly& G, Axis var, int k) {
  check_inputs(F, G, var);
  std::vector<UniPoly> a = F.coeffs_in(var);
  std::vector<UniPoly> b = G.coeffs_in(var);
  const int m = static_cast<int>(a.size()) - 1;
  const int n = static_cast<int>(b.size()) - 1;
  if (k < 0 || k > std::min(m, n)) fail(ErrorCode::DegenerateInput, "subresultant index out of range");
  auto rows = subresultant_rows(a, b, k);
  const int size = m + n - 2 * k;
  const int width = m + n - k;
  std::vector<UniPoly> out(k + 1);
  for (int j = 0; j <= k; ++j) {
    std::vector<std::vector<UniPoly>> sq(size, std::vector<UniPoly>(size));
    for (int r = 0; r < size; ++r) {
      for (int c = 0; c + 1 < size; ++c) sq[r][c] = rows[r][c];
      sq[r][size - 1] = rows[r][width - 1 - j];
    }
    out[j] = bareiss_determinant(std::move(sq));
  }
  return out;
}

UniPoly resultant_eliminate(const BiPoly& F, const BiPoly& G, Axis var) {
  if (F.is_zero() || G.is_zero()) fail(ErrorCode::ZeroPolynomial, "resultant of zero polynomial");
  // Res(a, G) = a^deg G when a does not involve the eliminated variable.
  if (F.degree_in(var) == 0) return pow(F.coeffs_in(var)[0], G.degree_in(var));
  if (G.degree_in(var) == 0) return pow(G.coeffs_in(var)[0], F.degree_in(var));
  return subresultant(F, G, var, 0)[0];
}

}  // namespace curvesos
