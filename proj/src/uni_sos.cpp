#include "curvesos/uni_sos.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>

#include "curvesos/error.hpp"
#include "curvesos/four_squares.hpp"
#include "curvesos/numeric.hpp"
#include "curvesos/real_roots.hpp"

namespace curvesos {

namespace {

std::vector<double> to_doubles(const UniPoly& p) {
  std::vector<double> c;
  for (const auto& x : p.coeffs()) c.push_back(x.get_d());
  return c;
}

// r = A^2 + B^2 numerically for r > 0 on the line: A + iB = sqrt(lc) * prod over upper roots.
void numeric_half(const UniPoly& r, std::vector<double>& a, std::vector<double>& b) {
  auto roots = polynomial_roots(to_doubles(r));
  const int half = r.degree() / 2;
  std::sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) { return x.imag() > y.imag(); });
  std::vector<std::complex<double>> c{1.0};
  for (int k = 0; k < half; ++k) {
    std::vector<std::complex<double>> next(c.size() + 1, 0.0);
    for (size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= roots[k] * c[i];
    }
    c = std::move(next);
  }
  double s = std::sqrt(r.leading().get_d());
  a.assign(c.size(), 0.0);
  b.assign(c.size(), 0.0);
  for (size_t i = 0; i < c.size(); ++i) {
    a[i] = s * c[i].real();
    b[i] = s * c[i].imag();
  }
}

UniPoly from_doubles(const std::vector<double>& c, const Integer& max_den) {
  std::vector<Rational> q;
  for (double x : c) q.push_back(rationalize(x, max_den));
  return UniPoly(std::move(q));
}

// Monic square-free r without real roots as A^2 + B^2, when every quadratic factor
// is rational with a rational-square discriminant part.
std::optional<std::pair<UniPoly, UniPoly>> gauss_two_squares(const UniPoly& r) {
  UniPoly A = UniPoly::constant(1), B;
  if (r.degree() == 0) return std::make_pair(A, B);
  auto roots = polynomial_roots(to_doubles(r));
  std::vector<std::complex<double>> upper;
  for (const auto& z : roots)
    if (z.imag() > 0) upper.push_back(z);
  if (static_cast<int>(upper.size()) * 2 != r.degree()) return std::nullopt;
  UniPoly rest = r;
  for (const auto& z : upper) {
    Rational c1 = rationalize(-2.0 * z.real(), Integer(1000000));
    Rational c0 = rationalize(std::norm(z), Integer(1000000));
    UniPoly q{c0, c1, Rational(1)};
    DivMod dm = divmod(rest, q);
    if (!dm.rem.is_zero()) return std::nullopt;
    Rational h = c1 / 2;
    Rational D = c0 - h * h;
    auto s = rational_sqrt(D);
    if (!s || sgn(D) <= 0) return std::nullopt;
    UniPoly Aq{h, Rational(1)}, Bq = UniPoly::constant(*s);
    UniPoly nA = A * Aq - B * Bq, nB = A * Bq + B * Aq;
    A = std::move(nA);
    B = std::move(nB);
    rest = dm.quot;
  }
  if (!(rest == UniPoly::constant(1))) return std::nullopt;
  return std::make_pair(A, B);
}

}  // namespace

double sos_residual(const std::vector<UniPoly>& squares, const UniPoly& p) {
  UniPoly s;
  for (const auto& q : squares) s += q * q;
  s -= p;
  double m = 0.0;
  for (const auto& c : s.coeffs()) m = std::max(m, std::fabs(c.get_d()));
  return m;
}

std::vector<UniPoly> gram_sos_positive(const UniPoly& r) {
  if (r.is_zero() || r.degree() % 2 != 0 || sgn(r.leading()) <= 0)
    fail(ErrorCode::PreconditionViolated, "Gram path needs an even-degree positive polynomial");
  const int d = r.degree() / 2;
  std::vector<UniPoly> out;
  if (d == 0) {
    for (const auto& w : rational_four_squares(r.coeff(0))) out.push_back(UniPoly::constant(w));
    return out;
  }
  UniPoly E;
  for (int i = 0; i <= d; ++i) E += UniPoly::monomial(Rational(1), 2 * i);
  Rational eps = std::min(r.leading(), r.coeff(0)) / 2;
  bool ok = false;
  for (int it = 0; it < 80; ++it) {
    UniPoly q = r - E * eps;
    if (sgn(q.leading()) > 0 && sgn(q.coeff(0)) > 0 && count_real_roots(q) == 0) {
      ok = true;
      break;
    }
    eps /= 2;
  }
  if (!ok) return out;
  std::vector<double> a, b;
  numeric_half(r - E * eps, a, b);
  const int n = d + 1;
  DMatrix G(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) G(i, j) = a[i] * a[j] + b[i] * b[j] + (i == j ? eps.get_d() : 0.0);
  for (int bits : {12, 24, 36, 48}) {
    Integer den = Integer(1) << bits;
    RMatrix Q = rmatrix(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) Q[i][j] = Q[j][i] = rationalize(G(i, j), den);
    // Orthogonal projection onto {sum_{i+j=k} Q_ij = r_k}: spread each antidiagonal defect evenly.
    for (int k = 0; k <= 2 * d; ++k) {
      Rational s = 0;
      int cnt = 0;
      for (int i = std::max(0, k - d); i <= std::min(k, d); ++i) {
        s += Q[i][k - i];
        ++cnt;
      }
      Rational fix = (r.coeff(k) - s) / cnt;
      for (int i = std::max(0, k - d); i <= std::min(k, d); ++i) Q[i][k - i] += fix;
    }
    auto factors = rational_square_factors(Q);
    if (!factors) continue;
    for (const auto& c : *factors) {
      UniPoly f{std::vector<Rational>(c.begin(), c.end())};
      if (!f.is_zero()) out.push_back(f);
    }
    return out;
  }
  return out;
}

UniSos uni_sos_two_squares(const UniPoly& p, SosMode mode, double tol) {
  UniSos out;
  if (p.is_zero()) {
    out.method = "zero";
    return out;
  }
  if (auto x = negative_point(p))
    fail(ErrorCode::NotPsd, "not psd: value " + to_string(p(*x)) + " < 0 at t = " + to_string(*x));
  const Rational lc = p.leading();
  UniPoly S = UniPoly::constant(1), r = UniPoly::constant(1);
  for (const auto& part : squarefree_decomposition(p)) {
    S = S * pow(part.factor, part.multiplicity / 2);
    if (part.multiplicity % 2 == 1) r = r * part.factor;
  }
  if (mode == SosMode::Exact) {
    if (auto ab = gauss_two_squares(r)) {
      const auto& [A, B] = *ab;
      std::vector<Rational> w = rational_four_squares(lc);
      if (w.size() == 1) {
        out.squares = {A * w[0] * S, B * w[0] * S};
      } else if (w.size() == 2) {
        out.squares = {(A * w[0] - B * w[1]) * S, (B * w[0] + A * w[1]) * S};
      } else {
        for (const auto& x : w) {
          out.squares.push_back(A * x * S);
          out.squares.push_back(B * x * S);
        }
      }
      out.method = "two_squares";
    } else {
      std::vector<UniPoly> g = gram_sos_positive(r * lc);
      if (!g.empty()) {
        for (const auto& q : g) out.squares.push_back(q * S);
        out.method = "gram";
      }
    }
    if (!out.squares.empty()) {
      out.residual = sos_residual(out.squares, p);
      if (out.residual != 0.0) fail(ErrorCode::NumericFailure, "exact decomposition failed its identity check");
      return out;
    }
  }
  std::vector<double> a, b;
  numeric_half(r * lc, a, b);
  Integer den = Integer(1) << 40;
  out.squares = {from_doubles(a, den) * S, from_doubles(b, den) * S};
  out.exact = false;
  out.method = "numeric";
  out.residual = sos_residual(out.squares, p);
  if (out.residual > tol)
    fail(ErrorCode::NumericFailure, "numeric two-squares residual " + std::to_string(out.residual) + " above tolerance");
  return out;
}

LaurentSos laurent_sos(const Laurent& f, SosMode mode, double tol) {
  LaurentSos out;
  if (f.is_zero()) {
    out.method = "zero";
    return out;
  }
  const int e = f.low();
  const int odd = ((e % 2) + 2) % 2;
  UniPoly q = odd ? f.body() * UniPoly::var() : f.body();
  const int shift = (e - odd) / 2;
  UniSos u = uni_sos_two_squares(q, mode, tol);
  for (const auto& s : u.squares) out.squares.push_back(Laurent(shift, s));
  out.exact = u.exact;
  out.residual = u.residual;
  out.method = u.method;
  return out;
}

}  // namespace curvesos
