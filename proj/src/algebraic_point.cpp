#include "curvesos/algebraic_point.hpp"

#include <cstdio>

#include "curvesos/error.hpp"
#include "curvesos/resultant.hpp"

namespace curvesos {

AlgebraicPoint AlgebraicPoint::exact(const Rational& x, const Rational& y) {
  AlgebraicPoint p;
  p.rational = true;
  p.x = x;
  p.y = y;
  return p;
}

AlgebraicPoint AlgebraicPoint::swapped() const {
  AlgebraicPoint p = *this;
  std::swap(p.x, p.y);
  p.axis = axis == Axis::X ? Axis::Y : Axis::X;
  return p;
}

std::optional<std::pair<Rational, Rational>> AlgebraicPoint::exact_coordinates() const {
  if (rational) return std::make_pair(x, y);
  return std::nullopt;
}

std::pair<double, double> AlgebraicPoint::approx() const {
  if (rational) return {x.get_d(), y.get_d()};
  RootBox b = box;
  refine(poly, b, Rational("1/1000000000000000"));
  double s = b.approx();
  double o = other == Other::Rational ? (axis == Axis::X ? y.get_d() : x.get_d())
                                      : num.eval_double(s) / den.eval_double(s);
  return axis == Axis::X ? std::make_pair(s, o) : std::make_pair(o, s);
}

std::string AlgebraicPoint::describe() const {
  if (rational) return "(" + to_string(x) + ", " + to_string(y) + ")";
  auto [ax, ay] = approx();
  char buf[96];
  std::snprintf(buf, sizeof buf, "(~%.12g, ~%.12g)", ax, ay);
  return buf;
}

int sign_at(const BiPoly& H, const AlgebraicPoint& P) {
  if (P.rational) return sgn(H(P.x, P.y));
  const Axis other_axis = P.axis == Axis::X ? Axis::Y : Axis::X;
  if (P.other == AlgebraicPoint::Other::Rational) {
    const Rational& v = P.axis == Axis::X ? P.y : P.x;
    UniPoly h = H.eval_at(other_axis, v);
    return sign_at_root(h, P.poly, P.box);
  }
  // H(s, N/D) * D^d = sum_j h_j(s) N^j D^(d-j)
  std::vector<UniPoly> hs = H.coeffs_in(other_axis);
  const int d = static_cast<int>(hs.size()) - 1;
  if (d < 0) return 0;
  UniPoly m;
  std::vector<UniPoly> np{UniPoly::constant(1)}, dp{UniPoly::constant(1)};
  for (int k = 1; k <= d; ++k) {
    np.push_back(np.back() * P.num);
    dp.push_back(dp.back() * P.den);
  }
  for (int j = 0; j <= d; ++j) m += hs[j] * np[j] * dp[d - j];
  int sm = sign_at_root(m, P.poly, P.box);
  int sd = sign_at_root(P.den, P.poly, P.box);
  if (sd == 0) fail(ErrorCode::UnresolvedPoint, "vanishing denominator at algebraic point");
  return (d % 2 == 1 && sd < 0) ? -sm : sm;
}

namespace {

std::string poly_label(const UniPoly& p, Axis a) { return p.to_string(a == Axis::X ? "x" : "y"); }

void add_fibre_points(const UniPoly& h, const Rational& x0, PairIntersection& out) {
  if (h.degree() <= 0) return;
  UniPoly sq = squarefree_part(h);
  std::vector<RootBox> boxes = isolate_squarefree(sq);
  for (const auto& b : boxes) {
    if (b.exact_value) {
      out.real_points.push_back(AlgebraicPoint::exact(x0, *b.exact_value));
      continue;
    }
    AlgebraicPoint p;
    p.rational = false;
    p.axis = Axis::Y;
    p.poly = sq;
    p.box = b;
    p.other = AlgebraicPoint::Other::Rational;
    p.x = x0;
    out.real_points.push_back(p);
  }
  int pairs = (sq.degree() - static_cast<int>(boxes.size())) / 2;
  for (int k = 0; k < pairs; ++k)
    out.nonreal.push_back({Axis::X, x0, UniPoly{-x0, Rational(1)},
                           "x = " + to_string(x0) + ", y root of " + poly_label(sq, Axis::Y)});
}

PairIntersection eliminate_y(const BiPoly& F, const BiPoly& G) {
  PairIntersection out;
  UniPoly R = resultant_eliminate(F, G, Axis::Y);
  if (R.is_zero()) fail(ErrorCode::CommonComponent, "factors share a common component");
  if (R.degree() <= 0) return out;
  UniPoly Rs = squarefree_part(R);
  std::vector<UniPoly> fc = F.coeffs_in(Axis::Y), gc = G.coeffs_in(Axis::Y);
  const UniPoly& lcF = fc.back();
  const UniPoly& lcG = gc.back();
  UniPoly drop = gcd(gcd(lcF, lcG), Rs);
  std::vector<RootBox> boxes = isolate_squarefree(Rs);
  int nonreal_x = Rs.degree() - static_cast<int>(boxes.size());
  if (nonreal_x > 0 && drop.degree() > 0 && drop.degree() > count_real_roots(drop))
    fail(ErrorCode::UnresolvedPoint, "non-real abscissa where both leading coefficients vanish");
  for (int k = 0; k < nonreal_x / 2; ++k)
    out.nonreal.push_back({Axis::X, std::nullopt, Rs, "x non-real root of " + poly_label(Rs, Axis::X)});
  for (const auto& b : boxes) {
    if (b.exact_value) {
      const Rational& x0 = *b.exact_value;
      UniPoly f1 = F.eval_at(Axis::X, x0), g1 = G.eval_at(Axis::X, x0);
      if (f1.is_zero() && g1.is_zero()) fail(ErrorCode::CommonComponent, "common vertical component");
      UniPoly h = f1.is_zero() ? g1.monic() : (g1.is_zero() ? f1.monic() : gcd(f1, g1));
      add_fibre_points(h, x0, out);
      continue;
    }
    int sF = sign_at_root(lcF, Rs, b), sG = sign_at_root(lcG, Rs, b);
    if (sF == 0 && sG == 0)
      fail(ErrorCode::UnresolvedPoint, "irrational abscissa where both leading coefficients vanish");
    AlgebraicPoint p;
    p.rational = false;
    p.axis = Axis::X;
    p.poly = Rs;
    p.box = b;
    p.other = AlgebraicPoint::Other::Function;
    if (fc.size() == 2 && sF != 0) {
      p.num = -fc[0];
      p.den = fc[1];
    } else if (gc.size() == 2 && sG != 0) {
      p.num = -gc[0];
      p.den = gc[1];
    } else {
      std::vector<UniPoly> s1 = subresultant(F, G, Axis::Y, 1);
      if (sign_at_root(s1[1], Rs, b) == 0)
        fail(ErrorCode::UnresolvedPoint, "several common points over one irrational abscissa");
      p.num = -s1[0];
      p.den = s1[1];
    }
    out.real_points.push_back(p);
  }
  return out;
}

// F depends on x only, G on y only (both irreducible over the reals).
PairIntersection product_points(const UniPoly& f, const UniPoly& g) {
  PairIntersection out;
  std::vector<Rational> rx = rational_roots(f), ry = rational_roots(g);
  if (static_cast<int>(rx.size()) != count_real_roots(f) || static_cast<int>(ry.size()) != count_real_roots(g))
    fail(ErrorCode::InvalidInput, "univariate factor is reducible over the reals");
  for (const auto& a : rx)
    for (const auto& b : ry) out.real_points.push_back(AlgebraicPoint::exact(a, b));
  int total = f.degree() * g.degree();
  int real = static_cast<int>(rx.size() * ry.size());
  for (int k = 0; k < (total - real) / 2; ++k)
    out.nonreal.push_back({Axis::X, rx.empty() ? std::nullopt : std::optional<Rational>(rx[0]), f,
                           "x root of " + poly_label(f, Axis::X) + ", y root of " + poly_label(g, Axis::Y)});
  return out;
}

PairIntersection swap_result(PairIntersection r) {
  for (auto& p : r.real_points) p = p.swapped();
  for (auto& n : r.nonreal) n.axis = n.axis == Axis::X ? Axis::Y : Axis::X;
  return r;
}

}  // namespace

PairIntersection intersect(const BiPoly& F, const BiPoly& G) {
  if (F.is_constant() || G.is_constant()) fail(ErrorCode::ConstantFactor, "constant factor");
  const int fy = F.degree_in(Axis::Y), gy = G.degree_in(Axis::Y);
  const int fx = F.degree_in(Axis::X), gx = G.degree_in(Axis::X);
  if (fy > 0 && gy > 0) return eliminate_y(F, G);
  if (fx > 0 && gx > 0) return swap_result(eliminate_y(F.swap_vars(), G.swap_vars()));
  if (fy == 0 && gx == 0) return product_points(F.eval_at(Axis::Y, 0), G.eval_at(Axis::X, 0));
  if (fx == 0 && gy == 0) return product_points(G.eval_at(Axis::Y, 0), F.eval_at(Axis::X, 0));
  // Both depend on the same single variable.
  UniPoly f = fy == 0 ? F.eval_at(Axis::Y, 0) : F.eval_at(Axis::X, 0);
  UniPoly g = gy == 0 ? G.eval_at(Axis::Y, 0) : G.eval_at(Axis::X, 0);
  if (gcd(f, g).degree() > 0) fail(ErrorCode::CommonComponent, "factors share a common component");
  return {};
}

}  // namespace curvesos
