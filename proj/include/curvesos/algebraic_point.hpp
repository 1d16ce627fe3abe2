#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvesos/bi_poly.hpp"
#include "curvesos/real_roots.hpp"

namespace curvesos {

// A real point of the plane with exactly representable coordinates.
// Either both coordinates are rational, or the coordinate `axis` is the root of the
// square-free `poly` isolated by `box` and the other coordinate is rational or
// equals num(s)/den(s) evaluated at that root s.
struct AlgebraicPoint {
  enum class Other { Rational, Function };

  bool rational = true;
  Rational x, y;  // valid coordinates when rational; the rational one otherwise
  Axis axis = Axis::X;
  UniPoly poly;
  RootBox box;
  Other other = Other::Rational;
  UniPoly num, den;

  static AlgebraicPoint exact(const Rational& x, const Rational& y);
  AlgebraicPoint swapped() const;
  std::pair<double, double> approx() const;
  std::string describe() const;
  std::optional<std::pair<Rational, Rational>> exact_coordinates() const;
};

// Sign of H at P, decided exactly.
int sign_at(const BiPoly& H, const AlgebraicPoint& P);
inline bool vanishes_at(const BiPoly& H, const AlgebraicPoint& P) { return sign_at(H, P) == 0; }

// One record per conjugate pair of non-real common points.
struct NonRealPair {
  Axis axis = Axis::X;             // coordinate described by `abscissa`
  std::optional<Rational> abscissa;  // when the shared coordinate is rational
  UniPoly defining;                // square-free polynomial for that coordinate
  std::string description;
};

struct PairIntersection {
  std::vector<AlgebraicPoint> real_points;
  std::vector<NonRealPair> nonreal;
};

// All common points of two coprime nonconstant polynomials.
// Throws CommonComponent or UnresolvedPoint.
PairIntersection intersect(const BiPoly& F, const BiPoly& G);

}  // namespace curvesos
