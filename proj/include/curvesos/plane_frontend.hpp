#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curvesos/algebraic_point.hpp"
#include "curvesos/bi_poly.hpp"
#include "curvesos/config_json.hpp"
#include "curvesos/configuration.hpp"

namespace curvesos {

struct FactorMetadata {
  std::optional<bool> is_real;
  std::optional<bool> has_real_points;
  std::optional<bool> rational_open_A1;
  std::optional<bool> nonsingular;
  std::optional<bool> bounded_ring_trivial;
};

struct PlaneCurveInput {
  std::vector<BiPoly> factors;
  std::map<int, FactorMetadata> metadata;
};

PlaneCurveInput plane_input_from_json(const Json& j);
PlaneCurveInput plane_input_from_strings(const std::vector<std::string>& factors);

struct PointRecord {
  Realness realness = Realness::Real;
  std::optional<AlgebraicPoint> point;    // real points
  std::optional<NonRealPair> symbolic;    // non-real conjugate pairs
  std::vector<int> incident;              // factor indices, sorted
  std::string coordinates;
};

std::vector<PointRecord> pairwise_intersections(const PlaneCurveInput& input);

enum class PointClass { NonSingular, OrdinaryDoublePoint, NotOMPIT };
const char* point_class_name(PointClass c);

struct PointClassification {
  PointClass kind = PointClass::NotOMPIT;
  int factors_through = 0;
  std::vector<BiPoly> tangents;  // rational tangent lines at an ODP, in translated coordinates
};

// Classifies a rational point on a single polynomial (translated to the origin).
PointClassification classify_polynomial_at(const BiPoly& F, const Rational& x, const Rational& y);
PointClassification classify_point(const PlaneCurveInput& input, const Rational& x, const Rational& y);

// ODP test at an algebraic point lying on exactly two factors (gradients and Jacobian).
Tri transversal_at(const BiPoly& F, const BiPoly& G, const AlgebraicPoint& P);

struct InfinityPoint {
  Realness realness = Realness::Real;
  std::string direction;
  int multiplicity = 1;
};

struct InfinityReport {
  std::vector<InfinityPoint> points;
  bool bounded_ring_trivial = true;
  bool best_effort = false;
};

InfinityReport points_at_infinity(const BiPoly& factor);

enum class ConicKind {
  Ellipse,
  Parabola,
  Hyperbola,
  EmptyEllipse,
  ConjugateLinesWithRealPoint,
  ConjugateParallelLines,
};
const char* conic_kind_name(ConicKind k);

struct ConicInfo {
  ConicKind kind;
  int rank = 3;
  std::optional<std::pair<Rational, Rational>> singular_point;
};

// Throws InvalidInput for reducible (over the reals) or non-square-free conics.
ConicInfo classify_conic(const BiPoly& F);

// Chart for a line or conic (None when no rational parametrization is built).
Chart make_chart(const BiPoly& F);

CurveConfiguration build_configuration(const PlaneCurveInput& input);

Json point_records_to_json(const std::vector<PointRecord>& records);
Json infinity_report_to_json(const InfinityReport& r);

}  // namespace curvesos
