#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "curvesos/bi_poly.hpp"
#include "curvesos/component_function.hpp"
#include "curvesos/rational.hpp"

namespace curvesos {

enum class Tri { Yes, No, Unknown };
const char* tri_name(Tri t);
Tri parse_tri(const std::string& s);
inline Tri tri_from_bool(bool b) { return b ? Tri::Yes : Tri::No; }

enum class Realness { Real, NonReal, Unknown };
const char* realness_name(Realness r);
Realness parse_realness(const std::string& s);

enum class ChartKind { None, AffineLine, PuncturedLine, UnitCircle };
const char* chart_kind_name(ChartKind k);
ChartKind parse_chart_kind(const std::string& s);

// t = a*x + b*y + c recovers the chart parameter from a plane point.
struct LinearForm {
  Rational a, b, c;
  Rational operator()(const Rational& x, const Rational& y) const { return a * x + b * y + c; }
};

struct Chart {
  ChartKind kind = ChartKind::None;
  std::string param = "t";
  // Line-type charts: plane embedding x(t), y(t) when known.
  std::optional<Laurent> x, y;
  std::optional<LinearForm> inverse;
  std::vector<Rational> excluded;
  // Unit circle normal form: x = cx + r X, y = cy + r Y.
  Rational cx, cy, r;

  bool is_line_type() const { return kind == ChartKind::AffineLine || kind == ChartKind::PuncturedLine; }
  bool has_embedding() const;
};

// Chart coordinates of a point: a parameter value, or (X, Y) on the unit circle.
using ChartPoint = std::variant<Rational, std::pair<Rational, Rational>>;
std::string chart_point_to_string(const ChartPoint& p);

struct OwnSingularity {
  std::string label;
  std::string coordinates;
  Tri ompit = Tri::Unknown;
};

struct Component {
  int id = 0;
  std::string label;
  Tri is_real = Tri::Unknown;
  Tri has_real_points = Tri::Unknown;
  Tri bounded_ring_trivial = Tri::Unknown;
  Tri rational_open_A1 = Tri::Unknown;
  std::vector<OwnSingularity> own_singularities;
  Chart chart;
  std::optional<BiPoly> equation;
  std::vector<std::string> notes;
};

struct IntersectionPoint {
  int id = 0;
  std::string label;
  Realness realness = Realness::Unknown;
  std::vector<int> components;  // sorted ids
  Tri ompit = Tri::Unknown;
  std::optional<bool> in_S;
  std::string coordinates;
  std::optional<std::pair<Rational, Rational>> plane;
  std::map<int, ChartPoint> params;

  bool touches(int c) const;
};

struct CurveConfiguration {
  std::vector<Component> components;
  std::vector<IntersectionPoint> points;

  const Component& component(int id) const;
  Component& component(int id);
  bool has_component(int id) const;
  std::vector<int> component_ids() const;
  // Throws InvalidInput when a point references a missing component or has < 2 components.
  void validate() const;
  // Components in `ids` with points restricted to them (points keeping >= 2 incidences).
  CurveConfiguration induced(const std::vector<int>& ids) const;
};

// Restriction of a plane polynomial to a component through its chart embedding.
ComponentFunction restrict_to_component(const BiPoly& F, const Component& c);
ComponentFunction evaluate_zero_function(const Component& c);
Rational evaluate(const ComponentFunction& f, const ChartPoint& p);
double evaluate_double(const ComponentFunction& f, const ChartPoint& p);
bool is_circle(const Component& c);

}  // namespace curvesos
