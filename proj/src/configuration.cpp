#include "curvesos/configuration.hpp"

#include <algorithm>

#include "curvesos/error.hpp"

namespace curvesos {

const char* tri_name(Tri t) {
  switch (t) {
    case Tri::Yes: return "Yes";
    case Tri::No: return "No";
    case Tri::Unknown: return "Unknown";
  }
  return "Unknown";
}

Tri parse_tri(const std::string& s) {
  if (s == "Yes" || s == "yes" || s == "true") return Tri::Yes;
  if (s == "No" || s == "no" || s == "false") return Tri::No;
  if (s == "Unknown" || s == "unknown") return Tri::Unknown;
  fail(ErrorCode::ParseError, "expected Yes/No/Unknown, got '" + s + "'");
}

const char* realness_name(Realness r) {
  switch (r) {
    case Realness::Real: return "Real";
    case Realness::NonReal: return "NonRealConjugatePair";
    case Realness::Unknown: return "Unknown";
  }
  return "Unknown";
}

Realness parse_realness(const std::string& s) {
  if (s == "Real") return Realness::Real;
  if (s == "NonRealConjugatePair" || s == "NonReal") return Realness::NonReal;
  if (s == "Unknown") return Realness::Unknown;
  fail(ErrorCode::ParseError, "bad realness '" + s + "'");
}

const char* chart_kind_name(ChartKind k) {
  switch (k) {
    case ChartKind::None: return "none";
    case ChartKind::AffineLine: return "affine_line";
    case ChartKind::PuncturedLine: return "punctured_line";
    case ChartKind::UnitCircle: return "unit_circle";
  }
  return "none";
}

ChartKind parse_chart_kind(const std::string& s) {
  if (s == "none") return ChartKind::None;
  if (s == "affine_line") return ChartKind::AffineLine;
  if (s == "punctured_line") return ChartKind::PuncturedLine;
  if (s == "unit_circle") return ChartKind::UnitCircle;
  fail(ErrorCode::ParseError, "bad chart kind '" + s + "'");
}

bool Chart::has_embedding() const {
  if (kind == ChartKind::UnitCircle) return sgn(r) > 0;
  return x.has_value() && y.has_value();
}

std::string chart_point_to_string(const ChartPoint& p) {
  if (auto* t = std::get_if<Rational>(&p)) return to_string(*t);
  const auto& xy = std::get<std::pair<Rational, Rational>>(p);
  return "(" + to_string(xy.first) + ", " + to_string(xy.second) + ")";
}

bool IntersectionPoint::touches(int c) const {
  return std::find(components.begin(), components.end(), c) != components.end();
}

const Component& CurveConfiguration::component(int id) const {
  for (const auto& c : components)
    if (c.id == id) return c;
  fail(ErrorCode::InvalidInput, "no component with id " + std::to_string(id));
}

Component& CurveConfiguration::component(int id) {
  for (auto& c : components)
    if (c.id == id) return c;
  fail(ErrorCode::InvalidInput, "no component with id " + std::to_string(id));
}

bool CurveConfiguration::has_component(int id) const {
  for (const auto& c : components)
    if (c.id == id) return true;
  return false;
}

std::vector<int> CurveConfiguration::component_ids() const {
  std::vector<int> ids;
  for (const auto& c : components) ids.push_back(c.id);
  return ids;
}

void CurveConfiguration::validate() const {
  std::vector<int> ids = component_ids();
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
    fail(ErrorCode::InvalidInput, "duplicate component id");
  for (const auto& p : points) {
    std::vector<int> cs = p.components;
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    if (cs.size() < 2)
      fail(ErrorCode::InvalidInput, "point " + p.label + " has fewer than two distinct components");
    for (int c : cs)
      if (!std::binary_search(ids.begin(), ids.end(), c))
        fail(ErrorCode::InvalidInput, "point " + p.label + " references missing component " + std::to_string(c));
  }
}

CurveConfiguration CurveConfiguration::induced(const std::vector<int>& ids) const {
  CurveConfiguration out;
  for (const auto& c : components)
    if (std::find(ids.begin(), ids.end(), c.id) != ids.end()) out.components.push_back(c);
  for (const auto& p : points) {
    IntersectionPoint q = p;
    q.components.clear();
    for (int c : p.components)
      if (std::find(ids.begin(), ids.end(), c) != ids.end()) q.components.push_back(c);
    if (q.components.size() < 2) continue;
    std::map<int, ChartPoint> params;
    for (int c : q.components)
      if (auto it = p.params.find(c); it != p.params.end()) params.emplace(c, it->second);
    q.params = std::move(params);
    out.points.push_back(std::move(q));
  }
  return out;
}

bool is_circle(const Component& c) { return c.chart.kind == ChartKind::UnitCircle; }

ComponentFunction evaluate_zero_function(const Component& c) {
  if (is_circle(c)) return CircleFn{};
  return Laurent();
}

ComponentFunction restrict_to_component(const BiPoly& F, const Component& c) {
  const Chart& ch = c.chart;
  if (!ch.has_embedding())
    fail(ErrorCode::UnsupportedComponent, "component " + c.label + " has no chart embedding");
  if (ch.kind == ChartKind::UnitCircle) {
    BiPoly g;
    // F(cx + r X, cy + r Y) expanded and reduced by Y^2 = 1 - X^2.
    BiPoly xs = BiPoly::constant(ch.cx) + BiPoly::x() * ch.r;
    BiPoly ys = BiPoly::constant(ch.cy) + BiPoly::y() * ch.r;
    std::vector<BiPoly> xp{BiPoly::constant(1)}, yp{BiPoly::constant(1)};
    for (const auto& [e, coef] : F.terms()) {
      while (static_cast<int>(xp.size()) <= e.first) xp.push_back(xp.back() * xs);
      while (static_cast<int>(yp.size()) <= e.second) yp.push_back(yp.back() * ys);
      g += xp[e.first] * yp[e.second] * coef;
    }
    CircleFn out;
    CircleFn yv{UniPoly(), UniPoly::constant(1)};
    for (const auto& [e, coef] : g.terms()) {
      CircleFn term{UniPoly::monomial(coef, e.first), UniPoly()};
      for (int k = 0; k < e.second; ++k) term = term * yv;
      out = out + term;
    }
    return out;
  }
  const Laurent& xs = *ch.x;
  const Laurent& ys = *ch.y;
  std::vector<Laurent> xp{Laurent::constant(1)}, yp{Laurent::constant(1)};
  Laurent acc;
  for (const auto& [e, coef] : F.terms()) {
    while (static_cast<int>(xp.size()) <= e.first) xp.push_back(xp.back() * xs);
    while (static_cast<int>(yp.size()) <= e.second) yp.push_back(yp.back() * ys);
    acc = acc + xp[e.first] * yp[e.second] * coef;
  }
  return acc;
}

Rational evaluate(const ComponentFunction& f, const ChartPoint& p) {
  if (auto* l = std::get_if<Laurent>(&f)) {
    if (!std::holds_alternative<Rational>(p))
      fail(ErrorCode::InvalidInput, "line function evaluated at a circle point");
    return (*l)(std::get<Rational>(p));
  }
  const auto& c = std::get<CircleFn>(f);
  if (!std::holds_alternative<std::pair<Rational, Rational>>(p))
    fail(ErrorCode::InvalidInput, "circle function evaluated at a line parameter");
  const auto& xy = std::get<std::pair<Rational, Rational>>(p);
  return c(xy.first, xy.second);
}

double evaluate_double(const ComponentFunction& f, const ChartPoint& p) {
  return evaluate(f, p).get_d();
}

}  // namespace curvesos
