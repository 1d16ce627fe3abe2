#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "curvesos/configuration.hpp"
#include "curvesos/plane_frontend.hpp"

namespace curvesos::testing {

// Abstract configuration of `n` real affine lines; each entry of `incidences` is one
// real ordinary point joining the listed components. Point k sits at parameter k + 1 on
// every line through it, so parameters on one line are distinct.
inline CurveConfiguration abstract_lines(int n, const std::vector<std::vector<int>>& incidences) {
  CurveConfiguration config;
  for (int i = 0; i < n; ++i) {
    Component c;
    c.id = i;
    c.label = "C" + std::to_string(i);
    c.is_real = c.has_real_points = c.bounded_ring_trivial = c.rational_open_A1 = Tri::Yes;
    c.chart.kind = ChartKind::AffineLine;
    config.components.push_back(c);
  }
  for (size_t k = 0; k < incidences.size(); ++k) {
    IntersectionPoint p;
    p.id = static_cast<int>(k);
    p.label = "P" + std::to_string(k);
    p.realness = Realness::Real;
    p.components = incidences[k];
    p.ompit = Tri::Yes;
    for (int c : p.components) p.params[c] = Rational(static_cast<long>(k) + 1);
    config.points.push_back(p);
  }
  return config;
}

inline CurveConfiguration plane(const std::vector<std::string>& factors) {
  return build_configuration(plane_input_from_strings(factors));
}

// Renames component i to perm[i] everywhere.
inline CurveConfiguration relabel(const CurveConfiguration& config, const std::vector<int>& perm) {
  CurveConfiguration out = config;
  for (auto& c : out.components) {
    c.id = perm[c.id];
    c.label = "C" + std::to_string(c.id);
  }
  std::sort(out.components.begin(), out.components.end(),
            [](const Component& a, const Component& b) { return a.id < b.id; });
  for (auto& p : out.points) {
    std::map<int, ChartPoint> params;
    for (auto& [c, v] : p.params) params[perm[c]] = v;
    p.params = params;
    for (int& c : p.components) c = perm[c];
    std::sort(p.components.begin(), p.components.end());
  }
  return out;
}

}  // namespace curvesos::testing

#include <functional>
#include <optional>

#include "curvesos/error.hpp"
#include "curvesos/gram.hpp"

namespace curvesos::testing {

// Error code thrown by `f`, if any.
inline std::optional<ErrorCode> thrown_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

// Restriction of one plane polynomial to every component.
inline Element restrict_all(const CurveConfiguration& config, const BiPoly& F) {
  Element e;
  for (const auto& c : config.components) e[c.id] = restrict_to_component(F, c);
  return e;
}

inline Element line_element(std::initializer_list<std::pair<const int, UniPoly>> parts) {
  Element e;
  for (const auto& [c, p] : parts) e[c] = Laurent(p);
  return e;
}

}  // namespace curvesos::testing
