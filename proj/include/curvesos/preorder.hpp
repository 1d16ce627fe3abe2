#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvesos/config_json.hpp"
#include "curvesos/configuration.hpp"
#include "curvesos/gram.hpp"
#include "curvesos/real_roots.hpp"

namespace curvesos {

// Endpoint of a piece: an exact rational or a root of `poly` isolated by `box`.
struct LinePoint {
  std::optional<Rational> exact;
  UniPoly poly;
  RootBox box;
  double approx() const;
  std::string to_string() const;
};

// Closed interval or point; missing endpoints are infinite.
struct LinePiece {
  std::optional<LinePoint> lo, hi;
  bool is_point() const;
};

struct LineSemialgebraicSet {
  std::vector<LinePiece> pieces;  // sorted, disjoint, merged
  bool empty() const { return pieces.empty(); }
  bool unbounded_left() const { return !pieces.empty() && !pieces.front().lo; }
  bool unbounded_right() const { return !pieces.empty() && !pieces.back().hi; }
  bool compact() const { return !unbounded_left() && !unbounded_right(); }
  bool contains(const Rational& t) const;
  std::string to_string() const;
};

// {t : h(t) >= 0 for all h in H}; zero generators impose nothing.
LineSemialgebraicSet compute_line_set(const std::vector<UniPoly>& H);

struct SaturationVerdict {
  enum class Answer { Saturated, NotSaturated, ConditionsNotMet, Unknown };
  Answer answer = Answer::Unknown;
  std::vector<std::string> missing_generators;
  std::vector<std::string> failed_conditions;  // ConditionsNotMet: "1".."4"
  std::vector<std::string> unknown_conditions;
  std::vector<std::string> notes;
};
const char* saturation_answer_name(SaturationVerdict::Answer a);
Json saturation_to_json(const SaturationVerdict& v);

// Natural generators for a non-compact set on the line; throws CompactSet.
SaturationVerdict km_saturation(const std::vector<UniPoly>& H);

// The element agreeing with f on component i and constant on every other component.
Element localize_component(const CurveConfiguration& config, const Element& f, int i);

// Sufficient conditions for saturation on a connected tree configuration.
SaturationVerdict prop45_check(const CurveConfiguration& config, const std::vector<Element>& H);

struct SmpVerdict {
  Tri answer = Tri::Unknown;
  std::vector<int> c_prime;
  std::vector<std::string> notes;
};
Json smp_to_json(const SmpVerdict& v);

SmpVerdict smp_curve(const CurveConfiguration& config, const std::vector<Element>& H);

// Irreducible factors over the rationals found by content extraction, rational line
// splitting of reducible conics; the remaining factor is kept whole.
std::vector<BiPoly> factor_plane_curve(const BiPoly& F);

struct FibreReport {
  Rational sample;
  std::vector<std::string> factors;
  std::vector<Json> restricted_generators;
  SmpVerdict verdict;
};

std::vector<FibreReport> fibre_analysis(const std::vector<BiPoly>& H, const BiPoly& phi,
                                        const std::vector<Rational>& samples);
Json fibre_reports_to_json(const std::vector<FibreReport>& reports);

// Generators given per component (object or array) or, for a single line, as plain strings.
std::vector<Element> generators_from_json(const CurveConfiguration& config, const Json& j);

}  // namespace curvesos
