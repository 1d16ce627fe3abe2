#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curvesos/config_graph.hpp"
#include "curvesos/config_json.hpp"
#include "curvesos/configuration.hpp"
#include "curvesos/gram.hpp"
#include "curvesos/uni_sos.hpp"

namespace curvesos {

// ---- reports ---------------------------------------------------------------

struct ReportCheck {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct ExactReport {
  std::vector<ReportCheck> checks;
  bool exact = true;        // false: identity checks used a residual bound
  double residual = 0.0;
  bool passed() const;
  void add(std::string name, bool ok, std::string detail = {});
};
Json report_to_json(const ExactReport& r);
// 0 when every check passed, 3 otherwise.
int report_exit_code(const ExactReport& r);

// ---- certificates ------------------------------------------------------------

struct SosCertificate {
  std::vector<Element> summands;  // target = sum of squares, per component
  Element target;
  std::vector<std::string> provenance;
  bool exact = true;
  double residual = 0.0;
};
Json certificate_to_json(const CurveConfiguration& config, const SosCertificate& c);
SosCertificate certificate_from_json(const CurveConfiguration& config, const Json& j);

// I - 2 u u^T / u^T u with u = v - w (identity when v = w). Throws ValueMismatch
// when |v|^2 != |w|^2; shorter vectors are zero-padded.
RMatrix householder_matrix(RVector v, RVector w);

// Summands on one side of a gluing; `at_point` is a component of the side through the point.
struct GlueSide {
  std::vector<int> components;
  std::vector<Element> summands;
  int at_point = -1;
};

// Reflects side a so its value vector at the point matches side b, then pairs the summands.
// `B_out` receives the reflection used.
std::vector<Element> householder_glue(const CurveConfiguration& config, const GlueSide& a, const GlueSide& b,
                                      int point_id, RMatrix* B_out = nullptr);

// Summand value vector of a list at a point, read on component `component`.
RVector values_at(const CurveConfiguration& config, const std::vector<Element>& summands, int component,
                  int point_id);

// Per-component two-squares decompositions glued along an attachment order.
SosCertificate forest_assemble(const CurveConfiguration& config, const AttachmentOrder& order, const Element& F);

struct CompletionOptions {
  int degree_cap = -1;  // -1: 2 deg F + 6
  ProjectionOptions projection;
};

struct CompactCompletion {
  std::vector<Element> summands;  // on the listed components; values at prescribed points match
  bool exact = true;
  double residual = 0.0;
  int degree = 0;
  std::vector<std::string> provenance;
};

// Decomposition of F on `components` whose summand values at each prescribed point are
// the prescribed vectors. Throws ValueNormMismatch or Inconclusive.
CompactCompletion compact_complete(const CurveConfiguration& config, const std::vector<int>& components,
                                   const Element& F, const std::map<int, RVector>& prescribed,
                                   const CompletionOptions& opt = {});

// Full pipeline on a Yes configuration: forest part on C', completion on C''. Throws Refused
// unless the verdict is Yes, Unsupported for components without a chart.
SosCertificate full_certify(const CurveConfiguration& config, const Element& F, const CompletionOptions& opt = {});

// Exact identity per component, value agreement at every point, degree rule on lines.
ExactReport verify_certificate(const CurveConfiguration& config, const Element& F, const SosCertificate& cert,
                               double tol = 1e-9);

// Numeric spectral factorization on the unit circle: f = A^2 + B^2 up to the returned residual.
struct CircleTwoSquares {
  CircleFn A, B;
  double residual = 0.0;
};
CircleTwoSquares fejer_riesz_circle(const CircleFn& f);

// Exact psd test of a + b Y on the unit circle.
bool circle_fn_psd(const CircleFn& f);

// ---- obstruction witnesses ---------------------------------------------------

enum class WitnessKind { Cycle, NonRealIntersection, TriangleIntro };
const char* witness_kind_name(WitnessKind k);

struct ObstructionWitness {
  WitnessKind kind = WitnessKind::Cycle;
  Element element;
  int component = -1;                  // distinguished component
  std::vector<int> other_components;   // non-real witness: the partner component
  UniPoly f;                           // cycle: in the chart parameter; non-real: in x
  std::vector<Rational> nodes;         // cycle: sorted attachment parameters
  std::optional<Rational> abscissa;    // non-real: x-coordinate of the pair
  std::vector<std::string> checkable_properties;
};
Json witness_to_json(const CurveConfiguration& config, const ObstructionWitness& w);
ObstructionWitness witness_from_json(const CurveConfiguration& config, const Json& j);

// f with f(P_j) = (-1)^j on the first affine-line component of the cycle; F = f^2 there, 1 elsewhere.
ObstructionWitness cycle_witness(const CurveConfiguration& config, const GraphCycle& cycle);

// Lagrange interpolant through (nodes[j], (-1)^(j+1)).
UniPoly alternating_interpolant(const std::vector<Rational>& nodes);

// Two real conics sharing a non-real pair over a rational abscissa.
ObstructionWitness nonreal_intersection_witness(const CurveConfiguration& config, int c1, int c2);

ExactReport verify_witness(const CurveConfiguration& config, const ObstructionWitness& w);

// Exhaustive search for degree <= 1 representations of a triangle witness: every summand is
// fixed by its vertex values, so a representation is a PSD 3x3 Gram matrix over the vertices.
struct TriangleSearch {
  long long grid_size = 0;
  long long candidates_examined = 0;
  long long equation_survivors = 0;  // vertex Gram matrices meeting every coefficient equation
  long long representations = 0;     // survivors that are PSD
  std::optional<RMatrix> forced_gram;
};
TriangleSearch triangle_bruteforce(const CurveConfiguration& config, const Element& F, int max_den = 16,
                                   const Rational& bound = Rational(2));
Json triangle_search_to_json(const TriangleSearch& s);

}  // namespace curvesos
