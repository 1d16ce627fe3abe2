#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "curvesos/config_json.hpp"
#include "curvesos/configuration.hpp"
#include "curvesos/exact_matrix.hpp"
#include "curvesos/numeric.hpp"

namespace curvesos {

using Element = std::map<int, ComponentFunction>;

// Monomial basis of one component inside the stacked Gram basis.
struct GramBlock {
  int component = 0;
  bool circle = false;
  int lo = 0, hi = 0;  // line-type: exponents lo..hi
  int degree = 0;      // circle: 1, X..X^d, Y, XY..X^(d-1)Y
  int offset = 0;
  int size() const { return circle ? 2 * degree + 1 : hi - lo + 1; }
  std::vector<std::string> labels(const std::string& param) const;
};

// Linear functional sum coef * G_ij over independent entries (i <= j) equal to rhs.
struct GramConstraint {
  std::vector<std::tuple<int, int, Rational>> entries;
  Rational rhs;
  std::string tag;
};

struct GramProblem {
  std::vector<GramBlock> blocks;
  int N = 0;
  std::vector<GramConstraint> constraints;  // coefficient matching and value constraints
  std::vector<RVector> kernel;              // G v = 0 for each v (shared-point matching)
  std::vector<int> components;
  int degree = 0;
};

struct PrescribedValues {
  std::map<int, RVector> at_point;  // point id -> vector of summand values
};

// Directions removed from the Gram matrix before solving. Exact: line monomials outside half
// the target's degree range, and basis functions at repeated roots of the target that are
// provably real. RepeatedLocus also imposes non-real repeated roots, a subface that can lose
// solutions. None keeps only shared-point and prescribed-value directions.
enum class FaceReduction { None, Exact, RepeatedLocus };

// Throws UnsupportedComponent for charts other than line-type or unit circle, and for
// shared points without exact chart parameters.
GramProblem build_gram_problem(const CurveConfiguration& config, const std::vector<int>& components,
                               const Element& F, int degree, const PrescribedValues* prescribed = nullptr,
                               FaceReduction face = FaceReduction::Exact);

// Basis vector of block c evaluated at a chart point, embedded in the stacked space.
RVector basis_at(const GramProblem& p, int component, const ChartPoint& at);

struct ProjectionOptions {
  double tol = 1e-9;
  int max_iter = 5000;
  unsigned seed = 0;
  double floor = 0.0;                 // eigenvalue floor of the PSD projection
  std::optional<DMatrix> start;       // optional warm start (full N x N Gram matrix)
};

struct GramSolution {
  DMatrix G;               // N x N, the affine iterate mapped back through the face
  DMatrix H;               // reduced matrix
  RMatrix U;               // G = U H U^T
  double affine_residual = 0.0;
  double psd_residual = 0.0;  // max(0, -lambda_min(G))
  int iterations = 0;
  bool converged = false;
  std::vector<double> trajectory;  // psd residual per iteration (tail kept)
};

// Dykstra alternation between the PSD cone (Jacobi) and the affine set (SVD, factorized once).
// Throws NoConvergence unless `allow_failure`; the solution then carries the trajectory tail.
GramSolution alternating_projections(const GramProblem& p, const ProjectionOptions& opt, bool allow_failure = false);

// Plain run first; if it stalls, retries aiming at interior points {H >= eps I} for a short
// ladder of eps, which converges linearly when the feasible set has interior. The first
// converged run wins; otherwise the plain run is returned. `interior_first` skips the plain
// run unless the ladder fails: interior points round to exact certificates more often.
GramSolution solve_gram(const GramProblem& p, const ProjectionOptions& opt, bool interior_first = false);

struct ExtractedSummands {
  std::vector<Element> summands;
  bool exact = false;
  double residual = 0.0;  // max coefficient residual of sum squares - F over components
  std::string note;
};

// Eigen-decomposition summands; with `rationalize`, rounds H, projects exactly onto the
// affine set and factors with LDL^T plus four squares when the result is PSD.
ExtractedSummands extract_summands(const GramProblem& p, const GramSolution& sol, const Element& F,
                                   const CurveConfiguration& config, bool rationalize);

// Element of the summand coefficient vector c (stacked basis).
Element element_from_coefficients(const GramProblem& p, const CurveConfiguration& config, const RVector& c);

Json gram_problem_to_json(const GramProblem& p, const CurveConfiguration& config);
Json gram_solution_to_json(const GramSolution& s);

// Max coefficient of sum squares - F on each listed component (exact arithmetic, rounded).
double element_residual(const CurveConfiguration& config, const std::vector<int>& components,
                        const std::vector<Element>& summands, const Element& F);

}  // namespace curvesos
