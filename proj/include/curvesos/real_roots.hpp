#pragma once

#include <optional>
#include <vector>

#include "curvesos/rational.hpp"
#include "curvesos/uni_poly.hpp"

namespace curvesos {

struct RootBox {
  Rational lo;
  Rational hi;
  int multiplicity = 1;
  std::optional<Rational> exact_value;

  bool is_exact() const { return exact_value.has_value(); }
  double approx() const;
};

std::vector<UniPoly> sturm_sequence(const UniPoly& p);

// Distinct real roots of a square-free p in the open interval (lo, hi).
int sturm_count(const UniPoly& p, const Rational& lo, const Rational& hi);

// 1 + max |a_i / a_n|; every complex root has modulus strictly below it.
Rational cauchy_bound(const UniPoly& p);

// Sorted, disjoint boxes of the distinct real roots with multiplicities.
std::vector<RootBox> isolate_real_roots(const UniPoly& p);

// Boxes of the real roots of a square-free p (multiplicity 1 each).
std::vector<RootBox> isolate_squarefree(const UniPoly& p);

int count_real_roots(const UniPoly& p);  // distinct real roots

// Halves the box of a root of square-free p until hi - lo <= width (or exact).
void refine(const UniPoly& sqfree, RootBox& box, const Rational& width);
void bisect_once(const UniPoly& sqfree, RootBox& box);

// Sign of q at the root of square-free p isolated by box.
int sign_at_root(const UniPoly& q, const UniPoly& sqfree, RootBox box);

// Real rational roots of p (distinct, sorted).
std::vector<Rational> rational_roots(const UniPoly& p);

// A rational point where p < 0, if one exists.
std::optional<Rational> negative_point(const UniPoly& p);

// Whether p >= 0 on the closed interval [lo, hi] (bounds optional = infinite).
bool nonnegative_on(const UniPoly& p, const std::optional<Rational>& lo,
                    const std::optional<Rational>& hi);

}  // namespace curvesos
