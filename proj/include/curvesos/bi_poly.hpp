#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "curvesos/rational.hpp"
#include "curvesos/uni_poly.hpp"

namespace curvesos {

enum class Axis { X, Y };

// Sparse bivariate polynomial; key (i, j) is the monomial x^i y^j.
class BiPoly {
 public:
  using Exponents = std::pair<int, int>;
  using Terms = std::map<Exponents, Rational>;

  BiPoly() = default;
  explicit BiPoly(Terms terms);

  static BiPoly constant(const Rational& c);
  static BiPoly x();
  static BiPoly y();
  static BiPoly monomial(const Rational& c, int i, int j);
  // Embeds a univariate polynomial as a polynomial in the given variable.
  static BiPoly from_uni(const UniPoly& p, Axis var);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational coeff(int i, int j) const;
  int total_degree() const;  // -1 for zero
  int degree_in(Axis v) const;

  Rational operator()(const Rational& x, const Rational& y) const;
  // Substitute one variable by a rational value; the result is a polynomial in the other.
  UniPoly eval_at(Axis v, const Rational& value) const;
  // Coefficients as polynomials in `other`: F = sum_k c_k * v^k.
  std::vector<UniPoly> coeffs_in(Axis v) const;
  // Substitute univariate polynomials (same parameter) for x and y.
  UniPoly substitute(const UniPoly& xs, const UniPoly& ys) const;

  BiPoly swap_vars() const;
  BiPoly translate(const Rational& a, const Rational& b) const;  // F(x + a, y + b)
  BiPoly partial(Axis v) const;
  BiPoly homogeneous_part(int d) const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const Rational& c);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const Rational& c) { return a *= c; }
  friend BiPoly operator*(const Rational& c, BiPoly a) { return a *= c; }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string(const std::string& xv = "x", const std::string& yv = "y") const;

 private:
  void add_term(const Exponents& e, const Rational& c);
  Terms terms_;
};

BiPoly pow(const BiPoly& p, int k);

BiPoly homogeneous_part(const BiPoly& F, int d);

struct BinaryQuadraticSplit {
  enum class Kind { Zero, PerfectSquare, TwoDistinctRealFactors, IrreducibleOverReals };
  Kind kind;
  // Filled for TwoDistinctRealFactors when both factors are rational; Q = c * l1 * l2.
  std::vector<BiPoly> factors;
  Rational discriminant;
};

BinaryQuadraticSplit split_binary_quadratic(const BiPoly& Q);
const char* split_kind_name(BinaryQuadraticSplit::Kind k);

}  // namespace curvesos
