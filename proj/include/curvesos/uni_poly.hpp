#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "curvesos/rational.hpp"

namespace curvesos {

// Dense univariate polynomial over Q; coeffs_[k] is the coefficient of t^k.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<Rational> coeffs);

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, int k);
  static UniPoly var();

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const Rational& coeff(int k) const;
  const Rational& leading() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational operator()(const Rational& t) const;
  double eval_double(double t) const;
  UniPoly derivative() const;
  UniPoly monic() const;
  UniPoly compose(const UniPoly& inner) const;
  // p(t + a)
  UniPoly shift(const Rational& a) const;
  // p(c t)
  UniPoly scale_var(const Rational& c) const;
  // Integer coefficients, content 1, positive leading coefficient.
  UniPoly primitive_integer() const;
  int valuation() const;  // lowest exponent with nonzero coefficient; -1 for zero

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivMod {
  UniPoly quot;
  UniPoly rem;
};

DivMod divmod(const UniPoly& a, const UniPoly& b);
// Exact quotient; throws DegenerateInput when the division leaves a remainder.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);
UniPoly gcd(const UniPoly& a, const UniPoly& b);  // monic (zero if both zero)
UniPoly pow(const UniPoly& p, int k);

UniPoly squarefree_part(const UniPoly& p);
bool is_squarefree(const UniPoly& p);

// Yun's algorithm: p = lc(p) * prod f_i^i with monic, square-free, pairwise coprime f_i.
struct SquarefreeFactor {
  UniPoly factor;
  int multiplicity;
};
std::vector<SquarefreeFactor> squarefree_decomposition(const UniPoly& p);

// Degree of sum of squares versus twice the maximal degree.
struct DegreeRuleCheck {
  int degree_of_sum;
  int twice_max_degree;
  bool holds() const { return degree_of_sum == twice_max_degree; }
};
DegreeRuleCheck check_degree_rule(std::span<const UniPoly> fs);

}  // namespace curvesos
