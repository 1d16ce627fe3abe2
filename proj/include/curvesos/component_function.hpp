#pragma once

#include <string>
#include <variant>

#include "curvesos/rational.hpp"
#include "curvesos/uni_poly.hpp"

namespace curvesos {

// t^low * p(t); normalized so that p(0) != 0 (zero has low = 0).
class Laurent {
 public:
  Laurent() = default;
  Laurent(int low, UniPoly p);
  explicit Laurent(UniPoly p) : Laurent(0, std::move(p)) {}
  static Laurent constant(const Rational& c) { return Laurent(UniPoly::constant(c)); }

  int low() const { return low_; }
  const UniPoly& body() const { return p_; }
  bool is_zero() const { return p_.is_zero(); }
  bool is_polynomial() const { return low_ >= 0; }
  int high() const { return low_ + p_.degree(); }
  UniPoly to_poly() const;  // requires is_polynomial()
  Rational coeff(int e) const { return p_.coeff(e - low_); }

  Rational operator()(const Rational& t) const;
  double eval_double(double t) const;

  Laurent operator-() const { return Laurent(low_, -p_); }
  friend Laurent operator+(const Laurent& a, const Laurent& b);
  friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend Laurent operator*(const Laurent& a, const Rational& c) { return Laurent(a.low_, a.p_ * c); }
  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.low_ == b.low_ && a.p_ == b.p_;
  }

  std::string to_string(const std::string& var = "t") const;

 private:
  void normalize();
  int low_ = 0;
  UniPoly p_;
};

Laurent pow(const Laurent& f, int k);

// a(X) + b(X) Y on the unit circle X^2 + Y^2 = 1, kept with deg_Y <= 1.
struct CircleFn {
  UniPoly a;
  UniPoly b;

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  Rational operator()(const Rational& X, const Rational& Y) const { return a(X) + b(X) * Y; }
  int degree() const;  // as a function of (X, Y)
  static CircleFn constant(const Rational& c) { return {UniPoly::constant(c), UniPoly()}; }

  CircleFn operator-() const { return {-a, -b}; }
  friend CircleFn operator+(const CircleFn& l, const CircleFn& r) { return {l.a + r.a, l.b + r.b}; }
  friend CircleFn operator-(const CircleFn& l, const CircleFn& r) { return {l.a - r.a, l.b - r.b}; }
  friend CircleFn operator*(const CircleFn& l, const CircleFn& r);
  friend CircleFn operator*(const CircleFn& l, const Rational& c) { return {l.a * c, l.b * c}; }
  friend bool operator==(const CircleFn& l, const CircleFn& r) { return l.a == r.a && l.b == r.b; }

  std::string to_string() const;  // in variables X, Y
};

using ComponentFunction = std::variant<Laurent, CircleFn>;

ComponentFunction cf_zero_like(const ComponentFunction& f);
ComponentFunction cf_constant_like(const ComponentFunction& f, const Rational& c);
ComponentFunction cf_add(const ComponentFunction& a, const ComponentFunction& b);
ComponentFunction cf_sub(const ComponentFunction& a, const ComponentFunction& b);
ComponentFunction cf_mul(const ComponentFunction& a, const ComponentFunction& b);
ComponentFunction cf_scale(const ComponentFunction& a, const Rational& c);
bool cf_is_zero(const ComponentFunction& f);
bool cf_equal(const ComponentFunction& a, const ComponentFunction& b);
std::string cf_to_string(const ComponentFunction& f);
// Parses according to the kind of `like` (Laurent in one variable, or circle form in X, Y).
ComponentFunction cf_parse(const std::string& s, bool circle);

}  // namespace curvesos
