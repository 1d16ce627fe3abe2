#include "curvesos/component_function.hpp"

#include <cmath>

#include "curvesos/bi_poly.hpp"
#include "curvesos/error.hpp"
#include "curvesos/poly_text.hpp"

namespace curvesos {

Laurent::Laurent(int low, UniPoly p) : low_(low), p_(std::move(p)) { normalize(); }

void Laurent::normalize() {
  if (p_.is_zero()) {
    low_ = 0;
    return;
  }
  int v = p_.valuation();
  if (v > 0) {
    std::vector<Rational> cs(p_.coeffs().begin() + v, p_.coeffs().end());
    p_ = UniPoly(std::move(cs));
    low_ += v;
  }
}

UniPoly Laurent::to_poly() const {
  if (low_ < 0) fail(ErrorCode::InvalidInput, "Laurent element has a pole at 0");
  return p_ * UniPoly::monomial(1, low_);
}

Rational Laurent::operator()(const Rational& t) const {
  Rational v = p_(t);
  if (low_ >= 0) {
    for (int k = 0; k < low_; ++k) v *= t;
    return v;
  }
  if (sgn(t) == 0) fail(ErrorCode::InvalidInput, "evaluation at an excluded parameter");
  for (int k = 0; k < -low_; ++k) v /= t;
  return v;
}

double Laurent::eval_double(double t) const { return p_.eval_double(t) * std::pow(t, low_); }

Laurent operator+(const Laurent& a, const Laurent& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  int lo = std::min(a.low_, b.low_);
  UniPoly pa = a.p_ * UniPoly::monomial(1, a.low_ - lo);
  UniPoly pb = b.p_ * UniPoly::monomial(1, b.low_ - lo);
  return Laurent(lo, pa + pb);
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return Laurent(a.low_ + b.low_, a.p_ * b.p_);
}

Laurent pow(const Laurent& f, int k) {
  Laurent r = Laurent::constant(1);
  for (int i = 0; i < k; ++i) r = r * f;
  return r;
}

std::string Laurent::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = p_.degree(); k >= 0; --k) {
    const Rational& c = p_.coeff(k);
    if (sgn(c) == 0) continue;
    int e = k + low_;
    Rational a = rational_abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (e == 0) {
      out += curvesos::to_string(a);
      continue;
    }
    if (a != 1) out += curvesos::to_string(a) + "*";
    out += var;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

int CircleFn::degree() const {
  int da = a.degree();
  int db = b.is_zero() ? -1 : b.degree() + 1;
  return std::max(da, db);
}

CircleFn operator*(const CircleFn& l, const CircleFn& r) {
  // (a1 + b1 Y)(a2 + b2 Y) = a1 a2 + b1 b2 (1 - X^2) + (a1 b2 + a2 b1) Y
  UniPoly one_minus_x2{Rational(1), Rational(0), Rational(-1)};
  return {l.a * r.a + l.b * r.b * one_minus_x2, l.a * r.b + l.b * r.a};
}

std::string CircleFn::to_string() const {
  BiPoly p = BiPoly::from_uni(a, Axis::X) + BiPoly::from_uni(b, Axis::X) * BiPoly::y();
  return p.to_string("X", "Y");
}

namespace {

template <class F>
ComponentFunction dispatch2(const ComponentFunction& a, const ComponentFunction& b, F f) {
  if (a.index() != b.index()) fail(ErrorCode::InvalidInput, "mixing circle and line functions");
  if (auto* la = std::get_if<Laurent>(&a)) return f(*la, std::get<Laurent>(b));
  return f(std::get<CircleFn>(a), std::get<CircleFn>(b));
}

}  // namespace

ComponentFunction cf_zero_like(const ComponentFunction& f) {
  if (std::holds_alternative<Laurent>(f)) return Laurent();
  return CircleFn{};
}

ComponentFunction cf_constant_like(const ComponentFunction& f, const Rational& c) {
  if (std::holds_alternative<Laurent>(f)) return Laurent::constant(c);
  return CircleFn::constant(c);
}

ComponentFunction cf_add(const ComponentFunction& a, const ComponentFunction& b) {
  return dispatch2(a, b, [](const auto& x, const auto& y) -> ComponentFunction { return x + y; });
}

ComponentFunction cf_sub(const ComponentFunction& a, const ComponentFunction& b) {
  return dispatch2(a, b, [](const auto& x, const auto& y) -> ComponentFunction { return x - y; });
}

ComponentFunction cf_mul(const ComponentFunction& a, const ComponentFunction& b) {
  return dispatch2(a, b, [](const auto& x, const auto& y) -> ComponentFunction { return x * y; });
}

ComponentFunction cf_scale(const ComponentFunction& a, const Rational& c) {
  return std::visit([&](const auto& x) -> ComponentFunction { return x * c; }, a);
}

bool cf_is_zero(const ComponentFunction& f) {
  return std::visit([](const auto& x) { return x.is_zero(); }, f);
}

bool cf_equal(const ComponentFunction& a, const ComponentFunction& b) {
  if (a.index() != b.index()) return cf_is_zero(a) && cf_is_zero(b);
  return cf_is_zero(cf_sub(a, b));
}

std::string cf_to_string(const ComponentFunction& f) {
  return std::visit([](const auto& x) { return x.to_string(); }, f);
}

ComponentFunction cf_parse(const std::string& s, bool circle) {
  if (!circle) {
    LaurentText l = parse_laurent(s);
    return Laurent(l.low, l.p);
  }
  BiPoly p = parse_bipoly(s, "X", "Y");
  CircleFn out;
  // Reduce Y^2 -> 1 - X^2 term by term.
  CircleFn y = {UniPoly(), UniPoly::constant(1)};
  for (const auto& [e, c] : p.terms()) {
    CircleFn term = {UniPoly::monomial(c, e.first), UniPoly()};
    for (int k = 0; k < e.second; ++k) term = term * y;
    out = out + term;
  }
  return out;
}

}  // namespace curvesos
