#include "curvesos/uni_poly.hpp"

#include <algorithm>

#include "curvesos/error.hpp"

namespace curvesos {

namespace {
const Rational kZero(0);
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, int k) {
  std::vector<Rational> v(k + 1, Rational(0));
  v[k] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::var() { return monomial(1, 1); }

void UniPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

const Rational& UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[k];
}

const Rational& UniPoly::leading() const { return coeffs_.empty() ? kZero : coeffs_.back(); }

Rational UniPoly::operator()(const Rational& t) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double UniPoly::eval_double(double t) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->get_d();
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  UniPoly r = *this;
  Rational lc = leading();
  for (auto& c : r.coeffs_) c /= lc;
  return r;
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  UniPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * inner + UniPoly::constant(*it);
  return acc;
}

UniPoly UniPoly::shift(const Rational& a) const {
  return compose(UniPoly{a, Rational(1)});
}

UniPoly UniPoly::scale_var(const Rational& c) const {
  UniPoly r = *this;
  Rational f(1);
  for (auto& x : r.coeffs_) {
    x *= f;
    f *= c;
  }
  r.trim();
  return r;
}

UniPoly UniPoly::primitive_integer() const {
  if (is_zero()) return *this;
  Integer l = 1;
  for (const auto& c : coeffs_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Rational> v;
  v.reserve(coeffs_.size());
  Integer g = 0;
  for (const auto& c : coeffs_) {
    Integer n = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    v.emplace_back(n);
  }
  if (sgn(coeffs_.back()) < 0) g = -g;
  for (auto& x : v) x /= Rational(g);
  return UniPoly(std::move(v));
}

int UniPoly::valuation() const {
  for (size_t k = 0; k < coeffs_.size(); ++k)
    if (sgn(coeffs_[k]) != 0) return static_cast<int>(k);
  return -1;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(r));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    Rational a = rational_abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (k == 0) {
      out += curvesos::to_string(a);
      continue;
    }
    if (a != 1) out += curvesos::to_string(a) + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

DivMod divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) fail(ErrorCode::ZeroPolynomial, "division by zero polynomial");
  std::vector<Rational> rem = a.coeffs();
  int db = b.degree();
  int da = a.degree();
  if (da < db) return {UniPoly(), a};
  std::vector<Rational> q(da - db + 1, Rational(0));
  const Rational& lb = b.leading();
  for (int k = da; k >= db; --k) {
    if (sgn(rem[k]) == 0) continue;
    Rational f = rem[k] / lb;
    q[k - db] = f;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.coeff(j);
  }
  rem.resize(db);
  return {UniPoly(std::move(q)), UniPoly(std::move(rem))};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  DivMod dm = divmod(a, b);
  if (!dm.rem.is_zero()) fail(ErrorCode::DegenerateInput, "inexact polynomial division");
  return dm.quot;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a.monic(), y = b.monic();
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).rem.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

UniPoly pow(const UniPoly& p, int k) {
  UniPoly r = UniPoly::constant(1);
  UniPoly base = p;
  while (k > 0) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "squarefree_part of zero");
  if (p.degree() == 0) return UniPoly::constant(1);
  UniPoly g = gcd(p, p.derivative());
  return divmod(p, g).quot.monic();
}

bool is_squarefree(const UniPoly& p) {
  if (p.is_zero()) return false;
  return gcd(p, p.derivative()).degree() == 0;
}

std::vector<SquarefreeFactor> squarefree_decomposition(const UniPoly& p) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "squarefree_decomposition of zero");
  std::vector<SquarefreeFactor> out;
  if (p.degree() == 0) return out;
  UniPoly f = p.monic();
  UniPoly a = gcd(f, f.derivative());
  UniPoly b = exact_div(f, a);
  UniPoly c = exact_div(f.derivative(), a);
  UniPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UniPoly g = gcd(b, d);
    if (g.degree() > 0) out.push_back({g, i});
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

DegreeRuleCheck check_degree_rule(std::span<const UniPoly> fs) {
  UniPoly sum;
  int mx = -1;
  for (const auto& f : fs) {
    sum += f * f;
    mx = std::max(mx, f.degree());
  }
  return {sum.degree(), mx < 0 ? -1 : 2 * mx};
}

}  // namespace curvesos
