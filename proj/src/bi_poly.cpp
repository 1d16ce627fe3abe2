#include "curvesos/bi_poly.hpp"

#include <algorithm>

#include "curvesos/error.hpp"

namespace curvesos {

BiPoly::BiPoly(Terms terms) {
  for (auto& [e, c] : terms)
    if (sgn(c) != 0) terms_.emplace(e, c);
}

BiPoly BiPoly::constant(const Rational& c) { return monomial(c, 0, 0); }
BiPoly BiPoly::x() { return monomial(1, 1, 0); }
BiPoly BiPoly::y() { return monomial(1, 0, 1); }

BiPoly BiPoly::monomial(const Rational& c, int i, int j) {
  BiPoly p;
  p.add_term({i, j}, c);
  return p;
}

BiPoly BiPoly::from_uni(const UniPoly& p, Axis var) {
  BiPoly r;
  for (int k = 0; k <= p.degree(); ++k)
    r.add_term(var == Axis::X ? Exponents{k, 0} : Exponents{0, k}, p.coeff(k));
  return r;
}

void BiPoly::add_term(const Exponents& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

bool BiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0});
}

Rational BiPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

int BiPoly::degree_in(Axis v) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, v == Axis::X ? e.first : e.second);
  return d;
}

Rational BiPoly::operator()(const Rational& xv, const Rational& yv) const {
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int k = 0; k < e.first; ++k) t *= xv;
    for (int k = 0; k < e.second; ++k) t *= yv;
    acc += t;
  }
  return acc;
}

UniPoly BiPoly::eval_at(Axis v, const Rational& value) const {
  std::vector<UniPoly> cs = coeffs_in(v == Axis::X ? Axis::Y : Axis::X);
  // cs[k] is a polynomial in v; collect its value as coefficient of other^k.
  std::vector<Rational> out(cs.size(), Rational(0));
  for (size_t k = 0; k < cs.size(); ++k) out[k] = cs[k](value);
  return UniPoly(std::move(out));
}

std::vector<UniPoly> BiPoly::coeffs_in(Axis v) const {
  int d = degree_in(v);
  std::vector<std::vector<Rational>> raw(std::max(d + 1, 0));
  for (const auto& [e, c] : terms_) {
    int k = v == Axis::X ? e.first : e.second;
    int m = v == Axis::X ? e.second : e.first;
    auto& row = raw[k];
    if (static_cast<int>(row.size()) <= m) row.resize(m + 1, Rational(0));
    row[m] += c;
  }
  std::vector<UniPoly> out;
  out.reserve(raw.size());
  for (auto& r : raw) out.emplace_back(std::move(r));
  return out;
}

UniPoly BiPoly::substitute(const UniPoly& xs, const UniPoly& ys) const {
  UniPoly acc;
  std::vector<UniPoly> xp{UniPoly::constant(1)}, yp{UniPoly::constant(1)};
  for (const auto& [e, c] : terms_) {
    while (static_cast<int>(xp.size()) <= e.first) xp.push_back(xp.back() * xs);
    while (static_cast<int>(yp.size()) <= e.second) yp.push_back(yp.back() * ys);
    acc += (xp[e.first] * yp[e.second]) * c;
  }
  return acc;
}

BiPoly BiPoly::swap_vars() const {
  BiPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(Exponents{e.second, e.first}, c);
  return r;
}

BiPoly BiPoly::translate(const Rational& a, const Rational& b) const {
  UniPoly xs{a, Rational(1)}, ys{b, Rational(1)};
  std::vector<UniPoly> xp{UniPoly::constant(1)}, yp{UniPoly::constant(1)};
  BiPoly r;
  for (const auto& [e, c] : terms_) {
    while (static_cast<int>(xp.size()) <= e.first) xp.push_back(xp.back() * xs);
    while (static_cast<int>(yp.size()) <= e.second) yp.push_back(yp.back() * ys);
    const UniPoly& px = xp[e.first];
    const UniPoly& py = yp[e.second];
    for (int i = 0; i <= px.degree(); ++i)
      for (int j = 0; j <= py.degree(); ++j) r.add_term({i, j}, c * px.coeff(i) * py.coeff(j));
  }
  return r;
}

BiPoly BiPoly::partial(Axis v) const {
  BiPoly r;
  for (const auto& [e, c] : terms_) {
    int k = v == Axis::X ? e.first : e.second;
    if (k == 0) continue;
    Exponents ne = v == Axis::X ? Exponents{e.first - 1, e.second} : Exponents{e.first, e.second - 1};
    r.add_term(ne, c * k);
  }
  return r;
}

BiPoly BiPoly::homogeneous_part(int d) const {
  BiPoly r;
  for (const auto& [e, c] : terms_)
    if (e.first + e.second == d) r.terms_.emplace(e, c);
  return r;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      r.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
  return r;
}

BiPoly pow(const BiPoly& p, int k) {
  BiPoly r = BiPoly::constant(1);
  for (int i = 0; i < k; ++i) r = r * p;
  return r;
}

BiPoly homogeneous_part(const BiPoly& F, int d) { return F.homogeneous_part(d); }

std::string BiPoly::to_string(const std::string& xv, const std::string& yv) const {
  if (is_zero()) return "0";
  // Graded order: higher total degree first, then higher x-degree.
  std::vector<std::pair<Exponents, Rational>> items(terms_.begin(), terms_.end());
  std::sort(items.begin(), items.end(), [](const auto& l, const auto& r) {
    int dl = l.first.first + l.first.second, dr = r.first.first + r.first.second;
    if (dl != dr) return dl > dr;
    return l.first.first > r.first.first;
  });
  std::string out;
  for (const auto& [e, c] : items) {
    Rational a = rational_abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    std::string mono;
    auto factor = [&](const std::string& v, int k) {
      if (k == 0) return;
      if (!mono.empty()) mono += "*";
      mono += v;
      if (k != 1) mono += "^" + std::to_string(k);
    };
    factor(xv, e.first);
    factor(yv, e.second);
    if (mono.empty()) {
      out += curvesos::to_string(a);
    } else if (a == 1) {
      out += mono;
    } else {
      out += curvesos::to_string(a) + "*" + mono;
    }
  }
  return out;
}

const char* split_kind_name(BinaryQuadraticSplit::Kind k) {
  switch (k) {
    case BinaryQuadraticSplit::Kind::Zero: return "Zero";
    case BinaryQuadraticSplit::Kind::PerfectSquare: return "PerfectSquare";
    case BinaryQuadraticSplit::Kind::TwoDistinctRealFactors: return "TwoDistinctRealFactors";
    case BinaryQuadraticSplit::Kind::IrreducibleOverReals: return "IrreducibleOverReals";
  }
  return "?";
}

namespace {

// Scales a linear form so its first nonzero coefficient (x before y) is 1.
BiPoly normalize_linear(const BiPoly& l) {
  Rational a = l.coeff(1, 0);
  Rational lead = sgn(a) != 0 ? a : l.coeff(0, 1);
  return l * Rational(1 / lead);
}

}  // namespace

BinaryQuadraticSplit split_binary_quadratic(const BiPoly& Q) {
  using Kind = BinaryQuadraticSplit::Kind;
  for (const auto& [e, c] : Q.terms())
    if (e.first + e.second != 2)
      fail(ErrorCode::NotHomogeneousDegree2, "form is not homogeneous of degree 2");
  if (Q.is_zero()) return {Kind::Zero, {}, Rational(0)};
  Rational a = Q.coeff(2, 0), b = Q.coeff(1, 1), c = Q.coeff(0, 2);
  Rational disc = b * b - 4 * a * c;
  BinaryQuadraticSplit out{Kind::IrreducibleOverReals, {}, disc};
  if (sgn(disc) < 0) return out;
  if (sgn(disc) == 0) {
    out.kind = Kind::PerfectSquare;
    return out;
  }
  out.kind = Kind::TwoDistinctRealFactors;
  auto root = rational_sqrt(disc);
  if (!root) return out;
  std::vector<BiPoly> fs;
  if (sgn(a) != 0) {
    // a x^2 + b x y + c y^2 = a (x - s1 y)(x - s2 y)
    for (int sg : {-1, 1}) {
      Rational s = (-b + sg * *root) / (2 * a);
      fs.push_back(BiPoly::x() - BiPoly::y() * s);
    }
  } else {
    fs.push_back(BiPoly::y());
    fs.push_back(normalize_linear(BiPoly::x() * b + BiPoly::y() * c));
  }
  for (auto& f : fs) f = normalize_linear(f);
  std::sort(fs.begin(), fs.end(),
            [](const BiPoly& l, const BiPoly& r) { return l.to_string() < r.to_string(); });
  out.factors = std::move(fs);
  return out;
}

}  // namespace curvesos
