#include "curvesos/certificates.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>

#include "curvesos/decision.hpp"
#include "curvesos/error.hpp"
#include "curvesos/real_roots.hpp"

namespace curvesos {

bool ExactReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const ReportCheck& c) { return c.passed; });
}

void ExactReport::add(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, std::move(detail)});
}

Json report_to_json(const ExactReport& r) {
  Json j;
  j["passed"] = r.passed();
  j["exact"] = r.exact;
  j["residual"] = r.residual;
  Json arr = Json::array();
  for (const auto& c : r.checks) {
    Json e;
    e["name"] = c.name;
    e["passed"] = c.passed;
    e["detail"] = c.detail;
    arr.push_back(e);
  }
  j["checks"] = arr;
  return j;
}

int report_exit_code(const ExactReport& r) { return r.passed() ? 0 : 3; }

namespace {

ComponentFunction cf_get(const CurveConfiguration& config, const Element& e, int c) {
  auto it = e.find(c);
  return it != e.end() ? it->second : evaluate_zero_function(config.component(c));
}

Element zero_element(const CurveConfiguration& config, const std::vector<int>& comps) {
  Element e;
  for (int c : comps) e[c] = evaluate_zero_function(config.component(c));
  return e;
}

double cf_max_abs(const ComponentFunction& f) {
  double m = 0.0;
  auto scan = [&](const UniPoly& p) {
    for (const auto& c : p.coeffs()) m = std::max(m, std::fabs(c.get_d()));
  };
  if (const auto* l = std::get_if<Laurent>(&f)) scan(l->body());
  else {
    scan(std::get<CircleFn>(f).a);
    scan(std::get<CircleFn>(f).b);
  }
  return m;
}

ComponentFunction square_sum(const CurveConfiguration& config, const std::vector<Element>& s, int c) {
  ComponentFunction acc = evaluate_zero_function(config.component(c));
  for (const auto& e : s) {
    ComponentFunction f = cf_get(config, e, c);
    acc = cf_add(acc, cf_mul(f, f));
  }
  return acc;
}

const IntersectionPoint& find_point(const CurveConfiguration& config, int id) {
  for (const auto& p : config.points)
    if (p.id == id) return p;
  fail(ErrorCode::InvalidInput, "unknown point " + std::to_string(id));
}

// Rows of B applied to the summand list on the listed components.
std::vector<Element> apply_matrix(const CurveConfiguration& config, const RMatrix& B, const std::vector<Element>& s,
                                  const std::vector<int>& comps) {
  std::vector<Element> out;
  for (const auto& row : B) {
    Element e = zero_element(config, comps);
    for (size_t k = 0; k < row.size(); ++k) {
      if (sgn(row[k]) == 0) continue;
      for (int c : comps) e[c] = cf_add(e[c], cf_scale(cf_get(config, s[k], c), row[k]));
    }
    out.push_back(std::move(e));
  }
  return out;
}

void pad(const CurveConfiguration& config, std::vector<Element>& s, const std::vector<int>& comps, size_t n) {
  while (s.size() < n) s.push_back(zero_element(config, comps));
}

Rational dot(const RVector& a, const RVector& b) {
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

int function_degree(const ComponentFunction& f) {
  if (const auto* l = std::get_if<Laurent>(&f)) return l->is_zero() ? 0 : std::max(l->high(), -l->low());
  return std::max(0, std::get<CircleFn>(f).degree());
}

bool psd_on_component(const Component& c, const ComponentFunction& f) {
  if (const auto* cf = std::get_if<CircleFn>(&f)) return circle_fn_psd(*cf);
  const auto& l = std::get<Laurent>(f);
  if (l.is_zero()) return true;
  int odd = ((l.low() % 2) + 2) % 2;
  UniPoly rep = l.low() >= 0 ? l.to_poly() : (odd ? l.body() * UniPoly::var() : l.body());
  (void)c;
  return !negative_point(rep).has_value();
}

}  // namespace

RMatrix householder_matrix(RVector v, RVector w) {
  size_t n = std::max(v.size(), w.size());
  v.resize(n, Rational(0));
  w.resize(n, Rational(0));
  if (dot(v, v) != dot(w, w))
    fail(ErrorCode::ValueMismatch, "value norms differ: " + to_string(dot(v, v)) + " vs " + to_string(dot(w, w)));
  RMatrix B = rmatrix_identity(static_cast<int>(n));
  RVector u(n);
  for (size_t i = 0; i < n; ++i) u[i] = v[i] - w[i];
  Rational uu = dot(u, u);
  if (sgn(uu) == 0) return B;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) B[i][j] -= 2 * u[i] * u[j] / uu;
  return B;
}

RVector values_at(const CurveConfiguration& config, const std::vector<Element>& summands, int component,
                  int point_id) {
  const IntersectionPoint& p = find_point(config, point_id);
  auto it = p.params.find(component);
  if (it == p.params.end())
    fail(ErrorCode::IrrationalAttachment, "point " + p.label + " has no exact parameter on " +
                                              config.component(component).label);
  RVector v;
  for (const auto& s : summands) v.push_back(evaluate(cf_get(config, s, component), it->second));
  return v;
}

std::vector<Element> householder_glue(const CurveConfiguration& config, const GlueSide& a, const GlueSide& b,
                                      int point_id, RMatrix* B_out) {
  size_t n = std::max(a.summands.size(), b.summands.size());
  std::vector<Element> fa = a.summands, fb = b.summands;
  pad(config, fa, a.components, n);
  pad(config, fb, b.components, n);
  RVector v = values_at(config, fa, a.at_point, point_id);
  RVector w = values_at(config, fb, b.at_point, point_id);
  RMatrix B = householder_matrix(v, w);
  std::vector<Element> ra = apply_matrix(config, B, fa, a.components);
  std::vector<Element> out;
  for (size_t i = 0; i < n; ++i) {
    Element e = ra[i];
    for (const auto& [c, f] : fb[i]) e[c] = f;
    out.push_back(std::move(e));
  }
  if (B_out) *B_out = std::move(B);
  return out;
}

SosCertificate forest_assemble(const CurveConfiguration& config, const AttachmentOrder& order, const Element& F) {
  SosCertificate cert;
  GlueSide side;
  for (size_t idx = 0; idx < order.order.size(); ++idx) {
    int c = order.order[idx];
    const Component& comp = config.component(c);
    if (!comp.chart.is_line_type())
      fail(ErrorCode::Unsupported, "forest assembly needs line-type components; " + comp.label + " is not");
    auto it = F.find(c);
    if (it == F.end()) fail(ErrorCode::InvalidInput, "target has no entry for " + comp.label);
    const auto* f = std::get_if<Laurent>(&it->second);
    if (!f) fail(ErrorCode::InvalidInput, "target on " + comp.label + " is not a line function");
    if (f->low() < 0 && comp.chart.kind == ChartKind::AffineLine)
      fail(ErrorCode::InvalidInput, "pole on the affine line " + comp.label);
    LaurentSos ls;
    try {
      ls = laurent_sos(*f);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NotPsd) fail(ErrorCode::NotPsdOnComponent, comp.label + ": " + e.what());
      throw;
    }
    cert.exact = cert.exact && ls.exact;
    GlueSide next;
    next.components = {c};
    next.at_point = c;
    for (const auto& s : ls.squares) next.summands.push_back(Element{{c, s}});
    cert.provenance.push_back(comp.label + ": " + ls.method + " (" + std::to_string(ls.squares.size()) + " squares)");
    if (idx == 0) {
      side = std::move(next);
      continue;
    }
    const auto& ap = order.attach_point[idx];
    if (ap) {
      const IntersectionPoint& p = find_point(config, *ap);
      for (int d : p.components)
        if (std::find(side.components.begin(), side.components.end(), d) != side.components.end()) {
          side.at_point = d;
          break;
        }
      RMatrix B;
      side.summands = householder_glue(config, side, next, *ap, &B);
      bool identity = B == rmatrix_identity(static_cast<int>(B.size()));
      cert.provenance.push_back("glue " + comp.label + " at " + p.label + ": " +
                                (identity ? "identity" : "householder reflection"));
    } else {
      std::vector<Element> merged;
      for (auto s : side.summands) {
        s[c] = evaluate_zero_function(comp);
        merged.push_back(std::move(s));
      }
      for (auto s : next.summands) {
        for (int d : side.components) s[d] = evaluate_zero_function(config.component(d));
        merged.push_back(std::move(s));
      }
      side.summands = std::move(merged);
      cert.provenance.push_back("append " + comp.label + " (no attachment point)");
    }
    side.components.push_back(c);
  }
  cert.summands = std::move(side.summands);
  Element target;
  for (int c : order.order) target[c] = F.at(c);
  cert.target = std::move(target);
  return cert;
}

CompactCompletion compact_complete(const CurveConfiguration& config, const std::vector<int>& components,
                                   const Element& F, const std::map<int, RVector>& prescribed,
                                   const CompletionOptions& opt) {
  auto included = [&](int c) { return std::find(components.begin(), components.end(), c) != components.end(); };
  // Component of the completion side through each prescribed point.
  std::map<int, int> side_comp;
  for (const auto& [pid, a] : prescribed) {
    const IntersectionPoint& p = find_point(config, pid);
    int comp = -1;
    for (int c : p.components)
      if (included(c) && p.params.count(c)) {
        comp = c;
        break;
      }
    if (comp < 0) fail(ErrorCode::IrrationalAttachment, "prescribed point " + p.label + " has no exact parameter");
    Rational fp = evaluate(F.at(comp), p.params.at(comp));
    if (dot(a, a) != fp)
      fail(ErrorCode::ValueNormMismatch, "|a|^2 = " + to_string(dot(a, a)) + " but F(" + p.label + ") = " + to_string(fp));
    side_comp[pid] = comp;
  }
  int degF = 0, d0 = 0;
  for (int c : components) {
    int d = function_degree(F.at(c));
    degF = std::max(degF, d);
    d0 = std::max(d0, (d + 1) / 2);
  }
  int cap = opt.degree_cap < 0 ? 2 * degF + 6 : opt.degree_cap;
  PrescribedValues pv;
  pv.at_point = prescribed;
  for (int deg = d0; deg <= cap; ++deg) {
    const PrescribedValues* pvp = prescribed.empty() ? nullptr : &pv;
    GramProblem prob = build_gram_problem(config, components, F, deg, pvp);
    GramSolution sol = solve_gram(prob, opt.projection);
    if (!sol.converged) {
      // Non-real repeated roots: the smaller face often still holds a solution.
      GramProblem sub = build_gram_problem(config, components, F, deg, pvp, FaceReduction::RepeatedLocus);
      if (sub.kernel.size() == prob.kernel.size()) continue;
      GramSolution subsol = solve_gram(sub, opt.projection);
      if (!subsol.converged) continue;
      prob = std::move(sub);
      sol = std::move(subsol);
    }
    ExtractedSummands ex = extract_summands(prob, sol, F, config, true);
    if (!ex.exact) {
      GramSolution inner = solve_gram(prob, opt.projection, true);
      if (inner.converged) {
        ExtractedSummands ex2 = extract_summands(prob, inner, F, config, true);
        if (ex2.exact) ex = std::move(ex2);
      }
    }
    CompactCompletion out;
    out.degree = deg;
    out.exact = ex.exact;
    out.provenance.push_back("gram degree " + std::to_string(deg) + ": " + std::to_string(ex.summands.size()) +
                             " summands, " + (ex.exact ? "exact" : "numeric") + (ex.note.empty() ? "" : " (" + ex.note + ")"));
    std::vector<Element> S = ex.summands;
    size_t n = S.size();
    for (const auto& [pid, a] : prescribed) n = std::max(n, a.size());
    pad(config, S, components, n);
    // Sequential reflections: each one fixes the already aligned value vectors because the
    // Gram constraints match all pairwise inner products.
    for (const auto& [pid, a0] : prescribed) {
      RVector a = a0;
      a.resize(n, Rational(0));
      RVector u = values_at(config, S, side_comp[pid], pid);
      RMatrix B;
      if (ex.exact) {
        B = householder_matrix(u, a);
      } else {
        B = rmatrix_identity(static_cast<int>(n));
        RVector d(n);
        for (size_t i = 0; i < n; ++i) d[i] = rationalize(Rational(u[i] - a[i]).get_d(), Integer(1) << 40);
        Rational dd = dot(d, d);
        if (sgn(dd) != 0)
          for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) B[i][j] -= 2 * d[i] * d[j] / dd;
      }
      S = apply_matrix(config, B, S, components);
      out.provenance.push_back("aligned values at " + find_point(config, pid).label);
    }
    out.summands = std::move(S);
    out.residual = element_residual(config, components, out.summands, F);
    return out;
  }
  fail(ErrorCode::Inconclusive, "no decomposition found up to Gram degree " + std::to_string(cap));
}

SosCertificate full_certify(const CurveConfiguration& config, const Element& F, const CompletionOptions& opt) {
  Verdict v = decide_psd_eq_sos(config);
  if (v.answer != Tri::Yes)
    fail(ErrorCode::Refused, std::string("refusing to certify: psd=sos verdict is ") + tri_name(v.answer));
  for (const auto& c : config.components) {
    if (c.chart.kind == ChartKind::None)
      fail(ErrorCode::Unsupported, "component " + c.label + " has no parametrization");
    if (!F.count(c.id)) fail(ErrorCode::InvalidInput, "target has no entry for " + c.label);
    if (!psd_on_component(c, F.at(c.id)))
      fail(ErrorCode::NotPsdOnComponent, "target is negative somewhere on " + c.label);
  }
  CPrime cp = extract_C_prime(config);
  std::vector<int> c1 = cp.yes, c2 = cp.no;
  c2.insert(c2.end(), cp.unknown.begin(), cp.unknown.end());
  std::sort(c2.begin(), c2.end());

  SosCertificate cert;
  cert.target = F;
  std::vector<Element> s1;
  if (!c1.empty()) {
    AttachmentResult ar = attachment_order(config, c1);
    if (!ar.order) fail(ErrorCode::PreconditionViolated, "C' is not a forest");
    SosCertificate part = forest_assemble(config, *ar.order, F);
    s1 = std::move(part.summands);
    cert.exact = part.exact;
    cert.provenance = std::move(part.provenance);
  }
  std::vector<Element> s2;
  if (!c2.empty()) {
    std::map<int, RVector> prescribed;
    for (const auto& p : config.points) {
      int in1 = -1;
      bool in2 = false;
      for (int c : p.components) {
        if (std::find(c1.begin(), c1.end(), c) != c1.end() && in1 < 0) in1 = c;
        if (std::find(c2.begin(), c2.end(), c) != c2.end()) in2 = true;
      }
      if (in1 >= 0 && in2) prescribed[p.id] = values_at(config, s1, in1, p.id);
    }
    CompactCompletion cc = compact_complete(config, c2, F, prescribed, opt);
    s2 = std::move(cc.summands);
    cert.exact = cert.exact && cc.exact;
    cert.provenance.insert(cert.provenance.end(), cc.provenance.begin(), cc.provenance.end());
  }
  size_t n = std::max(s1.size(), s2.size());
  pad(config, s1, c1, n);
  pad(config, s2, c2, n);
  for (size_t k = 0; k < n; ++k) {
    Element e = s1[k];
    for (const auto& [c, f] : s2[k]) e[c] = f;
    cert.summands.push_back(std::move(e));
  }
  ExactReport r = verify_certificate(config, F, cert);
  cert.residual = r.residual;
  cert.exact = cert.exact && r.exact;
  return cert;
}

ExactReport verify_certificate(const CurveConfiguration& config, const Element& F, const SosCertificate& cert,
                               double tol) {
  ExactReport r;
  for (const auto& c : config.components) {
    ComponentFunction target = cf_get(config, F, c.id);
    ComponentFunction diff = cf_sub(square_sum(config, cert.summands, c.id), target);
    if (cf_is_zero(diff)) {
      r.add("identity:" + c.label, true, "exact");
      continue;
    }
    double res = cf_max_abs(diff);
    r.residual = std::max(r.residual, res);
    if (!cert.exact && res <= tol) {
      r.exact = false;
      r.add("identity:" + c.label, true, "numeric residual " + std::to_string(res));
    } else {
      r.add("identity:" + c.label, false, "sum of squares differs from the target, residual " + std::to_string(res));
    }
  }
  const double value_tol = std::sqrt(tol);
  for (const auto& p : config.points) {
    std::vector<int> with;
    for (int c : p.components)
      if (p.params.count(c)) with.push_back(c);
    if (with.size() < p.components.size()) {
      r.add("values:" + p.label, true, "skipped: no exact chart parameters");
      continue;
    }
    bool ok = true;
    std::string detail = "all summands agree";
    for (size_t k = 0; k < cert.summands.size() && ok; ++k) {
      Rational v0 = evaluate(cf_get(config, cert.summands[k], with[0]), p.params.at(with[0]));
      for (size_t i = 1; i < with.size(); ++i) {
        Rational vi = evaluate(cf_get(config, cert.summands[k], with[i]), p.params.at(with[i]));
        if (vi == v0) continue;
        if (!cert.exact && std::fabs(Rational(vi - v0).get_d()) <= value_tol) continue;
        ok = false;
        detail = "summand " + std::to_string(k) + " takes " + to_string(v0) + " on " +
                 config.component(with[0]).label + " but " + to_string(vi) + " on " + config.component(with[i]).label;
        break;
      }
    }
    r.add("values:" + p.label, ok, detail);
  }
  for (const auto& c : config.components) {
    if (!c.chart.is_line_type() || !cert.exact) continue;
    ComponentFunction tf = cf_get(config, F, c.id);
    const auto* t = std::get_if<Laurent>(&tf);
    if (!t) continue;
    int hi = -1000000, lo = 1000000;
    bool any = false;
    for (const auto& s : cert.summands) {
      ComponentFunction sf = cf_get(config, s, c.id);
      const auto* l = std::get_if<Laurent>(&sf);
      if (!l || l->is_zero()) continue;
      any = true;
      hi = std::max(hi, l->high());
      lo = std::min(lo, l->low());
    }
    bool ok = any ? (!t->is_zero() && t->high() == 2 * hi && t->low() == 2 * lo) : t->is_zero();
    r.add("degree:" + c.label, ok,
          any ? "target exponents [" + std::to_string(t->low()) + ", " + std::to_string(t->high()) +
                    "], summands [" + std::to_string(lo) + ", " + std::to_string(hi) + "]"
              : "no nonzero summands");
  }
  return r;
}

bool circle_fn_psd(const CircleFn& f) {
  // a + bY >= 0 for both signs of Y iff a >= 0 and a^2 - b^2 (1 - X^2) >= 0 on [-1, 1].
  const std::optional<Rational> lo = Rational(-1), hi = Rational(1);
  UniPoly one_minus{Rational(1), Rational(0), Rational(-1)};
  return nonnegative_on(f.a, lo, hi) && nonnegative_on(f.a * f.a - f.b * f.b * one_minus, lo, hi);
}

CircleTwoSquares fejer_riesz_circle(const CircleFn& f) {
  using C = std::complex<double>;
  const int d = std::max(0, f.degree());
  CircleTwoSquares out;
  // Laurent coefficients in z = e^{i theta}, offset d: X = (z + 1/z)/2, Y = (z - 1/z)/(2i).
  const int W = 2 * d + 3, off = d + 1;
  auto mul = [&](const std::vector<C>& p, const std::vector<C>& q) {
    std::vector<C> r(W, 0.0);
    for (int i = 0; i < W; ++i)
      for (int j = 0; j < W; ++j) {
        int k = i + j - off;
        if (p[i] != 0.0 && q[j] != 0.0 && k >= 0 && k < W) r[k] += p[i] * q[j];
      }
    return r;
  };
  std::vector<C> X(W, 0.0), Y(W, 0.0), one(W, 0.0);
  X[off + 1] = X[off - 1] = 0.5;
  Y[off + 1] = C(0, -0.5);
  Y[off - 1] = C(0, 0.5);
  one[off] = 1.0;
  std::vector<C> total(W, 0.0), xp = one;
  int n = std::max(f.a.degree(), f.b.degree());
  for (int k = 0; k <= n; ++k) {
    double ak = k <= f.a.degree() ? f.a.coeff(k).get_d() : 0.0;
    double bk = k <= f.b.degree() ? f.b.coeff(k).get_d() : 0.0;
    std::vector<C> yx = mul(Y, xp);
    for (int i = 0; i < W; ++i) total[i] += ak * xp[i] + bk * yx[i];
    xp = mul(xp, X);
  }
  // P(z) = z^d f, degree 2d; keep the d roots of smallest modulus.
  std::vector<C> h{1.0};
  if (d > 0) {
    const int m = 2 * d;
    C lead = total[off + d];
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(m, m);
    for (int i = 1; i < m; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < m; ++i) comp(i, m - 1) = -total[off - d + i] / lead;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
    std::vector<C> roots(es.eigenvalues().data(), es.eigenvalues().data() + m);
    std::sort(roots.begin(), roots.end(), [](const C& a, const C& b) { return std::abs(a) < std::abs(b); });
    for (int k = 0; k < d; ++k) {
      std::vector<C> next(h.size() + 1, 0.0);
      for (size_t i = 0; i < h.size(); ++i) {
        next[i + 1] += h[i];
        next[i] -= roots[k] * h[i];
      }
      h = std::move(next);
    }
  }
  auto f_at = [&](double th) { return f.a.eval_double(std::cos(th)) + f.b.eval_double(std::cos(th)) * std::sin(th); };
  auto h_at = [&](double th) {
    C z = std::polar(1.0, th), s = 0.0, zp = 1.0;
    for (const auto& c : h) {
      s += c * zp;
      zp *= z;
    }
    return s;
  };
  double best = 0.0, th0 = 0.0;
  for (int k = 0; k < 16; ++k) {
    double th = 0.37 + k * 0.39;
    if (std::norm(h_at(th)) > best) best = std::norm(h_at(th)), th0 = th;
  }
  double kappa = best > 0.0 ? f_at(th0) / best : 0.0;
  double s = std::sqrt(std::max(0.0, kappa));
  for (auto& c : h) c *= s;
  // cos k theta = T_k(X), sin k theta = Y U_{k-1}(X).
  std::vector<UniPoly> T{UniPoly::constant(1), UniPoly::var()}, U{UniPoly::constant(1), UniPoly::var() * Rational(2)};
  for (size_t k = 2; k < h.size() + 1; ++k) {
    T.push_back(UniPoly::var() * T[k - 1] * Rational(2) - T[k - 2]);
    U.push_back(UniPoly::var() * U[k - 1] * Rational(2) - U[k - 2]);
  }
  const Integer den = Integer(1) << 40;
  for (size_t k = 0; k < h.size(); ++k) {
    Rational re = rationalize(h[k].real(), den), im = rationalize(h[k].imag(), den);
    out.A.a += T[k] * re;
    out.B.a += T[k] * im;
    if (k > 0) {
      out.A.b -= U[k - 1] * im;
      out.B.b += U[k - 1] * re;
    }
  }
  for (int k = 0; k < 64; ++k) {
    double th = 2.0 * M_PI * k / 64.0;
    double x = std::cos(th), y = std::sin(th);
    double a = out.A.a.eval_double(x) + out.A.b.eval_double(x) * y;
    double b = out.B.a.eval_double(x) + out.B.b.eval_double(x) * y;
    out.residual = std::max(out.residual, std::fabs(a * a + b * b - f_at(th)));
  }
  return out;
}

Json certificate_to_json(const CurveConfiguration& config, const SosCertificate& c) {
  Json j;
  Json s = Json::array();
  for (const auto& e : c.summands) s.push_back(element_to_json(config, e));
  j["summands"] = s;
  j["target"] = element_to_json(config, c.target);
  j["provenance"] = c.provenance;
  j["exact"] = c.exact;
  j["residual"] = c.residual;
  return j;
}

SosCertificate certificate_from_json(const CurveConfiguration& config, const Json& j) {
  SosCertificate c;
  for (const auto& s : j.at("summands")) c.summands.push_back(element_from_json(config, s));
  if (j.contains("target")) c.target = element_from_json(config, j["target"]);
  if (j.contains("provenance")) c.provenance = j["provenance"].get<std::vector<std::string>>();
  c.exact = j.value("exact", true);
  c.residual = j.value("residual", 0.0);
  return c;
}

}  // namespace curvesos
