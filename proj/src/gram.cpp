#include "curvesos/gram.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <random>

#include "curvesos/error.hpp"
#include "curvesos/real_roots.hpp"

namespace curvesos {

std::vector<std::string> GramBlock::labels(const std::string& param) const {
  std::vector<std::string> out;
  auto mono = [](const std::string& v, int k) -> std::string {
    if (k == 0) return "";
    if (k == 1) return v;
    return v + "^" + std::to_string(k);
  };
  if (circle) {
    for (int k = 0; k <= degree; ++k) out.push_back(k == 0 ? "1" : mono("X", k));
    for (int k = 0; k < degree; ++k) out.push_back(k == 0 ? "Y" : mono("X", k) + "*Y");
  } else {
    for (int e = lo; e <= hi; ++e) out.push_back(e == 0 ? "1" : mono(param, e));
  }
  return out;
}

namespace {

const GramBlock& block_of(const GramProblem& p, int component) {
  for (const auto& b : p.blocks)
    if (b.component == component) return b;
  fail(ErrorCode::InvalidInput, "component " + std::to_string(component) + " is not part of the Gram problem");
}

int circle_degree(const CircleFn& f) { return f.is_zero() ? 0 : f.degree(); }

// Functional e_i^T G e_k as coefficients of the independent entries G_uv (u <= v).
GramConstraint bilinear_constraint(const RVector& ei, const RVector& ek, const Rational& rhs, std::string tag) {
  GramConstraint c;
  const int n = static_cast<int>(ei.size());
  for (int u = 0; u < n; ++u)
    for (int v = u; v < n; ++v) {
      Rational coef = u == v ? Rational(ei[u] * ek[u]) : Rational(ei[u] * ek[v] + ei[v] * ek[u]);
      if (sgn(coef) != 0) c.entries.emplace_back(u, v, coef);
    }
  c.rhs = rhs;
  c.tag = std::move(tag);
  return c;
}

Rational dot(const RVector& a, const RVector& b) {
  Rational s = 0;
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) s += a[i] * b[i];
  return s;
}


// Pullback of a circle function through X = (1 - s^2)/(1 + s^2), Y = 2s/(1 + s^2), cleared
// by (1 + s^2)^D. Points other than (-1, 0) are the finite roots; (-1, 0) is s = infinity.
UniPoly circle_pullback(const CircleFn& f, int D) {
  const UniPoly one_minus{Rational(1), Rational(0), Rational(-1)}, one_plus{Rational(1), Rational(0), Rational(1)};
  const UniPoly two_s{Rational(0), Rational(2)};
  UniPoly g;
  for (int k = 0; k <= f.a.degree(); ++k)
    if (sgn(f.a.coeff(k)) != 0) g += f.a.coeff(k) * pow(one_minus, k) * pow(one_plus, D - k);
  for (int k = 0; k <= f.b.degree(); ++k)
    if (sgn(f.b.coeff(k)) != 0) g += f.b.coeff(k) * two_s * pow(one_minus, k) * pow(one_plus, D - 1 - k);
  return g;
}

// Monic polynomial whose roots are the repeated roots of g that every PSD solution must
// respect. Exact mode keeps totally real square-free factors and rational roots; the
// repeated locus mode keeps every repeated root, real or not.
UniPoly forced_zero_locus(const UniPoly& g, FaceReduction mode) {
  UniPoly h = UniPoly::constant(1);
  if (g.degree() <= 0) return h;
  for (const auto& sf : squarefree_decomposition(g)) {
    if (sf.multiplicity < 2 || sf.factor.degree() < 1) continue;
    if (mode == FaceReduction::RepeatedLocus || count_real_roots(sf.factor) == sf.factor.degree()) {
      h = h * sf.factor;
    } else {
      for (const Rational& r : rational_roots(sf.factor)) h = h * UniPoly{Rational(-r), Rational(1)};
    }
  }
  return h;
}

// Kernel vectors spanning "vanishes at every root of h" for basis polynomials m_k(s).
void add_locus_kernel(GramProblem& p, const GramBlock& b, const std::vector<UniPoly>& basis, const UniPoly& h) {
  const int n = h.degree();
  if (n < 1) return;
  std::vector<RVector> vs(n, RVector(p.N, Rational(0)));
  for (size_t k = 0; k < basis.size(); ++k) {
    UniPoly r = divmod(basis[k], h).rem;
    for (int i = 0; i <= r.degree(); ++i) vs[i][b.offset + k] = r.coeff(i);
  }
  for (auto& v : vs) p.kernel.push_back(std::move(v));
}

}  // namespace

RVector basis_at(const GramProblem& p, int component, const ChartPoint& at) {
  const GramBlock& b = block_of(p, component);
  RVector e(p.N, Rational(0));
  if (b.circle) {
    const auto& xy = std::get<std::pair<Rational, Rational>>(at);
    Rational xk = 1;
    for (int k = 0; k <= b.degree; ++k) {
      e[b.offset + k] = xk;
      if (k < b.degree) e[b.offset + b.degree + 1 + k] = xk * xy.second;
      xk *= xy.first;
    }
  } else {
    const Rational& t = std::get<Rational>(at);
    for (int k = b.lo; k <= b.hi; ++k) {
      if (k < 0 && sgn(t) == 0) fail(ErrorCode::InvalidInput, "basis evaluated at an excluded point");
      Rational v = 1;
      if (k >= 0) {
        for (int i = 0; i < k; ++i) v *= t;
      } else {
        for (int i = 0; i < -k; ++i) v /= t;
      }
      e[b.offset + (k - b.lo)] = v;
    }
  }
  return e;
}

GramProblem build_gram_problem(const CurveConfiguration& config, const std::vector<int>& components,
                               const Element& F, int degree, const PrescribedValues* prescribed,
                               FaceReduction face) {
  if (degree < 0) fail(ErrorCode::InvalidInput, "negative Gram degree");
  GramProblem p;
  p.degree = degree;
  p.components = components;
  std::sort(p.components.begin(), p.components.end());
  for (int id : p.components) {
    const Component& c = config.component(id);
    auto it = F.find(id);
    if (it == F.end()) fail(ErrorCode::InvalidInput, "target has no entry for component " + c.label);
    GramBlock b;
    b.component = id;
    b.offset = p.N;
    if (c.chart.kind == ChartKind::UnitCircle) {
      const auto* f = std::get_if<CircleFn>(&it->second);
      if (!f) fail(ErrorCode::InvalidInput, "circle component " + c.label + " needs a circle function");
      b.circle = true;
      b.degree = std::max(degree, (circle_degree(*f) + 1) / 2);
    } else if (c.chart.is_line_type()) {
      const auto* f = std::get_if<Laurent>(&it->second);
      if (!f) fail(ErrorCode::InvalidInput, "line component " + c.label + " needs a Laurent function");
      int low = f->is_zero() ? 0 : f->low(), high = f->is_zero() ? 0 : f->high();
      if (low < 0 && c.chart.kind != ChartKind::PuncturedLine)
        fail(ErrorCode::InvalidInput, "pole on an affine-line component " + c.label);
      b.lo = low < 0 ? -((-low + 1) / 2) : 0;
      b.hi = std::max(degree, (high + 1) / 2);
    } else {
      fail(ErrorCode::UnsupportedComponent, "component " + c.label + " has no line or circle chart");
    }
    p.N += b.size();
    p.blocks.push_back(b);
  }

  // Coefficient matching per component.
  for (const auto& b : p.blocks) {
    const ComponentFunction& f = F.at(b.component);
    const std::string lbl = config.component(b.component).label;
    if (!b.circle) {
      const Laurent& l = std::get<Laurent>(f);
      for (int k = 2 * b.lo; k <= 2 * b.hi; ++k) {
        GramConstraint c;
        for (int a = b.lo; a <= b.hi; ++a) {
          int e = k - a;
          if (e < a || e > b.hi) continue;
          c.entries.emplace_back(b.offset + a - b.lo, b.offset + e - b.lo, Rational(a == e ? 1 : 2));
        }
        c.rhs = l.coeff(k);
        c.tag = lbl + ":t^" + std::to_string(k);
        p.constraints.push_back(std::move(c));
      }
      if (!l.is_zero() && (l.low() < 2 * b.lo || l.high() > 2 * b.hi))
        fail(ErrorCode::InvalidInput, "Gram degree too small for component " + lbl);
    } else {
      const CircleFn& cf = std::get<CircleFn>(f);
      const int d = b.degree;
      // Normal-form monomials: X^k (k <= 2d) at index k, Y X^k (k < 2d) at 2d + 1 + k.
      std::vector<GramConstraint> cs(4 * d + 1);
      auto idx_x = [&](int i) { return b.offset + i; };
      auto idx_y = [&](int i) { return b.offset + d + 1 + i; };
      auto add = [&](int mono, int u, int v, const Rational& coef) {
        if (u > v) std::swap(u, v);
        cs[mono].entries.emplace_back(u, v, coef);
      };
      for (int i = 0; i <= d; ++i)
        for (int j = i; j <= d; ++j) add(i + j, idx_x(i), idx_x(j), Rational(i == j ? 1 : 2));
      for (int i = 0; i <= d; ++i)
        for (int j = 0; j < d; ++j) add(2 * d + 1 + i + j, idx_x(i), idx_y(j), Rational(2));
      for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
          Rational w(i == j ? 1 : 2);
          add(i + j, idx_y(i), idx_y(j), w);
          add(i + j + 2, idx_y(i), idx_y(j), -w);
        }
      for (int k = 0; k <= 2 * d; ++k) {
        cs[k].rhs = cf.a.coeff(k);
        cs[k].tag = lbl + ":X^" + std::to_string(k);
      }
      for (int k = 0; k < 2 * d; ++k) {
        cs[2 * d + 1 + k].rhs = cf.b.coeff(k);
        cs[2 * d + 1 + k].tag = lbl + ":X^" + std::to_string(k) + "*Y";
      }
      if (cf.a.degree() > 2 * d || cf.b.degree() > 2 * d - 1)
        fail(ErrorCode::InvalidInput, "Gram degree too small for component " + lbl);
      for (auto& c : cs) p.constraints.push_back(std::move(c));
    }
  }

  // Degree rule on lines: basis monomials beyond half the target's degree range vanish in
  // every PSD solution, so their directions join the kernel (exact face reduction). Repeated
  // real roots of the target force every summand to vanish there as well.
  for (const auto& b : p.blocks) {
    if (face == FaceReduction::None) break;
    std::vector<UniPoly> basis;
    UniPoly g;
    if (!b.circle) {
      const Laurent& l = std::get<Laurent>(F.at(b.component));
      for (int k = b.lo; k <= b.hi; ++k) {
        if (!l.is_zero() && 2 * k >= l.low() && 2 * k <= l.high()) continue;
        RVector e(p.N, Rational(0));
        e[b.offset + k - b.lo] = 1;
        p.kernel.push_back(std::move(e));
      }
      if (l.is_zero()) continue;
      g = l.body();
      for (int k = b.lo; k <= b.hi; ++k) basis.push_back(UniPoly::monomial(Rational(1), k - b.lo));
    } else {
      const CircleFn& f = std::get<CircleFn>(F.at(b.component));
      if (f.is_zero()) continue;
      const int D = circle_degree(f), d = b.degree;
      g = circle_pullback(f, D);
      if (g.degree() < 2 * D) p.kernel.push_back(basis_at(p, b.component, std::pair{Rational(-1), Rational(0)}));
      const UniPoly one_minus{Rational(1), Rational(0), Rational(-1)}, one_plus{Rational(1), Rational(0), Rational(1)};
      const UniPoly two_s{Rational(0), Rational(2)};
      for (int k = 0; k <= d; ++k) basis.push_back(pow(one_minus, k) * pow(one_plus, d - k));
      for (int k = 0; k < d; ++k) basis.push_back(two_s * pow(one_minus, k) * pow(one_plus, d - 1 - k));
    }
    add_locus_kernel(p, b, basis, forced_zero_locus(g, face));
  }

  // Shared points: every summand takes one value there, so G (e_i(P) - e_j(P)) = 0.
  std::vector<int> in = p.components;
  auto included = [&](int c) { return std::binary_search(in.begin(), in.end(), c); };
  for (const auto& pt : config.points) {
    std::vector<int> cs;
    for (int c : pt.components)
      if (included(c)) cs.push_back(c);
    if (cs.size() < 2) continue;
    for (int c : cs)
      if (!pt.params.count(c))
        fail(ErrorCode::UnsupportedComponent, "shared point " + pt.label + " has no exact chart parameter");
    RVector e0 = basis_at(p, cs[0], pt.params.at(cs[0]));
    for (size_t k = 1; k < cs.size(); ++k) {
      RVector ek = basis_at(p, cs[k], pt.params.at(cs[k]));
      for (int i = 0; i < p.N; ++i) ek[i] = e0[i] - ek[i];
      p.kernel.push_back(std::move(ek));
    }
  }

  if (prescribed) {
    std::vector<std::pair<RVector, RVector>> pts;  // (basis vector, prescribed values)
    for (const auto& [pid, vals] : prescribed->at_point) {
      const IntersectionPoint* pt = nullptr;
      for (const auto& q : config.points)
        if (q.id == pid) pt = &q;
      if (!pt) fail(ErrorCode::InvalidInput, "unknown point " + std::to_string(pid));
      int comp = -1;
      for (int c : pt->components)
        if (included(c) && pt->params.count(c)) {
          comp = c;
          break;
        }
      if (comp < 0) fail(ErrorCode::UnsupportedComponent, "prescribed point " + pt->label + " has no exact chart parameter");
      RVector e = basis_at(p, comp, pt->params.at(comp));
      if (sgn(dot(vals, vals)) == 0)
        p.kernel.push_back(e);
      else
        pts.emplace_back(std::move(e), vals);
    }
    // Linear relations among the prescribed vectors hold for the summand value vectors too:
    // sum l_i a_i = 0 puts sum l_i e(P_i) in the kernel of G (exact face reduction).
    if (pts.size() > 1) {
      size_t len = 0;
      for (const auto& pt : pts) len = std::max(len, pt.second.size());
      RMatrix M = rmatrix(static_cast<int>(len), static_cast<int>(pts.size()));
      for (size_t i = 0; i < pts.size(); ++i)
        for (size_t r = 0; r < pts[i].second.size(); ++r) M[r][i] = pts[i].second[r];
      for (const auto& l : null_space(M, static_cast<int>(pts.size()))) {
        RVector v(p.N, Rational(0));
        for (size_t i = 0; i < pts.size(); ++i)
          for (int k = 0; k < p.N; ++k) v[k] += l[i] * pts[i].first[k];
        p.kernel.push_back(std::move(v));
      }
    }
    for (size_t i = 0; i < pts.size(); ++i)
      for (size_t k = i; k < pts.size(); ++k)
        p.constraints.push_back(bilinear_constraint(pts[i].first, pts[k].first, dot(pts[i].second, pts[k].second),
                                                    "value:" + std::to_string(i) + "," + std::to_string(k)));
  }
  return p;
}

namespace {

// Face-reduced exact data: G = U H U^T, constraints on the independent entries of H.
struct Reduced {
  RMatrix U;  // N x M
  int M = 0;
  int nv = 0;
  RMatrix A;  // constraint rows over H_pq (p <= q)
  RVector b;
  int var(int p, int q) const {
    if (p > q) std::swap(p, q);
    return p * M - p * (p - 1) / 2 + (q - p);
  }
};

Reduced reduce(const GramProblem& prob) {
  Reduced r;
  std::vector<RVector> basis;
  if (prob.kernel.empty()) {
    for (int i = 0; i < prob.N; ++i) {
      RVector e(prob.N, Rational(0));
      e[i] = 1;
      basis.push_back(std::move(e));
    }
  } else {
    basis = null_space(prob.kernel, prob.N);
  }
  r.M = static_cast<int>(basis.size());
  r.U = rmatrix(prob.N, r.M);
  for (int p = 0; p < r.M; ++p)
    for (int i = 0; i < prob.N; ++i) r.U[i][p] = basis[p][i];
  r.nv = r.M * (r.M + 1) / 2;
  for (const auto& c : prob.constraints) {
    RVector row(r.nv, Rational(0));
    for (const auto& [i, j, coef] : c.entries) {
      // coef * G_ij (i <= j) where G_ij = sum_pq U_ip H_pq U_jq.
      for (int p = 0; p < r.M; ++p) {
        if (sgn(r.U[i][p]) == 0 && sgn(r.U[j][p]) == 0) continue;
        for (int q = 0; q < r.M; ++q) {
          Rational w = r.U[i][p] * r.U[j][q];
          if (sgn(w) == 0) continue;
          row[r.var(p, q)] += coef * w;
        }
      }
    }
    r.A.push_back(std::move(row));
    r.b.push_back(c.rhs);
  }
  return r;
}

DMatrix to_dmatrix(const Eigen::VectorXd& x, const Reduced& r) {
  DMatrix H(r.M);
  const double s = std::sqrt(0.5);
  for (int p = 0; p < r.M; ++p)
    for (int q = p; q < r.M; ++q) {
      double v = x(r.var(p, q));
      if (p != q) v *= s;
      H(p, q) = H(q, p) = v;
    }
  return H;
}

Eigen::VectorXd from_dmatrix(const DMatrix& H, const Reduced& r) {
  Eigen::VectorXd x(r.nv);
  const double s = std::sqrt(2.0);
  for (int p = 0; p < r.M; ++p)
    for (int q = p; q < r.M; ++q) x(r.var(p, q)) = p == q ? H(p, q) : s * H(p, q);
  return x;
}

DMatrix lift(const DMatrix& H, const RMatrix& U) {
  const int N = static_cast<int>(U.size());
  const int M = H.n;
  std::vector<double> Ud(static_cast<size_t>(N) * M);
  for (int i = 0; i < N; ++i)
    for (int p = 0; p < M; ++p) Ud[static_cast<size_t>(i) * M + p] = U[i][p].get_d();
  DMatrix UH(N);
  std::vector<double> tmp(static_cast<size_t>(N) * M, 0.0);
  for (int i = 0; i < N; ++i)
    for (int q = 0; q < M; ++q) {
      double s = 0;
      for (int p = 0; p < M; ++p) s += Ud[static_cast<size_t>(i) * M + p] * H(p, q);
      tmp[static_cast<size_t>(i) * M + q] = s;
    }
  DMatrix G(N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      double s = 0;
      for (int q = 0; q < M; ++q) s += tmp[static_cast<size_t>(i) * M + q] * Ud[static_cast<size_t>(j) * M + q];
      G(i, j) = s;
    }
  return G;
}

}  // namespace

GramSolution alternating_projections(const GramProblem& prob, const ProjectionOptions& opt, bool allow_failure) {
  if (!(opt.tol > 0)) fail(ErrorCode::InvalidInput, "tolerance must be positive");
  Reduced red = reduce(prob);
  GramSolution sol;
  sol.U = red.U;
  const int m = static_cast<int>(red.A.size());
  const double s2 = std::sqrt(0.5);
  Eigen::MatrixXd A(m, red.nv);
  Eigen::VectorXd b(m);
  for (int k = 0; k < m; ++k) {
    b(k) = red.b[k].get_d();
    for (int p = 0; p < red.M; ++p)
      for (int q = p; q < red.M; ++q) A(k, red.var(p, q)) = red.A[k][red.var(p, q)].get_d() * (p == q ? 1.0 : s2);
  }
  // The exact face basis U is far from orthonormal. Iterating on K = R H R^T with U = Q R
  // (Q orthonormal) gives the same feasibility problem in the metric of G itself.
  Eigen::MatrixXd Ud(prob.N, red.M);
  for (int i = 0; i < prob.N; ++i)
    for (int p = 0; p < red.M; ++p) Ud(i, p) = red.U[i][p].get_d();
  Eigen::MatrixXd Rm = Eigen::MatrixXd::Identity(red.M, red.M), Rinv = Rm;
  if (red.M > 0) {
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(Ud);
    Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(prob.N, red.M);
    Rm = Q.transpose() * Ud;
    Rinv = Rm.inverse();
    for (int k = 0; k < m; ++k) {
      Eigen::MatrixXd S(red.M, red.M);
      for (int p = 0; p < red.M; ++p)
        for (int q = p; q < red.M; ++q) S(p, q) = S(q, p) = p == q ? A(k, red.var(p, q)) : A(k, red.var(p, q)) * s2;
      Eigen::MatrixXd Sk = Rinv.transpose() * S * Rinv;
      for (int p = 0; p < red.M; ++p)
        for (int q = p; q < red.M; ++q) A(k, red.var(p, q)) = p == q ? Sk(p, q) : Sk(p, q) / s2;
    }
  }
  auto to_h = [&](const DMatrix& K) {
    Eigen::MatrixXd Ke(red.M, red.M);
    for (int p = 0; p < red.M; ++p)
      for (int q = 0; q < red.M; ++q) Ke(p, q) = K(p, q);
    Eigen::MatrixXd He = Rinv * Ke * Rinv.transpose();
    DMatrix H(red.M);
    for (int p = 0; p < red.M; ++p)
      for (int q = 0; q < red.M; ++q) H(p, q) = 0.5 * (He(p, q) + He(q, p));
    return H;
  };

  // A face reduced to {0} leaves no unknowns; the constraints then only test b = 0.
  const bool trivial = m == 0 || red.nv == 0;
  Eigen::BDCSVD<Eigen::MatrixXd> svd;
  if (!trivial) {
    svd.compute(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(1e-12);
  }
  auto project_affine = [&](const Eigen::VectorXd& x) -> Eigen::VectorXd {
    if (trivial) return x;
    return x - svd.solve(A * x - b);
  };

  Eigen::VectorXd x(red.nv);
  if (opt.start) {
    // H = U^+ G U^+T with U^+ the least-squares inverse of U, then K = R H R^T.
    Eigen::MatrixXd Gs(prob.N, prob.N);
    for (int i = 0; i < prob.N; ++i)
      for (int j = 0; j < prob.N; ++j) Gs(i, j) = (*opt.start)(i, j);
    Eigen::MatrixXd Up = Ud.completeOrthogonalDecomposition().pseudoInverse();
    Eigen::MatrixXd Hs = Rm * (Up * Gs * Up.transpose()) * Rm.transpose();
    DMatrix H(red.M);
    for (int p = 0; p < red.M; ++p)
      for (int q = 0; q < red.M; ++q) H(p, q) = Hs(p, q);
    x = from_dmatrix(H, red);
  } else {
    std::mt19937_64 rng(opt.seed);
    std::normal_distribution<double> nd(0.0, 1.0);
    DMatrix H(red.M);
    for (int p = 0; p < red.M; ++p) {
      for (int q = p; q < red.M; ++q) H(p, q) = H(q, p) = 0.1 * nd(rng);
      H(p, p) += 1.0;
    }
    x = from_dmatrix(H, red);
  }

  x = project_affine(x);
  // An inconsistent constraint system leaves a residual after the least-squares step.
  const double aff_tol = 1e-8 * (1.0 + (m ? b.cwiseAbs().maxCoeff() : 0.0));
  const bool consistent = m == 0 || (A * x - b).cwiseAbs().maxCoeff() <= aff_tol;
  Eigen::VectorXd corr = Eigen::VectorXd::Zero(red.nv);
  auto psd_res = [&](const Eigen::VectorXd& v) {
    return std::max(0.0, -min_eigenvalue(to_dmatrix(v, red)));
  };
  double res = psd_res(x);
  sol.trajectory.push_back(res);
  int it = 0;
  while (consistent && res > opt.tol && it < opt.max_iter) {
    ++it;
    Eigen::VectorXd y = from_dmatrix(project_psd(to_dmatrix(x + corr, red), opt.floor), red);
    corr = x + corr - y;
    x = project_affine(y);
    res = psd_res(x);
    sol.trajectory.push_back(res);
    if (sol.trajectory.size() > 200) sol.trajectory.erase(sol.trajectory.begin());
  }
  sol.iterations = it;
  sol.H = to_h(to_dmatrix(x, red));
  sol.G = lift(sol.H, red.U);
  sol.affine_residual = m ? (A * x - b).cwiseAbs().maxCoeff() : 0.0;
  sol.psd_residual = std::max(0.0, -min_eigenvalue(sol.G));
  sol.converged = consistent && res <= opt.tol && sol.affine_residual <= aff_tol;
  if (!consistent && !allow_failure)
    fail(ErrorCode::NoConvergence, "affine constraints are inconsistent (residual " +
                                       std::to_string(sol.affine_residual) + ")");
  if (!sol.converged && !allow_failure) {
    std::string tail;
    for (size_t k = sol.trajectory.size() > 5 ? sol.trajectory.size() - 5 : 0; k < sol.trajectory.size(); ++k)
      tail += " " + std::to_string(sol.trajectory[k]);
    fail(ErrorCode::NoConvergence, "no convergence after " + std::to_string(it) + " iterations; psd residual tail:" + tail);
  }
  return sol;
}

GramSolution solve_gram(const GramProblem& p, const ProjectionOptions& opt, bool interior_first) {
  auto ladder = [&]() -> std::optional<GramSolution> {
    for (double eps : {1e-2, 1e-4}) {
      ProjectionOptions o = opt;
      o.floor = std::max(opt.floor, eps);
      o.max_iter = 4 * opt.max_iter;
      GramSolution s = alternating_projections(p, o, true);
      if (s.converged) return s;
      if (s.iterations == 0) break;  // inconsistent constraints
    }
    return std::nullopt;
  };
  if (interior_first)
    if (auto s = ladder()) return *s;
  GramSolution plain = alternating_projections(p, opt, true);
  if (plain.converged || plain.iterations == 0 || interior_first) return plain;
  if (auto s = ladder()) return *s;
  return plain;
}

Element element_from_coefficients(const GramProblem& p, const CurveConfiguration& config, const RVector& c) {
  (void)config;
  Element e;
  for (const auto& b : p.blocks) {
    if (b.circle) {
      std::vector<Rational> a(b.degree + 1), bb(b.degree);
      for (int k = 0; k <= b.degree; ++k) a[k] = c[b.offset + k];
      for (int k = 0; k < b.degree; ++k) bb[k] = c[b.offset + b.degree + 1 + k];
      e[b.component] = CircleFn{UniPoly(std::move(a)), UniPoly(std::move(bb))};
    } else {
      std::vector<Rational> co(b.hi - b.lo + 1);
      for (int k = 0; k < b.size(); ++k) co[k] = c[b.offset + k];
      e[b.component] = Laurent(b.lo, UniPoly(std::move(co)));
    }
  }
  return e;
}

double element_residual(const CurveConfiguration& config, const std::vector<int>& components,
                        const std::vector<Element>& summands, const Element& F) {
  double worst = 0.0;
  for (int id : components) {
    ComponentFunction acc = F.count(id) ? cf_zero_like(F.at(id)) : evaluate_zero_function(config.component(id));
    for (const auto& s : summands) {
      auto it = s.find(id);
      if (it != s.end()) acc = cf_add(acc, cf_mul(it->second, it->second));
    }
    ComponentFunction diff = cf_sub(acc, F.at(id));
    auto scan = [&](const UniPoly& u) {
      for (const auto& q : u.coeffs()) worst = std::max(worst, std::fabs(q.get_d()));
    };
    if (auto* l = std::get_if<Laurent>(&diff)) scan(l->body());
    else {
      scan(std::get<CircleFn>(diff).a);
      scan(std::get<CircleFn>(diff).b);
    }
  }
  return worst;
}

ExtractedSummands extract_summands(const GramProblem& p, const GramSolution& sol, const Element& F,
                                   const CurveConfiguration& config, bool rationalize_result) {
  ExtractedSummands out;
  Reduced red = reduce(p);
  const int M = red.M;
  if (rationalize_result) {
    std::vector<int> rows = independent_rows(red.A);
    const int k = static_cast<int>(rows.size());
    RMatrix AAt = rmatrix(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = i; j < k; ++j) {
        Rational s = 0;
        const RVector& ri = red.A[rows[i]];
        const RVector& rj = red.A[rows[j]];
        for (int v = 0; v < red.nv; ++v)
          if (sgn(ri[v]) != 0 && sgn(rj[v]) != 0) s += ri[v] * rj[v];
        AAt[i][j] = AAt[j][i] = s;
      }
    for (int bits : {12, 20, 28, 36, 44}) {
      Integer den = Integer(1) << bits;
      RVector h(red.nv);
      for (int a = 0; a < M; ++a)
        for (int c = a; c < M; ++c) h[red.var(a, c)] = rationalize(sol.H(a, c), den);
      RVector rhs(k);
      for (int i = 0; i < k; ++i) {
        Rational s = red.b[rows[i]];
        const RVector& ri = red.A[rows[i]];
        for (int v = 0; v < red.nv; ++v)
          if (sgn(ri[v]) != 0) s -= ri[v] * h[v];
        rhs[i] = s;
      }
      auto y = k ? solve(AAt, rhs) : std::optional<RVector>(RVector{});
      if (!y) break;
      for (int i = 0; i < k; ++i) {
        if (sgn((*y)[i]) == 0) continue;
        const RVector& ri = red.A[rows[i]];
        for (int v = 0; v < red.nv; ++v)
          if (sgn(ri[v]) != 0) h[v] += ri[v] * (*y)[i];
      }
      bool consistent = true;
      for (size_t r = 0; r < red.A.size() && consistent; ++r) {
        Rational s = 0;
        for (int v = 0; v < red.nv; ++v)
          if (sgn(red.A[r][v]) != 0) s += red.A[r][v] * h[v];
        consistent = s == red.b[r];
      }
      if (!consistent) {
        out.note = "constraint system has no exact solution";
        break;
      }
      RMatrix Hq = rmatrix(M, M);
      for (int a = 0; a < M; ++a)
        for (int c = a; c < M; ++c) Hq[a][c] = Hq[c][a] = h[red.var(a, c)];
      auto factors = rational_square_factors(Hq);
      if (!factors) continue;
      for (const auto& cH : *factors) {
        RVector cG(p.N, Rational(0));
        bool nonzero = false;
        for (int i = 0; i < p.N; ++i) {
          for (int a = 0; a < M; ++a)
            if (sgn(red.U[i][a]) != 0 && sgn(cH[a]) != 0) cG[i] += red.U[i][a] * cH[a];
          nonzero = nonzero || sgn(cG[i]) != 0;
        }
        if (nonzero) out.summands.push_back(element_from_coefficients(p, config, cG));
      }
      out.residual = element_residual(config, p.components, out.summands, F);
      out.exact = out.residual == 0.0;
      if (out.exact) {
        out.note = "rationalized with denominators 2^" + std::to_string(bits);
        return out;
      }
      out.summands.clear();
    }
    if (out.note.empty()) out.note = "rationalization did not land in the PSD cone";
  }
  // Numeric summands sqrt(lambda) U v from the reduced eigendecomposition.
  out.summands.clear();
  SymEigen e = jacobi_eigen(sol.H);
  Integer den = Integer(1) << 40;
  for (size_t k = 0; k < e.values.size(); ++k) {
    if (e.values[k] <= 1e-14) continue;
    double s = std::sqrt(e.values[k]);
    RVector cG(p.N, Rational(0));
    for (int i = 0; i < p.N; ++i) {
      double v = 0;
      for (int a = 0; a < M; ++a) v += red.U[i][a].get_d() * e.vectors[k][a];
      cG[i] = rationalize(s * v, den);
    }
    out.summands.push_back(element_from_coefficients(p, config, cG));
  }
  out.exact = false;
  out.residual = element_residual(config, p.components, out.summands, F);
  if (rationalize_result && out.note.empty()) out.note = "numeric summands";
  return out;
}

Json gram_problem_to_json(const GramProblem& p, const CurveConfiguration& config) {
  Json j;
  j["components"] = p.components;
  j["degree"] = p.degree;
  j["N"] = p.N;
  Json basis = Json::array();
  for (const auto& b : p.blocks) {
    Json e;
    e["component"] = b.component;
    e["monomials"] = b.labels(config.component(b.component).chart.param);
    basis.push_back(e);
  }
  j["basis"] = basis;
  Json cons = Json::array();
  for (const auto& c : p.constraints) {
    Json e;
    e["tag"] = c.tag;
    Json entries = Json::array();
    for (const auto& [u, v, coef] : c.entries) entries.push_back(Json::array({u, v, to_string(coef)}));
    e["entries"] = entries;
    e["rhs"] = to_string(c.rhs);
    cons.push_back(e);
  }
  j["constraints"] = cons;
  Json ker = Json::array();
  for (const auto& v : p.kernel) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(to_string(x));
    ker.push_back(row);
  }
  j["kernel"] = ker;
  return j;
}

Json gram_solution_to_json(const GramSolution& s) {
  Json j;
  j["converged"] = s.converged;
  j["iterations"] = s.iterations;
  j["affine_residual"] = s.affine_residual;
  j["psd_residual"] = s.psd_residual;
  j["N"] = s.G.n;
  j["G"] = s.G.a;
  return j;
}

}  // namespace curvesos
