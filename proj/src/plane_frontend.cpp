#include "curvesos/plane_frontend.hpp"

#include <algorithm>
#include <cstdio>

#include "curvesos/error.hpp"
#include "curvesos/poly_text.hpp"

namespace curvesos {

namespace {

std::optional<bool> opt_bool(const Json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  return j[key].get<bool>();
}

std::string approx_string(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "~%.12g", v);
  return buf;
}

}  // namespace

PlaneCurveInput plane_input_from_json(const Json& j) {
  PlaneCurveInput in;
  for (const auto& f : j.at("factors")) in.factors.push_back(parse_bipoly(f.get<std::string>()));
  if (in.factors.empty()) fail(ErrorCode::InvalidInput, "no factors given");
  if (j.contains("metadata")) {
    for (const auto& [k, v] : j["metadata"].items()) {
      FactorMetadata m;
      m.is_real = opt_bool(v, "is_real");
      m.has_real_points = opt_bool(v, "has_real_points");
      m.rational_open_A1 = opt_bool(v, "rational_open_A1");
      m.nonsingular = opt_bool(v, "nonsingular");
      m.bounded_ring_trivial = opt_bool(v, "bounded_ring_trivial");
      in.metadata[std::stoi(k)] = m;
    }
  }
  return in;
}

PlaneCurveInput plane_input_from_strings(const std::vector<std::string>& factors) {
  PlaneCurveInput in;
  for (const auto& f : factors) in.factors.push_back(parse_bipoly(f));
  return in;
}

const char* point_class_name(PointClass c) {
  switch (c) {
    case PointClass::NonSingular: return "NonSingular";
    case PointClass::OrdinaryDoublePoint: return "OrdinaryDoublePoint";
    case PointClass::NotOMPIT: return "NotOMPIT";
  }
  return "?";
}

const char* conic_kind_name(ConicKind k) {
  switch (k) {
    case ConicKind::Ellipse: return "ellipse";
    case ConicKind::Parabola: return "parabola";
    case ConicKind::Hyperbola: return "hyperbola";
    case ConicKind::EmptyEllipse: return "empty_ellipse";
    case ConicKind::ConjugateLinesWithRealPoint: return "conjugate_lines_real_point";
    case ConicKind::ConjugateParallelLines: return "conjugate_parallel_lines";
  }
  return "?";
}

PointClassification classify_polynomial_at(const BiPoly& F, const Rational& x, const Rational& y) {
  BiPoly G = F.translate(x, y);
  if (sgn(G.coeff(0, 0)) != 0) fail(ErrorCode::PointNotOnCurve, "point is not on the curve");
  PointClassification out;
  if (!G.homogeneous_part(1).is_zero()) {
    out.kind = PointClass::NonSingular;
    return out;
  }
  BinaryQuadraticSplit s = split_binary_quadratic(G.homogeneous_part(2));
  if (s.kind == BinaryQuadraticSplit::Kind::TwoDistinctRealFactors) {
    out.kind = PointClass::OrdinaryDoublePoint;
    out.tangents = s.factors;
  } else {
    out.kind = PointClass::NotOMPIT;
  }
  return out;
}

PointClassification classify_point(const PlaneCurveInput& input, const Rational& x, const Rational& y) {
  BiPoly product = BiPoly::constant(1);
  int through = 0;
  for (const auto& f : input.factors) {
    product = product * f;
    if (sgn(f(x, y)) == 0) ++through;
  }
  if (through == 0) fail(ErrorCode::PointNotOnCurve, "point is not on the curve");
  PointClassification out = classify_polynomial_at(product, x, y);
  out.factors_through = through;
  if (through > 2) {
    out.kind = PointClass::NotOMPIT;
    out.tangents.clear();
  }
  return out;
}

Tri transversal_at(const BiPoly& F, const BiPoly& G, const AlgebraicPoint& P) {
  BiPoly Fx = F.partial(Axis::X), Fy = F.partial(Axis::Y);
  BiPoly Gx = G.partial(Axis::X), Gy = G.partial(Axis::Y);
  if (sign_at(Fx, P) == 0 && sign_at(Fy, P) == 0) return Tri::No;
  if (sign_at(Gx, P) == 0 && sign_at(Gy, P) == 0) return Tri::No;
  BiPoly J = Fx * Gy - Fy * Gx;
  return sign_at(J, P) == 0 ? Tri::No : Tri::Yes;
}

InfinityReport points_at_infinity(const BiPoly& factor) {
  if (factor.is_constant()) fail(ErrorCode::ConstantFactor, "constant factor");
  const int d = factor.total_degree();
  std::vector<Rational> cs(d + 1, Rational(0));
  for (int i = 0; i <= d; ++i) cs[i] = factor.coeff(i, d - i);
  UniPoly l(std::move(cs));
  InfinityReport rep;
  bool squarefree = true;
  const int my = d - l.degree();
  if (my > 0) {
    rep.points.push_back({Realness::Real, "(1:0)", my});
    if (my > 1) squarefree = false;
  }
  for (const auto& part : squarefree_decomposition(l)) {
    if (part.multiplicity > 1) squarefree = false;
    std::vector<RootBox> boxes = isolate_squarefree(part.factor);
    for (const auto& b : boxes) {
      std::string coord = b.exact_value ? to_string(*b.exact_value) : approx_string(b.approx());
      rep.points.push_back({Realness::Real, "(" + coord + ":1)", part.multiplicity});
    }
    int pairs = (part.factor.degree() - static_cast<int>(boxes.size())) / 2;
    for (int k = 0; k < pairs; ++k)
      rep.points.push_back({Realness::NonReal, "non-real root pair of " + part.factor.to_string("s"),
                            part.multiplicity});
  }
  std::sort(rep.points.begin(), rep.points.end(), [](const InfinityPoint& a, const InfinityPoint& b) {
    if (a.realness != b.realness) return a.realness == Realness::Real;
    return a.direction < b.direction;
  });
  rep.bounded_ring_trivial = true;
  for (const auto& p : rep.points)
    if (p.realness != Realness::Real) rep.bounded_ring_trivial = false;
  rep.best_effort = !squarefree && d >= 3;
  return rep;
}

ConicInfo classify_conic(const BiPoly& F) {
  if (F.total_degree() != 2) fail(ErrorCode::InvalidInput, "not a conic");
  Rational a = F.coeff(2, 0), b = F.coeff(1, 1), c = F.coeff(0, 2);
  Rational d = F.coeff(1, 0), e = F.coeff(0, 1), f = F.coeff(0, 0);
  Rational m[3][3] = {{a, b / 2, d / 2}, {b / 2, c, e / 2}, {d / 2, e / 2, f}};
  Rational tr = m[0][0] + m[1][1] + m[2][2];
  Rational minors = (m[0][0] * m[1][1] - m[0][1] * m[0][1]) + (m[0][0] * m[2][2] - m[0][2] * m[0][2]) +
                    (m[1][1] * m[2][2] - m[1][2] * m[1][2]);
  Rational det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                 m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                 m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  // Characteristic polynomial s^3 - tr s^2 + minors s - det; real-rooted, so Descartes is exact.
  auto changes = [](std::vector<Rational> v) {
    int n = 0, prev = 0;
    for (const auto& x : v) {
      int s = sgn(x);
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++n;
      prev = s;
    }
    return n;
  };
  int pos = changes({Rational(1), -tr, minors, -det});
  int neg = changes({Rational(-1), -tr, -minors, -det});
  int rank = pos + neg;
  ConicInfo info{ConicKind::Ellipse, rank, std::nullopt};
  Rational disc = b * b - 4 * a * c;
  if (rank == 3) {
    if (pos == 3 || neg == 3) {
      info.kind = ConicKind::EmptyEllipse;
    } else if (sgn(disc) < 0) {
      info.kind = ConicKind::Ellipse;
    } else if (sgn(disc) == 0) {
      info.kind = ConicKind::Parabola;
    } else {
      info.kind = ConicKind::Hyperbola;
    }
    return info;
  }
  if (rank == 2) {
    if (pos != 0 && neg != 0)
      fail(ErrorCode::InvalidInput, "conic " + F.to_string() + " is reducible over the reals");
    Rational delta = a * c - b * b / 4;
    if (sgn(delta) != 0) {
      // Solve [[a, b/2], [b/2, c]] (x, y) = (-d/2, -e/2).
      Rational x = (-d / 2 * c + e / 2 * b / 2) / delta;
      Rational y = (-e / 2 * a + d / 2 * b / 2) / delta;
      info.kind = ConicKind::ConjugateLinesWithRealPoint;
      info.singular_point = std::make_pair(x, y);
    } else {
      info.kind = ConicKind::ConjugateParallelLines;
    }
    return info;
  }
  fail(ErrorCode::NotSquarefree, "conic " + F.to_string() + " is a double line");
}

namespace {

struct Mat2 {
  Rational p11, p12, p21, p22;
};

// Inverse of [[r11, r12], [r21, r22]].
Mat2 inverse2(const Rational& r11, const Rational& r12, const Rational& r21, const Rational& r22) {
  Rational det = r11 * r22 - r12 * r21;
  if (sgn(det) == 0) fail(ErrorCode::InvalidInput, "singular coordinate change");
  return {r22 / det, -r12 / det, -r21 / det, r11 / det};
}

Chart line_chart(const BiPoly& F) {
  Rational a = F.coeff(1, 0), b = F.coeff(0, 1), c = F.coeff(0, 0);
  Rational dx = -b, dy = a;
  if (sgn(dx) < 0 || (sgn(dx) == 0 && sgn(dy) < 0)) {
    dx = -dx;
    dy = -dy;
  }
  Rational x0 = 0, y0 = 0;
  if (sgn(b) != 0)
    y0 = -c / b;
  else
    x0 = -c / a;
  Chart ch;
  ch.kind = ChartKind::AffineLine;
  ch.x = Laurent(UniPoly{x0, dx});
  ch.y = Laurent(UniPoly{y0, dy});
  if (sgn(dx) != 0)
    ch.inverse = LinearForm{1 / dx, Rational(0), -x0 / dx};
  else
    ch.inverse = LinearForm{Rational(0), 1 / dy, -y0 / dy};
  return ch;
}

Chart parabola_chart(const BiPoly& F) {
  Rational a = F.coeff(2, 0), b = F.coeff(1, 1), c = F.coeff(0, 2);
  Rational D = F.coeff(1, 0), E = F.coeff(0, 1), f = F.coeff(0, 0);
  Rational alpha, beta, lambda;
  if (sgn(a) != 0) {
    alpha = 1;
    beta = b / (2 * a);
    lambda = a;
  } else {
    alpha = 0;
    beta = 1;
    lambda = c;
  }
  // (l, m) = A (x, y) with m = x when beta != 0, else m = y.
  Mat2 P = sgn(beta) != 0 ? inverse2(alpha, beta, Rational(1), Rational(0))
                          : inverse2(alpha, beta, Rational(0), Rational(1));
  Rational d1 = D * P.p11 + E * P.p21;
  Rational d2 = D * P.p12 + E * P.p22;
  if (sgn(d2) == 0) fail(ErrorCode::InvalidInput, "degenerate parabola");
  UniPoly t = UniPoly::var();
  UniPoly mu = (UniPoly{f, d1, lambda}) * Rational(-1 / d2);
  Chart ch;
  ch.kind = ChartKind::AffineLine;
  ch.x = Laurent(t * P.p11 + mu * P.p12);
  ch.y = Laurent(t * P.p21 + mu * P.p22);
  ch.inverse = LinearForm{alpha, beta, Rational(0)};
  return ch;
}

std::optional<Chart> hyperbola_chart(const BiPoly& F) {
  BiPoly Q = F.homogeneous_part(2);
  BinaryQuadraticSplit s = split_binary_quadratic(Q);
  if (s.factors.size() != 2) return std::nullopt;
  const BiPoly& l1 = s.factors[0];
  const BiPoly& l2 = s.factors[1];
  BiPoly prod = l1 * l2;
  Rational kappa;
  for (const auto& [e, v] : prod.terms()) {
    kappa = Q.coeff(e.first, e.second) / v;
    break;
  }
  Mat2 P = inverse2(l1.coeff(1, 0), l1.coeff(0, 1), l2.coeff(1, 0), l2.coeff(0, 1));
  Rational D = F.coeff(1, 0), E = F.coeff(0, 1), f = F.coeff(0, 0);
  Rational d1 = D * P.p11 + E * P.p21;
  Rational d2 = D * P.p12 + E * P.p22;
  Rational K = d1 * d2 / kappa - f;
  if (sgn(K) == 0) fail(ErrorCode::InvalidInput, "degenerate hyperbola");
  // u = t - d2/kappa, v = (K/kappa) t^-1 - d1/kappa
  Laurent u(UniPoly{-d2 / kappa, Rational(1)});
  Laurent v = Laurent(-1, UniPoly{K / kappa}) + Laurent::constant(-d1 / kappa);
  Chart ch;
  ch.kind = ChartKind::PuncturedLine;
  ch.x = u * P.p11 + v * P.p12;
  ch.y = u * P.p21 + v * P.p22;
  ch.inverse = LinearForm{l1.coeff(1, 0), l1.coeff(0, 1), d2 / kappa};
  ch.excluded.push_back(Rational(0));
  return ch;
}

std::optional<Chart> circle_chart(const BiPoly& F) {
  Rational a = F.coeff(2, 0), b = F.coeff(1, 1), c = F.coeff(0, 2);
  if (a != c || sgn(b) != 0) return std::nullopt;
  Rational cx = -F.coeff(1, 0) / (2 * a), cy = -F.coeff(0, 1) / (2 * a);
  Rational r2 = cx * cx + cy * cy - F.coeff(0, 0) / a;
  auto r = rational_sqrt(r2);
  if (!r || sgn(*r) <= 0) return std::nullopt;
  Chart ch;
  ch.kind = ChartKind::UnitCircle;
  ch.cx = cx;
  ch.cy = cy;
  ch.r = *r;
  ch.param = "X";
  return ch;
}

std::optional<ChartPoint> chart_point(const Chart& ch, const std::pair<Rational, Rational>& p) {
  if (ch.kind == ChartKind::UnitCircle)
    return ChartPoint(std::make_pair((p.first - ch.cx) / ch.r, (p.second - ch.cy) / ch.r));
  if (ch.inverse) return ChartPoint((*ch.inverse)(p.first, p.second));
  return std::nullopt;
}

}  // namespace

Chart make_chart(const BiPoly& F) {
  int d = F.total_degree();
  if (d == 1) return line_chart(F);
  if (d != 2) return {};
  ConicInfo info = classify_conic(F);
  switch (info.kind) {
    case ConicKind::Parabola: return parabola_chart(F);
    case ConicKind::Hyperbola: return hyperbola_chart(F).value_or(Chart{});
    case ConicKind::Ellipse: return circle_chart(F).value_or(Chart{});
    default: return {};
  }
}

std::vector<PointRecord> pairwise_intersections(const PlaneCurveInput& input) {
  const auto& fs = input.factors;
  std::vector<PointRecord> out;
  for (size_t i = 0; i < fs.size(); ++i) {
    for (size_t j = i + 1; j < fs.size(); ++j) {
      PairIntersection r = intersect(fs[i], fs[j]);
      std::vector<PointRecord> local;
      for (const auto& p : r.real_points) {
        std::vector<int> inc;
        for (size_t k = 0; k < fs.size(); ++k)
          if (k == i || k == j || vanishes_at(fs[k], p)) inc.push_back(static_cast<int>(k));
        // Keep the point only once: from the pair of its two smallest incident factors.
        if (inc[0] != static_cast<int>(i) || inc[1] != static_cast<int>(j)) continue;
        PointRecord rec;
        rec.realness = Realness::Real;
        rec.point = p;
        rec.incident = inc;
        rec.coordinates = p.describe();
        local.push_back(std::move(rec));
      }
      std::sort(local.begin(), local.end(), [](const PointRecord& a, const PointRecord& b) {
        auto pa = a.point->approx(), pb = b.point->approx();
        return pa < pb;
      });
      for (auto& rec : local) out.push_back(std::move(rec));
      for (const auto& n : r.nonreal) {
        PointRecord rec;
        rec.realness = Realness::NonReal;
        rec.symbolic = n;
        rec.incident = {static_cast<int>(i), static_cast<int>(j)};
        rec.coordinates = n.description;
        out.push_back(std::move(rec));
      }
    }
  }
  return out;
}

CurveConfiguration build_configuration(const PlaneCurveInput& input) {
  const auto& fs = input.factors;
  if (fs.empty()) fail(ErrorCode::InvalidInput, "no factors given");
  CurveConfiguration config;
  for (size_t i = 0; i < fs.size(); ++i) {
    const BiPoly& F = fs[i];
    if (F.is_constant()) fail(ErrorCode::ConstantFactor, "factor " + std::to_string(i) + " is constant");
    Component c;
    c.id = static_cast<int>(i);
    c.label = "C" + std::to_string(i);
    c.equation = F;
    const int d = F.total_degree();
    if (d == 1) {
      c.is_real = c.has_real_points = c.bounded_ring_trivial = c.rational_open_A1 = Tri::Yes;
      c.chart = make_chart(F);
      c.notes.push_back("line");
    } else if (d == 2) {
      ConicInfo info = classify_conic(F);
      c.notes.push_back(conic_kind_name(info.kind));
      switch (info.kind) {
        case ConicKind::Ellipse:
          c.is_real = c.has_real_points = Tri::Yes;
          c.bounded_ring_trivial = c.rational_open_A1 = Tri::No;
          break;
        case ConicKind::Parabola:
        case ConicKind::Hyperbola:
          c.is_real = c.has_real_points = c.bounded_ring_trivial = c.rational_open_A1 = Tri::Yes;
          break;
        case ConicKind::EmptyEllipse:
        case ConicKind::ConjugateParallelLines:
          c.is_real = c.has_real_points = c.bounded_ring_trivial = c.rational_open_A1 = Tri::No;
          break;
        case ConicKind::ConjugateLinesWithRealPoint: {
          c.is_real = c.bounded_ring_trivial = c.rational_open_A1 = Tri::No;
          c.has_real_points = Tri::Yes;
          const auto& sp = *info.singular_point;
          PointClassification pc = classify_polynomial_at(F, sp.first, sp.second);
          c.own_singularities.push_back({c.label + ".S0", "(" + to_string(sp.first) + ", " + to_string(sp.second) + ")",
                                         tri_from_bool(pc.kind != PointClass::NotOMPIT)});
          break;
        }
      }
      c.chart = make_chart(F);
    } else {
      FactorMetadata meta;
      if (auto it = input.metadata.find(c.id); it != input.metadata.end()) meta = it->second;
      auto tri_of = [](const std::optional<bool>& b) { return b ? tri_from_bool(*b) : Tri::Unknown; };
      c.is_real = tri_of(meta.is_real);
      c.has_real_points = meta.has_real_points ? tri_of(meta.has_real_points)
                                               : (c.is_real == Tri::Yes ? Tri::Yes : Tri::Unknown);
      c.rational_open_A1 = tri_of(meta.rational_open_A1);
      InfinityReport inf = points_at_infinity(F);
      if (meta.bounded_ring_trivial)
        c.bounded_ring_trivial = tri_of(meta.bounded_ring_trivial);
      else if (c.is_real == Tri::No)
        c.bounded_ring_trivial = Tri::No;
      else if (!inf.best_effort)
        c.bounded_ring_trivial = tri_from_bool(inf.bounded_ring_trivial);
      else
        c.bounded_ring_trivial = Tri::Unknown;
      if (inf.best_effort) c.notes.push_back("leading form not square-free: infinity report is best effort");
      if (!(meta.nonsingular && *meta.nonsingular)) {
        BiPoly Fy = F.partial(Axis::Y), Fx = F.partial(Axis::X);
        BiPoly G = Fy.is_zero() ? Fx : Fy;
        BiPoly H = Fy.is_zero() ? Fy : Fx;
        if (!G.is_constant()) {
          PairIntersection sing;
          try {
            sing = intersect(F, G);
          } catch (const Error& e) {
            if (e.code() == ErrorCode::CommonComponent)
              fail(ErrorCode::NotSquarefree, "factor " + F.to_string() + " is not square-free");
            throw;
          }
          int k = 0;
          for (const auto& p : sing.real_points) {
            if (!H.is_zero() && !vanishes_at(H, p)) continue;
            Tri ompit = Tri::Unknown;
            if (auto xy = p.exact_coordinates()) {
              PointClassification pc = classify_polynomial_at(F, xy->first, xy->second);
              ompit = tri_from_bool(pc.kind != PointClass::NotOMPIT);
            }
            c.own_singularities.push_back({c.label + ".S" + std::to_string(k++), p.describe(), ompit});
            if (c.has_real_points == Tri::Unknown) c.has_real_points = Tri::Yes;
          }
        }
      }
      c.notes.push_back("degree " + std::to_string(d) + ": attributes from metadata");
    }
    config.components.push_back(std::move(c));
  }

  std::vector<PointRecord> records = pairwise_intersections(input);
  int id = 0;
  for (const auto& rec : records) {
    IntersectionPoint p;
    p.id = id;
    p.label = "P" + std::to_string(id);
    ++id;
    p.realness = rec.realness;
    p.components = rec.incident;
    p.coordinates = rec.coordinates;
    if (rec.realness == Realness::Real) {
      for (int k : rec.incident) {
        Component& c = config.component(k);
        if (c.has_real_points == Tri::Unknown) c.has_real_points = Tri::Yes;
      }
      auto xy = rec.point->exact_coordinates();
      if (xy) {
        p.plane = *xy;
        for (int k : rec.incident)
          if (auto cp = chart_point(config.component(k).chart, *xy)) p.params.emplace(k, *cp);
      }
      // Three plane branches never have independent tangents.
      if (rec.incident.size() > 2) {
        p.ompit = Tri::No;
      } else if (xy) {
        PointClassification pc = classify_point(input, xy->first, xy->second);
        p.ompit = tri_from_bool(pc.kind == PointClass::OrdinaryDoublePoint);
      } else {
        p.ompit = transversal_at(fs[rec.incident[0]], fs[rec.incident[1]], *rec.point);
      }
    } else {
      p.ompit = Tri::Unknown;
    }
    config.points.push_back(std::move(p));
  }
  config.validate();
  return config;
}

Json point_records_to_json(const std::vector<PointRecord>& records) {
  Json arr = Json::array();
  for (const auto& r : records) {
    Json j;
    j["realness"] = realness_name(r.realness);
    j["coordinates"] = r.coordinates;
    j["incident_factors"] = r.incident;
    arr.push_back(j);
  }
  return arr;
}

Json infinity_report_to_json(const InfinityReport& r) {
  Json j;
  Json pts = Json::array();
  for (const auto& p : r.points) {
    Json e;
    e["realness"] = p.realness == Realness::Real ? "Real" : "NonReal";
    e["direction"] = p.direction;
    e["multiplicity"] = p.multiplicity;
    pts.push_back(e);
  }
  j["points"] = pts;
  j["bounded_ring_trivial"] = r.bounded_ring_trivial;
  j["best_effort"] = r.best_effort;
  return j;
}

}  // namespace curvesos
