#include <algorithm>
#include <set>

#include "curvesos/certificates.hpp"
#include "curvesos/error.hpp"
#include "curvesos/poly_text.hpp"
#include "curvesos/preorder.hpp"
#include "curvesos/real_roots.hpp"
#include "curvesos/resultant.hpp"

namespace curvesos {

const char* witness_kind_name(WitnessKind k) {
  switch (k) {
    case WitnessKind::Cycle: return "CycleWitness";
    case WitnessKind::NonRealIntersection: return "NonRealIntersectionWitness";
    case WitnessKind::TriangleIntro: return "TriangleIntroWitness";
  }
  return "?";
}

namespace {

WitnessKind parse_kind(const std::string& s) {
  for (auto k : {WitnessKind::Cycle, WitnessKind::NonRealIntersection, WitnessKind::TriangleIntro})
    if (s == witness_kind_name(k)) return k;
  fail(ErrorCode::ParseError, "unknown witness kind " + s);
}

// Sorted parameters on component c of points shared with another component.
std::vector<Rational> attachment_params(const CurveConfiguration& config, int c) {
  std::set<Rational> nodes;
  for (const auto& p : config.points) {
    if (!p.touches(c)) continue;
    auto it = p.params.find(c);
    const Rational* t = it == p.params.end() ? nullptr : std::get_if<Rational>(&it->second);
    if (!t) fail(ErrorCode::IrrationalAttachment, "point " + p.label + " has no rational parameter on " +
                                                      config.component(c).label);
    nodes.insert(*t);
  }
  return {nodes.begin(), nodes.end()};
}

bool psd_function(const ComponentFunction& f) {
  if (const auto* c = std::get_if<CircleFn>(&f)) return circle_fn_psd(*c);
  const auto& l = std::get<Laurent>(f);
  if (l.is_zero()) return true;
  int odd = ((l.low() % 2) + 2) % 2;
  UniPoly rep = l.low() >= 0 ? l.to_poly() : (odd ? l.body() * UniPoly::var() : l.body());
  return !negative_point(rep).has_value();
}

void check_membership(const CurveConfiguration& config, const Element& e, ExactReport& r) {
  bool ok = true;
  std::string detail = "values agree at every point with exact coordinates";
  for (const auto& p : config.points) {
    std::optional<Rational> v0;
    for (int c : p.components) {
      auto it = p.params.find(c);
      if (it == p.params.end() || !e.count(c)) continue;
      Rational v = evaluate(e.at(c), it->second);
      if (v0 && *v0 != v) {
        ok = false;
        detail = "values disagree at " + p.label;
      }
      v0 = v;
    }
  }
  r.add("membership", ok, detail);
}

// Discriminant in y describing the real x-range of a conic; nullopt when every x is attained.
std::optional<UniPoly> x_range_polynomial(const BiPoly& F) {
  std::vector<UniPoly> cs = F.coeffs_in(Axis::Y);
  if (cs.size() == 3 && cs[2].degree() == 0) {
    return cs[1] * cs[1] - cs[0] * cs[2] * Rational(4);
  }
  if (cs.size() == 2) return std::nullopt;
  fail(ErrorCode::Unsupported, "x-range of " + F.to_string() + " is outside the conic cases handled");
}

// f >= 0 wherever D >= 0 (or everywhere when D is absent).
bool nonneg_on_range(const UniPoly& f, const std::optional<UniPoly>& D) {
  std::vector<UniPoly> H{-f};
  if (D) H.push_back(*D);
  LineSemialgebraicSet S = compute_line_set(H);
  for (const auto& p : S.pieces) {
    if (!p.is_point()) return false;
    const LinePoint& q = *p.lo;
    int s = q.exact ? sgn(f(*q.exact)) : sign_at_root(f, q.poly, q.box);
    if (s != 0) return false;
  }
  return true;
}

UniPoly x_minus(const Rational& a) { return UniPoly{-a, Rational(1)}; }

}  // namespace

UniPoly alternating_interpolant(const std::vector<Rational>& nodes) {
  UniPoly f;
  const size_t r = nodes.size();
  for (size_t j = 0; j < r; ++j) {
    UniPoly num = UniPoly::constant(1);
    Rational den = 1;
    for (size_t k = 0; k < r; ++k) {
      if (k == j) continue;
      num = num * x_minus(nodes[k]);
      den *= nodes[j] - nodes[k];
    }
    Rational sign = j % 2 == 0 ? Rational(-1) : Rational(1);
    f += num * Rational(sign / den);
  }
  return f;
}

ObstructionWitness cycle_witness(const CurveConfiguration& config, const GraphCycle& cycle) {
  int ci = -1;
  for (int c : cycle.components)
    if (config.component(c).chart.kind == ChartKind::AffineLine) {
      ci = c;
      break;
    }
  if (ci < 0) fail(ErrorCode::Unsupported, "no affine-line component on the cycle");
  ObstructionWitness w;
  w.component = ci;
  w.nodes = attachment_params(config, ci);
  if (w.nodes.size() < 2) fail(ErrorCode::PreconditionViolated, "fewer than two attachment points");
  w.f = alternating_interpolant(w.nodes);
  for (const auto& c : config.components) {
    if (c.id == ci) w.element[c.id] = Laurent(w.f * w.f);
    else w.element[c.id] = cf_constant_like(evaluate_zero_function(c), Rational(1));
  }
  bool triangle = config.components.size() == 3 && config.points.size() == 3 && cycle.components.size() == 3 &&
                  std::all_of(config.components.begin(), config.components.end(),
                              [](const Component& c) { return c.chart.kind == ChartKind::AffineLine; });
  w.kind = triangle ? WitnessKind::TriangleIntro : WitnessKind::Cycle;
  for (int c : cycle.components)
    if (c != ci) w.other_components.push_back(c);
  w.checkable_properties = {"sign_alternation", "degree", "element", "psd", "unit_values", "interlacing",
                            "membership"};
  return w;
}

ObstructionWitness nonreal_intersection_witness(const CurveConfiguration& config, int c1, int c2) {
  const Component& A = config.component(c1);
  const Component& B = config.component(c2);
  for (const Component* c : {&A, &B})
    if (!c->equation || c->equation->total_degree() != 2 || c->is_real != Tri::Yes)
      fail(ErrorCode::PreconditionViolated, c->label + " is not a real conic with a known equation");
  bool shares_nonreal = std::any_of(config.points.begin(), config.points.end(), [&](const IntersectionPoint& p) {
    return p.realness == Realness::NonReal && p.touches(c1) && p.touches(c2);
  });
  if (!shares_nonreal) fail(ErrorCode::PreconditionViolated, A.label + " and " + B.label + " share no non-real point");
  const BiPoly& F1 = *A.equation;
  const BiPoly& F2 = *B.equation;
  UniPoly R = resultant_eliminate(F1, F2, Axis::Y);
  std::optional<Rational> a;
  for (const Rational& r : rational_roots(R)) {
    UniPoly g1 = F1.eval_at(Axis::X, r), g2 = F2.eval_at(Axis::X, r);
    UniPoly g = gcd(g1, g2);
    if (g.degree() >= 1 && count_real_roots(g) == 0 && g1.degree() == 2 && count_real_roots(g1) == 0) {
      a = r;
      break;
    }
  }
  if (!a) fail(ErrorCode::NoRationalAbscissa, "no rational abscissa carries the non-real pair");
  std::optional<UniPoly> D = x_range_polynomial(F1);
  std::vector<Rational> qs;
  if (D) {
    LineSemialgebraicSet S = compute_line_set({*D});
    for (const auto& p : S.pieces)
      for (const auto* e : {&p.lo, &p.hi})
        if (*e && (*e)->exact) qs.push_back(*(*e)->exact);
  }
  std::sort(qs.begin(), qs.end(), [&](const Rational& x, const Rational& y) {
    return rational_abs(x - *a) < rational_abs(y - *a);
  });
  for (const Rational& s : {Rational(1), Rational(-1), Rational(1, 2), Rational(-1, 2), Rational(2), Rational(-2)})
    qs.push_back(*a + s);
  std::optional<UniPoly> f;
  for (const Rational& q : qs) {
    if (q == *a) continue;
    for (int s : {1, -1}) {
      UniPoly cand = x_minus(*a) * x_minus(q) * Rational(s);
      if (nonneg_on_range(cand, D)) {
        UniPoly prim = cand.primitive_integer();
        if (sgn(prim.leading()) != sgn(cand.leading())) prim = -prim;
        f = prim;
        break;
      }
    }
    if (f) break;
  }
  if (!f) fail(ErrorCode::NoLinearMultiplier, "no linear multiplier makes (x - a) m psd on " + A.label);
  ObstructionWitness w;
  w.kind = WitnessKind::NonRealIntersection;
  w.component = c1;
  w.other_components = {c2};
  w.f = *f;
  w.abscissa = a;
  for (const auto& c : config.components) {
    if (c.id == c1) w.element[c.id] = restrict_to_component(BiPoly::from_uni(*f, Axis::X), c);
    else w.element[c.id] = evaluate_zero_function(c);
  }
  w.checkable_properties = {"psd_on_range", "vanishing_order_one", "multiplier_nonzero", "element", "membership"};
  return w;
}

ExactReport verify_witness(const CurveConfiguration& config, const ObstructionWitness& w) {
  ExactReport r;
  if (w.kind == WitnessKind::NonRealIntersection) {
    const Component& A = config.component(w.component);
    if (!A.equation || !w.abscissa) {
      r.add("setup", false, "witness lacks the component equation or the abscissa");
      return r;
    }
    const Rational a = *w.abscissa;
    std::optional<UniPoly> D = x_range_polynomial(*A.equation);
    r.add("psd_on_range", nonneg_on_range(w.f, D), "f >= 0 on the real x-range of " + A.label);
    DivMod dm = divmod(w.f, x_minus(a));
    UniPoly fibre = A.equation->eval_at(Axis::X, a);
    bool order_one = dm.rem.is_zero() && fibre.degree() == 2 && count_real_roots(fibre) == 0;
    r.add("vanishing_order_one", order_one, "x - a divides f; the line x = a meets " + A.label + " only in the pair");
    r.add("multiplier_nonzero", dm.rem.is_zero() && sgn(dm.quot(a)) != 0, "m(a) = " + to_string(dm.quot(a)));
    bool elem = w.element.count(w.component) &&
                cf_equal(w.element.at(w.component), restrict_to_component(BiPoly::from_uni(w.f, Axis::X), A));
    for (const auto& c : config.components)
      if (c.id != w.component && (!w.element.count(c.id) || !cf_is_zero(w.element.at(c.id)))) elem = false;
    r.add("element", elem, "f on " + A.label + ", zero elsewhere");
    check_membership(config, w.element, r);
    return r;
  }
  const Component& C = config.component(w.component);
  std::vector<Rational> nodes;
  try {
    nodes = attachment_params(config, w.component);
  } catch (const Error& e) {
    r.add("nodes", false, e.what());
    return r;
  }
  r.add("nodes", nodes == w.nodes, "attachment parameters of " + C.label);
  const size_t n = w.nodes.size();
  bool alt = n >= 2;
  for (size_t j = 0; j < n; ++j)
    if (w.f(w.nodes[j]) != (j % 2 == 0 ? Rational(-1) : Rational(1))) alt = false;
  r.add("sign_alternation", alt, "f(P_j) = (-1)^j");
  r.add("degree", w.f.degree() == static_cast<int>(n) - 1, "deg f = " + std::to_string(w.f.degree()));
  bool elem = w.element.count(w.component) && cf_equal(w.element.at(w.component), Laurent(w.f * w.f));
  for (const auto& c : config.components) {
    if (c.id == w.component) continue;
    if (!w.element.count(c.id) ||
        !cf_equal(w.element.at(c.id), cf_constant_like(evaluate_zero_function(c), Rational(1))))
      elem = false;
  }
  r.add("element", elem, "f^2 on " + C.label + ", 1 elsewhere");
  bool psd = std::all_of(w.element.begin(), w.element.end(), [](const auto& kv) { return psd_function(kv.second); });
  r.add("psd", psd, "psd on every component");
  bool units = true;
  for (const auto& p : config.points)
    for (int c : p.components) {
      auto it = p.params.find(c);
      if (it != p.params.end() && w.element.count(c) && evaluate(w.element.at(c), it->second) != 1) units = false;
    }
  r.add("unit_values", units, "F = 1 at every intersection point");
  bool inter = n >= 2 && count_real_roots(w.f) == static_cast<int>(n) - 1;
  for (size_t j = 0; inter && j + 1 < n; ++j)
    if (sturm_count(w.f, w.nodes[j], w.nodes[j + 1]) != 1) inter = false;
  r.add("interlacing", inter, "one simple real zero of f in each gap between consecutive nodes");
  check_membership(config, w.element, r);
  return r;
}

Json witness_to_json(const CurveConfiguration& config, const ObstructionWitness& w) {
  Json j;
  j["kind"] = witness_kind_name(w.kind);
  j["component"] = w.component;
  j["component_label"] = config.component(w.component).label;
  j["other_components"] = w.other_components;
  bool nonreal = w.kind == WitnessKind::NonRealIntersection;
  j["f"] = w.f.to_string(nonreal ? "x" : config.component(w.component).chart.param);
  Json nodes = Json::array();
  for (const auto& t : w.nodes) nodes.push_back(to_string(t));
  j["nodes"] = nodes;
  j["abscissa"] = w.abscissa ? Json(to_string(*w.abscissa)) : Json();
  j["element"] = element_to_json(config, w.element);
  j["checkable_properties"] = w.checkable_properties;
  return j;
}

ObstructionWitness witness_from_json(const CurveConfiguration& config, const Json& j) {
  ObstructionWitness w;
  w.kind = parse_kind(j.at("kind").get<std::string>());
  w.component = j.at("component").get<int>();
  if (j.contains("other_components")) w.other_components = j["other_components"].get<std::vector<int>>();
  w.f = parse_unipoly(j.at("f").get<std::string>());
  if (j.contains("nodes"))
    for (const auto& t : j["nodes"]) w.nodes.push_back(parse_rational(t.get<std::string>()));
  if (j.contains("abscissa") && !j["abscissa"].is_null()) w.abscissa = parse_rational(j["abscissa"].get<std::string>());
  w.element = element_from_json(config, j.at("element"));
  if (j.contains("checkable_properties"))
    w.checkable_properties = j["checkable_properties"].get<std::vector<std::string>>();
  return w;
}

TriangleSearch triangle_bruteforce(const CurveConfiguration& config, const Element& F, int max_den,
                                   const Rational& bound) {
  if (config.components.size() != 3 || config.points.size() != 3)
    fail(ErrorCode::PreconditionViolated, "triangle search needs three lines meeting in three points");
  std::map<int, int> vertex;  // point id -> index
  for (const auto& p : config.points) {
    if (p.components.size() != 2) fail(ErrorCode::PreconditionViolated, "vertex on more than two lines");
    int k = static_cast<int>(vertex.size());
    vertex[p.id] = k;
  }
  struct Edge {
    int A, B;
    Rational tA, tB;
    UniPoly target;
  };
  std::vector<Edge> edges;
  for (const auto& c : config.components) {
    if (c.chart.kind != ChartKind::AffineLine) fail(ErrorCode::PreconditionViolated, c.label + " is not a line");
    std::vector<std::pair<int, Rational>> ends;
    for (const auto& p : config.points)
      if (p.touches(c.id)) {
        const auto* t = std::get_if<Rational>(&p.params.at(c.id));
        if (!t) fail(ErrorCode::IrrationalAttachment, "vertex without a rational parameter");
        ends.emplace_back(vertex[p.id], *t);
      }
    if (ends.size() != 2) fail(ErrorCode::PreconditionViolated, c.label + " does not carry two vertices");
    const auto& l = std::get<Laurent>(F.at(c.id));
    if (!l.is_polynomial()) fail(ErrorCode::PreconditionViolated, "target has a pole");
    edges.push_back({ends[0].first, ends[1].first, ends[0].second, ends[1].second, l.to_poly()});
  }
  std::set<Rational> g;
  for (int q = 1; q <= max_den; ++q) {
    Integer top = Integer(Rational(bound * q).get_num() / Rational(bound * q).get_den());
    for (Integer p = -top; p <= top; ++p) {
      Rational v(p, q);
      v.canonicalize();
      g.insert(v);
    }
  }
  std::vector<Rational> grid(g.begin(), g.end());
  TriangleSearch out;
  out.grid_size = static_cast<long long>(grid.size());
  // Edge identity sum g^2 = F for linear g with vertex Gram entries QAA, QAB, QBB; checked at
  // four parameters, which pins a quadratic (targets of degree > 2 admit nothing).
  auto edge_ok = [&](const Edge& e, const Rational& qa, const Rational& qab, const Rational& qb) {
    if (e.target.degree() > 2) return false;
    Rational h = e.tB - e.tA;
    for (const Rational& s : std::vector<Rational>{e.tA, e.tB, (e.tA + e.tB) / 2, e.tA + 2 * h}) {
      Rational la = (e.tB - s) / h, lb = (s - e.tA) / h;
      if (qa * la * la + 2 * qab * la * lb + qb * lb * lb != e.target(s)) return false;
    }
    return true;
  };
  // Diagonal entries: the value of F at the vertex, on every edge through it.
  std::vector<std::vector<Rational>> diag(3);
  for (int v = 0; v < 3; ++v)
    for (const auto& x : grid) {
      ++out.candidates_examined;
      bool ok = true;
      for (const auto& e : edges) {
        if (e.A == v && e.target(e.tA) != x) ok = false;
        if (e.B == v && e.target(e.tB) != x) ok = false;
      }
      if (ok) diag[v].push_back(x);
    }
  for (const auto& d0 : diag[0])
    for (const auto& d1 : diag[1])
      for (const auto& d2 : diag[2]) {
        RVector d{d0, d1, d2};
        std::vector<std::vector<Rational>> off(3);
        for (size_t k = 0; k < edges.size(); ++k)
          for (const auto& x : grid) {
            ++out.candidates_examined;
            if (edge_ok(edges[k], d[edges[k].A], x, d[edges[k].B])) off[k].push_back(x);
          }
        for (const auto& x0 : off[0])
          for (const auto& x1 : off[1])
            for (const auto& x2 : off[2]) {
              RMatrix Q = rmatrix(3, 3);
              for (int v = 0; v < 3; ++v) Q[v][v] = d[v];
              const Rational xs[3] = {x0, x1, x2};
              for (int k = 0; k < 3; ++k) Q[edges[k].A][edges[k].B] = Q[edges[k].B][edges[k].A] = xs[k];
              ++out.equation_survivors;
              out.forced_gram = Q;
              if (ldlt_psd(Q)) ++out.representations;
            }
      }
  if (out.equation_survivors != 1) out.forced_gram.reset();
  return out;
}

Json triangle_search_to_json(const TriangleSearch& s) {
  Json j;
  j["grid_size"] = s.grid_size;
  j["candidates_examined"] = s.candidates_examined;
  j["equation_survivors"] = s.equation_survivors;
  j["representations"] = s.representations;
  if (s.forced_gram) {
    Json m = Json::array();
    for (const auto& row : *s.forced_gram) {
      Json r = Json::array();
      for (const auto& x : row) r.push_back(to_string(x));
      m.push_back(r);
    }
    j["forced_gram"] = m;
  } else {
    j["forced_gram"] = nullptr;
  }
  return j;
}

}  // namespace curvesos
