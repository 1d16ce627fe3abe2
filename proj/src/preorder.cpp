#include "curvesos/preorder.hpp"

#include <algorithm>
#include <cstdio>
#include <queue>
#include <set>

#include "curvesos/config_graph.hpp"
#include "curvesos/decision.hpp"
#include "curvesos/error.hpp"
#include "curvesos/plane_frontend.hpp"

namespace curvesos {

double LinePoint::approx() const { return exact ? exact->get_d() : box.approx(); }

std::string LinePoint::to_string() const {
  if (exact) return curvesos::to_string(*exact);
  char buf[48];
  std::snprintf(buf, sizeof buf, "~%.12g", approx());
  return buf;
}

bool LinePiece::is_point() const {
  if (!lo || !hi) return false;
  if (lo->exact && hi->exact) return *lo->exact == *hi->exact;
  return !lo->exact && !hi->exact && lo->poly == hi->poly && lo->box.lo == hi->box.lo && lo->box.hi == hi->box.hi;
}

namespace {

// Sign of t - endpoint.
int compare(const Rational& t, const LinePoint& p) {
  if (p.exact) return sgn(t - *p.exact);
  RootBox b = p.box;
  for (;;) {
    if (t <= b.lo) return -1;
    if (t >= b.hi) return 1;
    if (sgn(p.poly(t)) == 0) return 0;
    bisect_once(p.poly, b);
    if (b.exact_value) return sgn(t - *b.exact_value);
  }
}

LinePoint root_point(const UniPoly& P, const RootBox& b) {
  LinePoint lp;
  lp.exact = b.exact_value;
  lp.poly = P;
  lp.box = b;
  return lp;
}

}  // namespace

bool LineSemialgebraicSet::contains(const Rational& t) const {
  for (const auto& p : pieces) {
    bool above = !p.lo || compare(t, *p.lo) >= 0;
    bool below = !p.hi || compare(t, *p.hi) <= 0;
    if (above && below) return true;
  }
  return false;
}

std::string LineSemialgebraicSet::to_string() const {
  if (pieces.empty()) return "{}";
  std::string s;
  for (size_t k = 0; k < pieces.size(); ++k) {
    if (k) s += " U ";
    const auto& p = pieces[k];
    if (p.is_point()) {
      s += "{" + p.lo->to_string() + "}";
      continue;
    }
    s += p.lo ? "[" + p.lo->to_string() : "(-inf";
    s += ", ";
    s += p.hi ? p.hi->to_string() + "]" : "+inf)";
  }
  return s;
}

LineSemialgebraicSet compute_line_set(const std::vector<UniPoly>& H) {
  std::vector<UniPoly> nz;
  for (const auto& h : H)
    if (!h.is_zero()) nz.push_back(h);
  LineSemialgebraicSet S;
  UniPoly prod = UniPoly::constant(1);
  for (const auto& h : nz) prod = prod * h;
  UniPoly P = prod.degree() > 0 ? squarefree_part(prod) : UniPoly::constant(1);
  std::vector<RootBox> boxes = P.degree() > 0 ? isolate_squarefree(P) : std::vector<RootBox>{};
  const int K = static_cast<int>(boxes.size());
  auto left = [&](int k) { return boxes[k].exact_value ? *boxes[k].exact_value : boxes[k].lo; };
  auto right = [&](int k) { return boxes[k].exact_value ? *boxes[k].exact_value : boxes[k].hi; };
  auto ok_at = [&](const Rational& t) {
    return std::all_of(nz.begin(), nz.end(), [&](const UniPoly& h) { return sgn(h(t)) >= 0; });
  };
  // Segments I_0, r_0, I_1, ..., r_{K-1}, I_K.
  std::vector<bool> in_interval(K + 1), in_point(K);
  for (int k = 0; k <= K; ++k) {
    Rational s;
    if (K == 0) s = 0;
    else if (k == 0) s = left(0) - 1;
    else if (k == K) s = right(K - 1) + 1;
    else s = (right(k - 1) + left(k)) / 2;
    in_interval[k] = ok_at(s);
  }
  for (int k = 0; k < K; ++k) {
    bool ok = true;
    for (const auto& h : nz) {
      int sg = boxes[k].exact_value ? sgn(h(*boxes[k].exact_value)) : sign_at_root(h, P, boxes[k]);
      if (sg < 0) ok = false;
    }
    in_point[k] = ok;
  }
  // Walk the segments 0..2K (even = interval k/2, odd = root (k-1)/2).
  const int nseg = 2 * K + 1;
  auto seg_in = [&](int s) { return s % 2 == 0 ? in_interval[s / 2] : in_point[s / 2]; };
  int s = 0;
  while (s < nseg) {
    if (!seg_in(s)) {
      ++s;
      continue;
    }
    int e = s;
    while (e + 1 < nseg && seg_in(e + 1)) ++e;
    LinePiece piece;
    if (s % 2 == 1) piece.lo = root_point(P, boxes[s / 2]);
    else if (s > 0) piece.lo = root_point(P, boxes[s / 2 - 1]);  // closedness: the root to the left is in S
    if (e % 2 == 1) piece.hi = root_point(P, boxes[e / 2]);
    else if (e < nseg - 1) piece.hi = root_point(P, boxes[e / 2]);
    S.pieces.push_back(std::move(piece));
    s = e + 1;
  }
  return S;
}

const char* saturation_answer_name(SaturationVerdict::Answer a) {
  switch (a) {
    case SaturationVerdict::Answer::Saturated: return "Saturated";
    case SaturationVerdict::Answer::NotSaturated: return "NotSaturated";
    case SaturationVerdict::Answer::ConditionsNotMet: return "ConditionsNotMet";
    case SaturationVerdict::Answer::Unknown: return "Unknown";
  }
  return "?";
}

Json saturation_to_json(const SaturationVerdict& v) {
  Json j;
  j["answer"] = saturation_answer_name(v.answer);
  j["missing_generators"] = v.missing_generators;
  j["failed_conditions"] = v.failed_conditions;
  j["unknown_conditions"] = v.unknown_conditions;
  j["notes"] = v.notes;
  return j;
}

namespace {

bool positive_multiple(const UniPoly& h, const UniPoly& g) {
  if (h.is_zero() || h.degree() != g.degree()) return false;
  if (sgn(h.leading()) * sgn(g.leading()) <= 0) return false;
  return h * g.leading() == g * h.leading();
}

}  // namespace

SaturationVerdict km_saturation(const std::vector<UniPoly>& H) {
  LineSemialgebraicSet S = compute_line_set(H);
  if (S.compact()) fail(ErrorCode::CompactSet, "S = " + S.to_string() + " is compact");
  SaturationVerdict v;
  v.notes.push_back("S = " + S.to_string());
  std::vector<UniPoly> natural;
  bool unknown = false;
  const UniPoly t = UniPoly::var();
  if (!S.unbounded_left()) {
    const auto& a = *S.pieces.front().lo;
    if (a.exact) natural.push_back(t - UniPoly::constant(*a.exact));
    else unknown = true;
  }
  if (!S.unbounded_right()) {
    const auto& b = *S.pieces.back().hi;
    if (b.exact) natural.push_back(UniPoly::constant(*b.exact) - t);
    else unknown = true;
  }
  for (size_t k = 0; k + 1 < S.pieces.size(); ++k) {
    const auto& a = *S.pieces[k].hi;
    const auto& b = *S.pieces[k + 1].lo;
    if (a.exact && b.exact)
      natural.push_back((t - UniPoly::constant(*a.exact)) * (t - UniPoly::constant(*b.exact)));
    else
      unknown = true;
  }
  for (const auto& g : natural) {
    bool present = std::any_of(H.begin(), H.end(), [&](const UniPoly& h) { return positive_multiple(h, g); });
    if (!present) v.missing_generators.push_back(g.to_string("t"));
  }
  if (!v.missing_generators.empty()) {
    v.answer = SaturationVerdict::Answer::NotSaturated;
  } else if (unknown) {
    v.answer = SaturationVerdict::Answer::Unknown;
    v.notes.push_back("irrational endpoint: natural generator not representable over the rationals");
  } else {
    v.answer = SaturationVerdict::Answer::Saturated;
  }
  return v;
}

namespace {

void require_tree(const CurveConfiguration& config) {
  std::vector<int> ids = config.component_ids();
  if (connectivity_report(config).size() > 1) fail(ErrorCode::NotConnected, "configuration is not connected");
  if (!is_forest(config, ids).forest) fail(ErrorCode::NotATree, "configuration graph has a cycle");
}

bool cf_is_constant(const ComponentFunction& f) {
  if (const auto* l = std::get_if<Laurent>(&f)) return l->is_zero() || (l->low() == 0 && l->body().degree() == 0);
  const auto& c = std::get<CircleFn>(f);
  return c.a.degree() <= 0 && c.b.is_zero();
}

Rational cf_constant_value(const ComponentFunction& f) {
  if (const auto* l = std::get_if<Laurent>(&f)) return l->is_zero() ? Rational(0) : l->body().coeff(0);
  return std::get<CircleFn>(f).a.coeff(0);
}

std::optional<Rational> cf_first_coeff(const ComponentFunction& f) {
  if (const auto* l = std::get_if<Laurent>(&f)) {
    if (l->is_zero()) return std::nullopt;
    return l->body().coeff(0);
  }
  const auto& c = std::get<CircleFn>(f);
  for (const auto& x : c.a.coeffs())
    if (sgn(x) != 0) return x;
  for (const auto& x : c.b.coeffs())
    if (sgn(x) != 0) return x;
  return std::nullopt;
}

// a = lambda * b for some lambda > 0.
bool element_positive_multiple(const Element& a, const Element& b) {
  std::optional<Rational> lambda;
  for (const auto& [id, fa] : a) {
    auto it = b.find(id);
    if (it == b.end()) return false;
    auto ca = cf_first_coeff(fa), cb = cf_first_coeff(it->second);
    if (!ca && !cb) continue;
    if (!ca || !cb) return false;
    Rational l = *ca / *cb;
    if (sgn(l) <= 0) return false;
    if (lambda && *lambda != l) return false;
    lambda = l;
    if (!cf_equal(fa, cf_scale(it->second, l))) return false;
  }
  return lambda.has_value();
}

bool element_is_nonneg_constant(const Element& e) {
  std::optional<Rational> v;
  for (const auto& [id, f] : e) {
    if (!cf_is_constant(f)) return false;
    Rational c = cf_constant_value(f);
    if (v && *v != c) return false;
    v = c;
  }
  return !v || sgn(*v) >= 0;
}

// Polynomial with the sign of f on the line (or punctured line).
UniPoly sign_representative(const Laurent& f) {
  if (f.is_zero()) return UniPoly();
  if (f.low() >= 0) return f.to_poly();
  int odd = ((f.low() % 2) + 2) % 2;
  return odd ? f.body() * UniPoly::var() : f.body();
}

std::vector<UniPoly> restrictions(const std::vector<Element>& H, int c) {
  std::vector<UniPoly> out;
  for (const auto& h : H) {
    auto it = h.find(c);
    if (it == h.end()) continue;
    const auto* l = std::get_if<Laurent>(&it->second);
    if (!l) fail(ErrorCode::UnsupportedComponentKind, "generator restriction is not a line function");
    if (!l->is_zero()) out.push_back(sign_representative(*l));
  }
  return out;
}

}  // namespace

Element localize_component(const CurveConfiguration& config, const Element& f, int i) {
  require_tree(config);
  if (!f.count(i)) fail(ErrorCode::InvalidInput, "element has no entry for component " + std::to_string(i));
  Element out;
  out[i] = f.at(i);
  std::queue<int> q;
  q.push(i);
  while (!q.empty()) {
    int c = q.front();
    q.pop();
    for (const auto& p : config.points) {
      if (!p.touches(c)) continue;
      for (int d : p.components) {
        if (d == c || out.count(d)) continue;
        auto it = p.params.find(c);
        if (it == p.params.end())
          fail(ErrorCode::IrrationalPoint, "point " + p.label + " has no exact chart parameter");
        Rational v = evaluate(out.at(c), it->second);
        out[d] = cf_constant_like(evaluate_zero_function(config.component(d)), v);
        q.push(d);
      }
    }
  }
  for (int id : config.component_ids())
    if (!out.count(id)) fail(ErrorCode::NotConnected, "component " + std::to_string(id) + " not reached");
  return out;
}

SaturationVerdict prop45_check(const CurveConfiguration& config, const std::vector<Element>& H) {
  SaturationVerdict v;
  if (connectivity_report(config).size() > 1) fail(ErrorCode::NotConnected, "configuration is not connected");
  std::set<std::string> failed, unknown;

  // (1) induced preordering saturated on each component.
  for (const auto& c : config.components) {
    if (c.chart.kind != ChartKind::AffineLine) {
      unknown.insert("1");
      v.notes.push_back("condition 1 not decidable on " + c.label + " (not an affine line)");
      continue;
    }
    std::vector<UniPoly> r = restrictions(H, c.id);
    if (r.empty()) continue;
    try {
      SaturationVerdict k = km_saturation(r);
      if (k.answer == SaturationVerdict::Answer::NotSaturated) {
        failed.insert("1");
        for (const auto& m : k.missing_generators) v.notes.push_back(c.label + " misses natural generator " + m);
      } else if (k.answer != SaturationVerdict::Answer::Saturated) {
        unknown.insert("1");
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CompactSet) throw;
      unknown.insert("1");
      v.notes.push_back("condition 1 on " + c.label + ": compact set, outside the line criterion");
    }
  }

  // (2) intersection points real, ordinary, and inside S.
  for (const auto& p : config.points) {
    if (p.realness == Realness::NonReal || p.ompit == Tri::No) {
      failed.insert("2");
      v.notes.push_back("point " + p.label + " is not a real ordinary point");
      continue;
    }
    if (p.realness == Realness::Unknown || p.ompit == Tri::Unknown) unknown.insert("2");
    int comp = -1;
    for (int c : p.components)
      if (p.params.count(c)) {
        comp = c;
        break;
      }
    if (comp < 0) {
      unknown.insert("2");
      v.notes.push_back("membership of " + p.label + " in S undecided (no exact coordinates)");
      continue;
    }
    for (const auto& h : H) {
      if (!h.count(comp)) continue;
      if (sgn(evaluate(h.at(comp), p.params.at(comp))) < 0) {
        failed.insert("2");
        v.notes.push_back("point " + p.label + " is not contained in S");
        break;
      }
    }
  }

  // (3) tree.
  if (!is_forest(config, config.component_ids()).forest) failed.insert("3");

  // (4) closure under localization, evaluated once (1)-(3) hold.
  if (failed.empty() && unknown.empty()) {
    for (size_t k = 0; k < H.size(); ++k) {
      for (int i : config.component_ids()) {
        Element hi = localize_component(config, H[k], i);
        if (element_is_nonneg_constant(hi)) continue;
        bool found = std::any_of(H.begin(), H.end(), [&](const Element& g) { return element_positive_multiple(hi, g); });
        if (!found) {
          failed.insert("4");
          v.notes.push_back("localization of generator " + std::to_string(k) + " at " + config.component(i).label +
                            " is not in H");
        }
      }
    }
  } else {
    v.notes.push_back("condition 4 not evaluated: conditions 1-3 do not all hold");
  }

  v.failed_conditions.assign(failed.begin(), failed.end());
  v.unknown_conditions.assign(unknown.begin(), unknown.end());
  if (!failed.empty()) v.answer = SaturationVerdict::Answer::ConditionsNotMet;
  else if (!unknown.empty()) v.answer = SaturationVerdict::Answer::Unknown;
  else v.answer = SaturationVerdict::Answer::Saturated;
  return v;
}

Json smp_to_json(const SmpVerdict& v) {
  Json j;
  j["answer"] = tri_name(v.answer);
  j["c_prime"] = v.c_prime;
  j["notes"] = v.notes;
  return j;
}

namespace {

// Valuation obstruction: a natural generator g of S on C_i vanishes to order one at a
// point P shared with C_j, every generator is nonzero on C_j and S meets C_j in an
// infinite set. Then every sum-of-squares coefficient in a representation of the
// localized g vanishes on C_j, hence to order two at P on C_i: impossible.
std::optional<std::string> valuation_obstruction(const CurveConfiguration& config, const std::vector<Element>& H) {
  const UniPoly t = UniPoly::var();
  for (const auto& ci : config.components) {
    if (ci.chart.kind != ChartKind::AffineLine) continue;
    LineSemialgebraicSet S = compute_line_set(restrictions(H, ci.id));
    std::vector<std::pair<Rational, UniPoly>> ends;  // endpoint and its natural generator
    if (!S.empty() && !S.unbounded_left() && S.pieces.front().lo->exact) {
      Rational a = *S.pieces.front().lo->exact;
      ends.emplace_back(a, t - UniPoly::constant(a));
    }
    if (!S.empty() && !S.unbounded_right() && S.pieces.back().hi->exact) {
      Rational b = *S.pieces.back().hi->exact;
      ends.emplace_back(b, UniPoly::constant(b) - t);
    }
    for (size_t k = 0; k + 1 < S.pieces.size(); ++k) {
      const auto& a = S.pieces[k].hi->exact;
      const auto& b = S.pieces[k + 1].lo->exact;
      if (!a || !b) continue;
      UniPoly g = (t - UniPoly::constant(*a)) * (t - UniPoly::constant(*b));
      ends.emplace_back(*a, g);
      ends.emplace_back(*b, g);
    }
    for (const auto& [a, g] : ends) {
      bool others_ok = true;
      for (const auto& q : config.points) {
        if (!q.touches(ci.id) || !q.params.count(ci.id)) continue;
        const auto* tq = std::get_if<Rational>(&q.params.at(ci.id));
        if (tq && *tq != a && sgn(g(*tq)) < 0) others_ok = false;
      }
      if (!others_ok) continue;
      for (const auto& p : config.points) {
        if (!p.touches(ci.id) || !p.params.count(ci.id)) continue;
        const auto* tp = std::get_if<Rational>(&p.params.at(ci.id));
        if (!tp || *tp != a) continue;
        for (int j : p.components) {
          if (j == ci.id) continue;
          const Component& cj = config.component(j);
          if (!cj.chart.is_line_type()) continue;
          bool all_nonzero = std::all_of(H.begin(), H.end(), [&](const Element& h) {
            return h.count(j) && !cf_is_zero(h.at(j));
          });
          if (!all_nonzero || H.empty()) continue;
          LineSemialgebraicSet Sj = compute_line_set(restrictions(H, j));
          bool infinite = std::any_of(Sj.pieces.begin(), Sj.pieces.end(), [](const LinePiece& lp) { return !lp.is_point(); });
          if (!infinite) continue;
          return "natural generator " + g.to_string(ci.chart.param) + " on " + ci.label +
                 " localized is psd on S but not in the preordering (order at " + p.label + " on " + ci.label +
                 " is one; representations vanish to order two since every generator is nonzero on " + cj.label + ")";
        }
      }
    }
  }
  return std::nullopt;
}

Tri piece_saturated(const CurveConfiguration& piece, const std::vector<Element>& H, std::vector<std::string>& notes) {
  bool all_const = std::all_of(H.begin(), H.end(), [](const Element& h) {
    return std::all_of(h.begin(), h.end(), [](const auto& kv) { return cf_is_constant(kv.second); });
  });
  if (all_const) {
    Verdict d = decide_psd_eq_sos(piece);
    notes.push_back("generators are constants on this piece: saturation equals psd=sos, verdict " +
                    std::string(tri_name(d.answer)));
    return d.answer;
  }
  if (piece.components.size() == 1 && piece.components[0].chart.kind == ChartKind::AffineLine) {
    SaturationVerdict k = km_saturation(restrictions(H, piece.components[0].id));
    for (const auto& m : k.missing_generators) notes.push_back("missing natural generator " + m);
    if (k.answer == SaturationVerdict::Answer::Saturated) return Tri::Yes;
    if (k.answer == SaturationVerdict::Answer::NotSaturated) return Tri::No;
    return Tri::Unknown;
  }
  bool all_lines = std::all_of(piece.components.begin(), piece.components.end(),
                               [](const Component& c) { return c.chart.kind == ChartKind::AffineLine; });
  if (!all_lines) {
    notes.push_back("non-constant generators on a piece that is not a union of affine lines");
    return Tri::Unknown;
  }
  SaturationVerdict s;
  try {
    s = prop45_check(piece, H);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotATree && e.code() != ErrorCode::NotConnected) throw;
    notes.push_back(std::string("tree criterion not applicable: ") + e.what());
  }
  if (s.answer == SaturationVerdict::Answer::Saturated) {
    notes.push_back("tree criterion: saturated");
    return Tri::Yes;
  }
  if (auto why = valuation_obstruction(piece, H)) {
    notes.push_back(*why);
    return Tri::No;
  }
  notes.push_back("saturation undecided on this piece");
  return Tri::Unknown;
}

}  // namespace

SmpVerdict smp_curve(const CurveConfiguration& config, const std::vector<Element>& H) {
  SmpVerdict v;
  for (const auto& c : config.components) {
    if (c.chart.kind == ChartKind::UnitCircle || c.bounded_ring_trivial == Tri::No) continue;
    if (!c.chart.is_line_type())
      fail(ErrorCode::UnsupportedComponentKind, "component " + c.label + " is neither line-type nor compact");
    LineSemialgebraicSet S = compute_line_set(restrictions(H, c.id));
    bool unbounded = !S.compact();
    if (!unbounded && c.chart.kind == ChartKind::PuncturedLine) {
      for (const auto& p : S.pieces) {
        bool lo_ok = !p.lo || compare(Rational(0), *p.lo) >= 0;
        bool hi_ok = !p.hi || compare(Rational(0), *p.hi) <= 0;
        if (lo_ok && hi_ok && !p.is_point()) unbounded = true;
      }
    }
    v.notes.push_back(c.label + ": K meets it in " + S.to_string() + (unbounded ? " (unbounded)" : " (bounded)"));
    if (unbounded) v.c_prime.push_back(c.id);
  }
  if (v.c_prime.empty()) {
    v.answer = Tri::Yes;
    v.notes.push_back("C' is empty: K is compact, moment property holds");
    return v;
  }
  CurveConfiguration sub = config.induced(v.c_prime);
  std::vector<Element> HR;
  for (const auto& h : H) {
    Element r;
    for (int id : v.c_prime)
      if (h.count(id)) r[id] = h.at(id);
    HR.push_back(std::move(r));
  }
  bool any_unknown = false, any_no = false;
  for (const auto& piece : connectivity_report(sub)) {
    CurveConfiguration pc = sub.induced(piece.components);
    std::vector<Element> HP;
    for (const auto& h : HR) {
      Element r;
      bool nonzero = false;
      for (int id : piece.components)
        if (h.count(id)) {
          r[id] = h.at(id);
          nonzero = nonzero || !cf_is_zero(h.at(id));
        }
      if (nonzero) HP.push_back(std::move(r));
    }
    Tri t = piece_saturated(pc, HP, v.notes);
    any_no = any_no || t == Tri::No;
    any_unknown = any_unknown || t == Tri::Unknown;
  }
  v.answer = any_no ? Tri::No : (any_unknown ? Tri::Unknown : Tri::Yes);
  return v;
}

std::vector<BiPoly> factor_plane_curve(const BiPoly& F) {
  if (F.is_constant()) fail(ErrorCode::FibreNotCurve, "fibre polynomial is constant");
  std::vector<BiPoly> out;
  BiPoly rest = F;
  for (Axis a : {Axis::Y, Axis::X}) {
    // Content with respect to `a`: gcd of the coefficients, a polynomial in the other variable.
    Axis other = a == Axis::Y ? Axis::X : Axis::Y;
    std::vector<UniPoly> cs = rest.coeffs_in(a);
    UniPoly g;
    for (const auto& c : cs) g = gcd(g, c);
    if (g.degree() <= 0) continue;
    BiPoly q;
    for (size_t k = 0; k < cs.size(); ++k) {
      UniPoly ck = exact_div(cs[k], g);
      BiPoly term = BiPoly::from_uni(ck, other);
      BiPoly var_pow = a == Axis::Y ? BiPoly::monomial(Rational(1), 0, static_cast<int>(k))
                                    : BiPoly::monomial(Rational(1), static_cast<int>(k), 0);
      q += term * var_pow;
    }
    rest = q;
    UniPoly gr = g;
    for (const Rational& r : rational_roots(g)) {
      UniPoly lin{-r, Rational(1)};
      while (true) {
        DivMod dm = divmod(gr, lin);
        if (!dm.rem.is_zero()) break;
        out.push_back(BiPoly::from_uni(lin, other));
        gr = dm.quot;
      }
    }
    if (gr.degree() > 0) out.push_back(BiPoly::from_uni(gr.monic(), other));
  }
  if (!rest.is_constant()) {
    bool split = false;
    if (rest.total_degree() == 2) {
      try {
        classify_conic(rest);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::InvalidInput) throw;
        // Real line pair: split the quadratic part and match the linear terms.
        BinaryQuadraticSplit s = split_binary_quadratic(rest.homogeneous_part(2));
        Rational D = rest.coeff(1, 0), E = rest.coeff(0, 1), f0 = rest.coeff(0, 0);
        if (s.kind == BinaryQuadraticSplit::Kind::TwoDistinctRealFactors && s.factors.size() == 2) {
          const BiPoly &l1 = s.factors[0], &l2 = s.factors[1];
          Rational kappa;
          BiPoly prod = l1 * l2;
          for (const auto& [ex, c] : prod.terms()) {
            kappa = rest.coeff(ex.first, ex.second) / c;
            break;
          }
          // kappa (c2 l1 + c1 l2) = D x + E y
          Rational a1 = l1.coeff(1, 0), b1 = l1.coeff(0, 1), a2 = l2.coeff(1, 0), b2 = l2.coeff(0, 1);
          Rational det = a1 * b2 - a2 * b1;
          Rational c2 = (D / kappa * b2 - E / kappa * a2) / det;
          Rational c1 = (E / kappa * a1 - D / kappa * b1) / det;
          if (kappa * c1 * c2 == f0) {
            out.push_back(l1 + BiPoly::constant(c1));
            out.push_back(l2 + BiPoly::constant(c2));
            split = true;
          }
        }
      }
    }
    if (!split) out.push_back(rest);
  }
  for (size_t i = 0; i < out.size(); ++i)
    for (size_t j = i + 1; j < out.size(); ++j) {
      // Repeated factor up to a scalar.
      const auto& [e, c] = *out[i].terms().rbegin();
      Rational cj = out[j].coeff(e.first, e.second);
      if (sgn(cj) != 0 && out[i] * cj == out[j] * c)
        fail(ErrorCode::FibreNotCurve, "fibre has the repeated factor " + out[i].to_string());
    }
  return out;
}

std::vector<FibreReport> fibre_analysis(const std::vector<BiPoly>& H, const BiPoly& phi,
                                        const std::vector<Rational>& samples) {
  std::vector<FibreReport> out;
  for (const auto& a : samples) {
    FibreReport r;
    r.sample = a;
    BiPoly F = phi - BiPoly::constant(a);
    PlaneCurveInput in;
    in.factors = factor_plane_curve(F);
    for (const auto& f : in.factors) r.factors.push_back(f.to_string());
    CurveConfiguration config = build_configuration(in);
    std::vector<Element> gens;
    for (const auto& h : H) {
      Element e;
      for (const auto& c : config.components) {
        if (!c.chart.has_embedding())
          fail(ErrorCode::FibreNotCurve, "fibre component " + c.label + " has no parametrization");
        e[c.id] = restrict_to_component(h, c);
      }
      r.restricted_generators.push_back(element_to_json(config, e));
      gens.push_back(std::move(e));
    }
    r.verdict = smp_curve(config, gens);
    out.push_back(std::move(r));
  }
  return out;
}

Json fibre_reports_to_json(const std::vector<FibreReport>& reports) {
  Json arr = Json::array();
  for (const auto& r : reports) {
    Json j;
    j["sample"] = to_string(r.sample);
    j["factors"] = r.factors;
    j["restricted_generators"] = r.restricted_generators;
    j["smp"] = smp_to_json(r.verdict);
    arr.push_back(j);
  }
  return arr;
}

std::vector<Element> generators_from_json(const CurveConfiguration& config, const Json& j) {
  const Json& list = j.is_object() && j.contains("generators") ? j["generators"] : j;
  std::vector<Element> out;
  for (const auto& g : list) out.push_back(element_from_json(config, g));
  return out;
}

}  // namespace curvesos
