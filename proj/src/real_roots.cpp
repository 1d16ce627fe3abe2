#include "curvesos/real_roots.hpp"

#include <algorithm>

#include "curvesos/error.hpp"

namespace curvesos {

double RootBox::approx() const {
  if (exact_value) return exact_value->get_d();
  Rational m = (lo + hi) / 2;
  return m.get_d();
}

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
  std::vector<UniPoly> seq;
  if (p.is_zero()) return seq;
  auto normalize = [](UniPoly q) {
    Rational a = rational_abs(q.leading());
    return q * Rational(1 / a);
  };
  seq.push_back(normalize(p));
  UniPoly d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(normalize(d));
  for (;;) {
    UniPoly r = divmod(seq[seq.size() - 2], seq.back()).rem;
    if (r.is_zero()) break;
    seq.push_back(normalize(-r));
  }
  return seq;
}

namespace {

int variations(const std::vector<UniPoly>& seq, const Rational& x) {
  int count = 0, prev = 0;
  for (const auto& q : seq) {
    int s = sgn(q(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

struct Isolator {
  const UniPoly& p;
  std::vector<UniPoly> seq;
  std::vector<RootBox> out;

  int count(const Rational& lo, const Rational& hi) const {
    return variations(seq, lo) - variations(seq, hi);
  }

  void run(Rational lo, Rational hi, int n) {
    if (n == 0) return;
    if (n == 1) {
      out.push_back({lo, hi, 1, std::nullopt});
      return;
    }
    Rational mid = (lo + hi) / 2;
    if (sgn(p(mid)) != 0) {
      int left = count(lo, mid);
      run(lo, mid, left);
      run(mid, hi, n - left);
      return;
    }
    out.push_back({mid, mid, 1, mid});
    Rational delta = (hi - lo) / 4;
    for (;;) {
      Rational a = mid - delta, b = mid + delta;
      if (sgn(p(a)) != 0 && sgn(p(b)) != 0 && count(a, b) == 1) {
        int left = count(lo, a);
        int right = count(b, hi);
        run(lo, a, left);
        run(b, hi, right);
        return;
      }
      delta /= 2;
    }
  }
};

// Promotes a box to an exact root when the root is rational.
void detect_rational(const UniPoly& p, RootBox& box) {
  if (box.exact_value) return;
  UniPoly prim = p.primitive_integer();
  Integer an = prim.leading().get_num();
  Rational width(1, an);
  width.canonicalize();
  refine(p, box, width / 2);
  if (box.exact_value) return;
  Integer k;
  Rational scaled = box.lo * Rational(an);
  mpz_cdiv_q(k.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  for (;; ++k) {
    Rational cand(k, an);
    cand.canonicalize();
    if (cand >= box.hi) break;
    if (cand > box.lo && sgn(p(cand)) == 0) {
      box.lo = box.hi = cand;
      box.exact_value = cand;
      return;
    }
  }
}

}  // namespace

int sturm_count(const UniPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "sturm_count of zero polynomial");
  if (!(lo < hi)) fail(ErrorCode::PreconditionViolated, "sturm_count requires lo < hi");
  if (sgn(p(lo)) == 0 || sgn(p(hi)) == 0)
    fail(ErrorCode::EndpointIsRoot, "interval endpoint is a root");
  if (!is_squarefree(p)) fail(ErrorCode::NotSquarefree, "sturm_count requires a square-free polynomial");
  std::vector<UniPoly> seq = sturm_sequence(p);
  return variations(seq, lo) - variations(seq, hi);
}

Rational cauchy_bound(const UniPoly& p) {
  Rational m(0);
  const Rational& lc = p.leading();
  for (int k = 0; k < p.degree(); ++k) {
    Rational r = rational_abs(p.coeff(k) / lc);
    if (r > m) m = r;
  }
  return m + 1;
}

std::vector<RootBox> isolate_squarefree(const UniPoly& p) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "root isolation of zero polynomial");
  std::vector<RootBox> out;
  if (p.degree() <= 0) return out;
  if (p.degree() == 1) {
    Rational r = -p.coeff(0) / p.coeff(1);
    out.push_back({r, r, 1, r});
    return out;
  }
  Isolator iso{p, sturm_sequence(p), {}};
  Rational b = cauchy_bound(p);
  iso.run(-b, b, iso.count(-b, b));
  for (auto& box : iso.out) detect_rational(p, box);
  out = std::move(iso.out);
  std::sort(out.begin(), out.end(), [](const RootBox& l, const RootBox& r) { return l.lo < r.lo; });
  return out;
}

std::vector<RootBox> isolate_real_roots(const UniPoly& p) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "root isolation of zero polynomial");
  struct Tagged {
    RootBox box;
    const UniPoly* poly;
  };
  auto parts = squarefree_decomposition(p);
  std::vector<Tagged> all;
  for (const auto& part : parts) {
    for (auto box : isolate_squarefree(part.factor)) {
      box.multiplicity = part.multiplicity;
      all.push_back({box, &part.factor});
    }
  }
  auto by_lo = [](const Tagged& l, const Tagged& r) { return l.box.lo < r.box.lo; };
  for (bool changed = true; changed;) {
    changed = false;
    std::sort(all.begin(), all.end(), by_lo);
    for (size_t i = 0; i + 1 < all.size(); ++i) {
      RootBox& a = all[i].box;
      RootBox& b = all[i + 1].box;
      if (a.hi < b.lo) continue;
      if (!a.is_exact()) bisect_once(*all[i].poly, a);
      if (!b.is_exact()) bisect_once(*all[i + 1].poly, b);
      changed = true;
    }
  }
  std::vector<RootBox> out;
  for (auto& t : all) out.push_back(std::move(t.box));
  return out;
}

int count_real_roots(const UniPoly& p) {
  if (p.degree() <= 0) return 0;
  UniPoly s = squarefree_part(p);
  std::vector<UniPoly> seq = sturm_sequence(s);
  Rational b = cauchy_bound(s);
  return variations(seq, -b) - variations(seq, b);
}

void bisect_once(const UniPoly& sqfree, RootBox& box) {
  if (box.exact_value) return;
  Rational mid = (box.lo + box.hi) / 2;
  int sm = sgn(sqfree(mid));
  if (sm == 0) {
    box.lo = box.hi = mid;
    box.exact_value = mid;
    return;
  }
  if (sgn(sqfree(box.lo)) * sm < 0)
    box.hi = mid;
  else
    box.lo = mid;
}

void refine(const UniPoly& sqfree, RootBox& box, const Rational& width) {
  while (!box.exact_value && box.hi - box.lo > width) bisect_once(sqfree, box);
}

int sign_at_root(const UniPoly& q, const UniPoly& sqfree, RootBox box) {
  if (box.exact_value) return sgn(q(*box.exact_value));
  if (q.is_zero()) return 0;
  UniPoly g = gcd(q, sqfree);
  if (g.degree() > 0) {
    std::vector<UniPoly> gs = sturm_sequence(g);
    if (variations(gs, box.lo) - variations(gs, box.hi) > 0) return 0;
  }
  UniPoly qr = squarefree_part(q);
  std::vector<UniPoly> qs = sturm_sequence(qr);
  for (;;) {
    if (box.exact_value) return sgn(q(*box.exact_value));
    if (sgn(qr(box.lo)) != 0 && sgn(qr(box.hi)) != 0 &&
        variations(qs, box.lo) - variations(qs, box.hi) == 0)
      return sgn(q(box.lo));
    bisect_once(sqfree, box);
  }
}

std::vector<Rational> rational_roots(const UniPoly& p) {
  std::vector<Rational> out;
  if (p.degree() <= 0) return out;
  for (const auto& b : isolate_real_roots(p))
    if (b.exact_value) out.push_back(*b.exact_value);
  return out;
}

namespace {

// Boxes refined so that none straddles the given rational points.
std::vector<RootBox> separated_roots(const UniPoly& p, const std::vector<Rational>& marks) {
  std::vector<RootBox> boxes = isolate_real_roots(p);
  UniPoly sq = squarefree_part(p);
  for (auto& b : boxes) {
    for (;;) {
      bool straddles = false;
      if (!b.exact_value)
        for (const auto& m : marks)
          if (b.lo <= m && m <= b.hi) straddles = true;
      if (!straddles) break;
      bisect_once(sq, b);
    }
  }
  return boxes;
}

}  // namespace

std::optional<Rational> negative_point(const UniPoly& p) {
  if (p.is_zero()) return std::nullopt;
  if (p.degree() == 0) return sgn(p.coeff(0)) < 0 ? std::optional<Rational>(Rational(0)) : std::nullopt;
  std::vector<RootBox> boxes = isolate_real_roots(p);
  std::vector<Rational> samples;
  if (boxes.empty()) {
    samples.push_back(Rational(0));
  } else {
    samples.push_back(boxes.front().lo - 1);
    for (size_t i = 0; i + 1 < boxes.size(); ++i)
      samples.push_back((boxes[i].hi + boxes[i + 1].lo) / 2);
    samples.push_back(boxes.back().hi + 1);
  }
  for (const auto& s : samples)
    if (sgn(p(s)) < 0) return s;
  return std::nullopt;
}

bool nonnegative_on(const UniPoly& p, const std::optional<Rational>& lo,
                    const std::optional<Rational>& hi) {
  if (p.is_zero()) return true;
  if (p.degree() == 0) return sgn(p.coeff(0)) >= 0;
  std::vector<Rational> marks;
  if (lo) marks.push_back(*lo);
  if (hi) marks.push_back(*hi);
  std::vector<RootBox> boxes = separated_roots(p, marks);
  for (const auto& m : marks)
    if (sgn(p(m)) < 0) return false;
  // Sample each root-free gap intersected with [lo, hi].
  std::vector<std::pair<std::optional<Rational>, std::optional<Rational>>> gaps;
  std::optional<Rational> left;
  for (const auto& b : boxes) {
    gaps.emplace_back(left, b.lo);
    left = b.hi;
  }
  gaps.emplace_back(left, std::nullopt);
  for (const auto& [ga, gb] : gaps) {
    std::optional<Rational> a = ga, b = gb;
    if (lo && (!a || *a < *lo)) a = lo;
    if (hi && (!b || *b > *hi)) b = hi;
    Rational s;
    if (a && b) {
      if (*a > *b) continue;
      s = (*a + *b) / 2;
    } else if (a) {
      s = *a + 1;
    } else if (b) {
      s = *b - 1;
    } else {
      s = 0;
    }
    if (sgn(p(s)) < 0) return false;
  }
  return true;
}

}  // namespace curvesos
