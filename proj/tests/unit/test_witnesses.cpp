#include <doctest.h>

#include <random>
#include <set>

#include "configs.hpp"
#include "curvesos/certificates.hpp"
#include "curvesos/config_graph.hpp"
#include "curvesos/poly_text.hpp"
#include "curvesos/real_roots.hpp"
#include "random_data.hpp"

using namespace curvesos;
using curvesos::testing::plane;
using curvesos::testing::thrown_code;

namespace {

UniPoly P(const char* s) { return parse_unipoly(s); }

ObstructionWitness witness_for(const CurveConfiguration& config) {
  auto r = is_forest(config, config.component_ids());
  REQUIRE(r.cycle.has_value());
  return cycle_witness(config, *r.cycle);
}

bool check_failed(const ExactReport& r, const std::string& fragment) {
  for (const auto& c : r.checks)
    if (!c.passed && c.name.find(fragment) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("triangle witness") {
  auto tri = plane({"y", "x", "1 - x - y"});
  auto w = witness_for(tri);
  CHECK(w.kind == WitnessKind::TriangleIntro);
  CHECK(w.f == P("2*t - 1"));
  CHECK(w.nodes == std::vector<Rational>{Rational(0), Rational(1)});
  CHECK(cf_equal(w.element.at(w.component), Laurent(P("4*t^2 - 4*t + 1"))));
  for (const auto& [c, f] : w.element)
    if (c != w.component) CHECK(cf_equal(f, Laurent::constant(1)));
  auto rep = verify_witness(tri, w);
  CHECK(rep.passed());
  CHECK(rep.exact);

  auto back = witness_from_json(tri, witness_to_json(tri, w));
  CHECK(back.f == w.f);
  CHECK(verify_witness(tri, back).passed());
}

TEST_CASE("hyperbola and line witness") {
  auto hyp = plane({"x*y - 1", "x - y"});
  auto w = witness_for(hyp);
  CHECK(w.kind == WitnessKind::Cycle);
  CHECK(w.nodes == std::vector<Rational>{Rational(-1), Rational(1)});
  CHECK((w.f == P("t") || w.f == P("-t")));
  CHECK(verify_witness(hyp, w).passed());
}

TEST_CASE("tampered witnesses fail") {
  auto tri = plane({"y", "x", "1 - x - y"});
  auto w = witness_for(tri);
  auto same_sign = w;
  same_sign.f = P("1");
  same_sign.element[w.component] = Laurent::constant(1);
  auto rep = verify_witness(tri, same_sign);
  CHECK_FALSE(rep.passed());
  CHECK(check_failed(rep, "sign"));

  auto wrong_element = w;
  wrong_element.element[w.component] = Laurent(P("4*t^2 - 4*t + 2"));
  CHECK_FALSE(verify_witness(tri, wrong_element).passed());
}

TEST_CASE("alternating interpolants interlace") {
  UniPoly f = alternating_interpolant({Rational(0), Rational(1), Rational(2)});
  CHECK(f(Rational(0)) == -1);
  CHECK(f(Rational(1)) == 1);
  CHECK(f(Rational(2)) == -1);
  CHECK(f.degree() == 2);
  CHECK(sturm_count(f, Rational(0), Rational(1)) == 1);
  CHECK(sturm_count(f, Rational(1), Rational(2)) == 1);

  std::mt19937 rng(53);
  for (int r = 2; r <= 5; ++r)
    for (int trial = 0; trial < 10; ++trial) {
      std::set<Rational> s;
      while (static_cast<int>(s.size()) < r) s.insert(testing::random_rational(rng, 20, 7));
      std::vector<Rational> nodes(s.begin(), s.end());
      UniPoly g = alternating_interpolant(nodes);
      CHECK(count_real_roots(g) == r - 1);
      for (int j = 0; j + 1 < r; ++j) CHECK(sturm_count(squarefree_part(g), nodes[j], nodes[j + 1]) == 1);
    }
}

TEST_CASE("non-real intersection witnesses") {
  auto far = plane({"x^2 + y^2 - 1", "x^2 - 6*x + y^2 + 8"});
  auto w = nonreal_intersection_witness(far, 0, 1);
  CHECK(w.abscissa == Rational(3, 2));
  CHECK(w.f == P("2*t^2 - 5*t + 3"));  // (2x - 3)(x - 1)
  CHECK(verify_witness(far, w).passed());

  auto farther = plane({"x^2 + y^2 - 1", "x^2 - 10*x + y^2 + 24"});
  auto w5 = nonreal_intersection_witness(farther, 0, 1);
  CHECK(w5.abscissa == Rational(5, 2));
  CHECK(verify_witness(farther, w5).passed());
  // Sign table oracle on [-1, 1]: f >= 0 at the ends and at every rational sample.
  for (int k = -8; k <= 8; ++k) CHECK(sgn(w5.f(Rational(k, 8))) >= 0);
  CHECK(sgn(w5.f(*w5.abscissa)) == 0);

  auto real = plane({"x^2 + y^2 - 1", "x^2 - 2*x + y^2"});
  CHECK(thrown_code([&] { nonreal_intersection_witness(real, 0, 1); }).has_value());
}

TEST_CASE("tampered non-real witness fails") {
  auto far = plane({"x^2 + y^2 - 1", "x^2 - 6*x + y^2 + 8"});
  auto w = nonreal_intersection_witness(far, 0, 1);
  w.f = P("2*t - 3");  // negative on [-1, 1]
  CHECK_FALSE(verify_witness(far, w).passed());
}

TEST_CASE("triangle rigidity at a coarse grid") {
  auto tri = plane({"y", "x", "1 - x - y"});
  auto w = witness_for(tri);
  auto s = triangle_bruteforce(tri, w.element, 4, Rational(2));
  CHECK(s.grid_size == 25);  // reduced fractions with denominators <= 4 in [-2, 2]
  CHECK(s.representations == 0);
}
