#include <doctest.h>

#include <random>

#include "configs.hpp"
#include "curvesos/poly_text.hpp"
#include "curvesos/preorder.hpp"
#include "random_data.hpp"

using namespace curvesos;
using curvesos::testing::line_element;
using curvesos::testing::plane;
using curvesos::testing::restrict_all;
using curvesos::testing::thrown_code;
using Answer = SaturationVerdict::Answer;

namespace {

UniPoly P(const char* s) { return parse_unipoly(s); }

std::vector<UniPoly> polys(std::initializer_list<const char*> ss) {
  std::vector<UniPoly> out;
  for (auto s : ss) out.push_back(P(s));
  return out;
}

// On the cross {x = 0} u {y = 0}: C0 is x = 0 with t = y, C1 is y = 0 with t = x.
CurveConfiguration cross() { return plane({"x", "y"}); }

std::vector<Element> gens(const CurveConfiguration& c, std::initializer_list<const char*> plane_polys) {
  std::vector<Element> out;
  for (auto s : plane_polys) out.push_back(restrict_all(c, parse_bipoly(s)));
  return out;
}

}  // namespace

TEST_CASE("semialgebraic subsets of the line") {
  auto s = compute_line_set(polys({"1 - t^2"}));
  REQUIRE(s.pieces.size() == 1);
  CHECK(s.pieces[0].lo->exact == Rational(-1));
  CHECK(s.pieces[0].hi->exact == Rational(1));
  CHECK(s.compact());

  s = compute_line_set(polys({"t^3 - 3*t^2 + 2*t"}));  // t (t - 1) (t - 2)
  REQUIRE(s.pieces.size() == 2);
  CHECK(s.pieces[0].lo->exact == Rational(0));
  CHECK(s.pieces[0].hi->exact == Rational(1));
  CHECK(s.pieces[1].lo->exact == Rational(2));
  CHECK(s.unbounded_right());
  // Sign table oracle at sample points.
  for (int k = -4; k <= 12; ++k) {
    Rational t(k, 4);
    CHECK(s.contains(t) == (sgn(P("t^3 - 3*t^2 + 2*t")(t)) >= 0));
  }

  s = compute_line_set(polys({"t", "-t"}));
  REQUIRE(s.pieces.size() == 1);
  CHECK(s.pieces[0].is_point());
  CHECK(compute_line_set(polys({"-1 - t^2"})).empty());

  s = compute_line_set(polys({"t^2 - 2"}));  // irrational endpoints
  REQUIRE(s.pieces.size() == 2);
  CHECK_FALSE(s.pieces[0].hi->exact.has_value());
  CHECK(s.contains(Rational(-3, 2)));
  CHECK_FALSE(s.contains(Rational(7, 5)));
}

TEST_CASE("redundant generators do not change the set") {
  std::mt19937 rng(61);
  for (int i = 0; i < 40; ++i) {
    UniPoly h = testing::random_poly(rng, 1 + i % 4), q = testing::random_poly(rng, i % 3);
    auto a = compute_line_set({h}), b = compute_line_set({h, h * q * q});
    REQUIRE(a.pieces.size() == b.pieces.size());
    CHECK(a.unbounded_left() == b.unbounded_left());
    CHECK(a.unbounded_right() == b.unbounded_right());
    for (int k = -60; k <= 60; ++k) CHECK(a.contains(Rational(k, 7)) == b.contains(Rational(k, 7)));
  }
}

TEST_CASE("natural generator saturation") {
  CHECK(km_saturation(polys({"t"})).answer == Answer::Saturated);
  auto cube = km_saturation(polys({"t^3"}));
  CHECK(cube.answer == Answer::NotSaturated);
  CHECK(cube.missing_generators == std::vector<std::string>{"t"});
  CHECK(km_saturation(polys({"t^2 - t"})).answer == Answer::Saturated);
  CHECK(km_saturation(polys({"t", "t - 1"})).answer == Answer::Saturated);
  CHECK(km_saturation(polys({"t^2 - 3*t + 2", "t"})).answer == Answer::Saturated);
  CHECK(km_saturation(polys({"t^3 - t^2"})).answer == Answer::NotSaturated);
  CHECK(thrown_code([] { km_saturation(polys({"1 - t^2"})); }) == ErrorCode::CompactSet);

  std::mt19937 rng(67);
  for (const auto& H : {polys({"t"}), polys({"t^3"}), polys({"t^2 - t"}), polys({"t^3 - t"})}) {
    auto base = km_saturation(H).answer;
    for (int k = 0; k < 5; ++k) {
      auto scaled = H;
      for (auto& h : scaled) h *= abs(testing::random_nonzero(rng));
      CHECK(km_saturation(scaled).answer == base);
    }
  }
}

TEST_CASE("localization to one component") {
  auto c = cross();
  Element f = line_element({{0, P("t")}, {1, P("t")}});
  Element f1 = localize_component(c, f, 1);
  CHECK(cf_equal(f1.at(1), Laurent(P("t"))));
  CHECK(cf_equal(f1.at(0), Laurent(UniPoly())));

  Element k = line_element({{0, P("3")}, {1, P("3")}});
  auto kl = localize_component(c, k, 0);
  CHECK(cf_equal(kl.at(0), k.at(0)));
  CHECK(cf_equal(kl.at(1), k.at(1)));

  // Chain y = 0, x = 0, y = 1: localizing at the middle makes both ends constant.
  auto chain = plane({"y", "x", "y - 1"});
  Element g = restrict_all(chain, parse_bipoly("x^2 + 3*y + 1"));
  Element g1 = localize_component(chain, g, 1);
  CHECK(cf_equal(g1.at(1), g.at(1)));
  for (int end : {0, 2}) {
    const auto& e = std::get<Laurent>(g1.at(end));
    CHECK(e.body().degree() <= 0);
    // Value oracle: the end equals g at its junction with the middle line.
    for (const auto& p : chain.points)
      if (p.touches(end) && p.touches(1)) CHECK(evaluate(g1.at(end), p.params.at(end)) == evaluate(g.at(1), p.params.at(1)));
  }
  Element again = localize_component(chain, g1, 1);
  for (int i = 0; i < 3; ++i) CHECK(cf_equal(again.at(i), g1.at(i)));

  CHECK(thrown_code([] { localize_component(plane({"y", "x", "1 - x - y"}), Element{}, 0); }).has_value());
}

TEST_CASE("sufficient saturation conditions") {
  auto c = cross();
  CHECK(prop45_check(c, gens(c, {"x", "y"})).answer == Answer::Saturated);
  auto joint = prop45_check(c, gens(c, {"x + y"}));
  CHECK(joint.answer == Answer::ConditionsNotMet);
  CHECK(joint.failed_conditions == std::vector<std::string>{"4"});
  auto annulus = prop45_check(c, gens(c, {"x^2 + y^2 - 1"}));
  CHECK(annulus.answer == Answer::ConditionsNotMet);
  CHECK(annulus.failed_conditions == std::vector<std::string>{"2"});
}

TEST_CASE("saturated preorderings contain only nonnegative probes") {
  auto c = cross();
  auto H = gens(c, {"x", "y"});
  REQUIRE(prop45_check(c, H).answer == Answer::Saturated);
  std::mt19937 rng(71);
  for (int trial = 0; trial < 30; ++trial) {
    // sigma_0 + sigma_1 g_1 + sigma_2 g_2 + sigma_3 g_1 g_2 with random squares sigma_i.
    Element probe = line_element({{0, UniPoly()}, {1, UniPoly()}});
    std::vector<Element> products = {line_element({{0, P("1")}, {1, P("1")}}), H[0], H[1]};
    Element g12;
    for (int i : {0, 1}) g12[i] = cf_mul(H[0].at(i), H[1].at(i));
    products.push_back(g12);
    for (const auto& m : products) {
      UniPoly a = testing::random_poly(rng, static_cast<int>(rng() % 3));
      UniPoly b = testing::random_poly(rng, static_cast<int>(rng() % 3));
      b += UniPoly::constant(a(Rational(0)) - b(Rational(0)));
      Element sq = line_element({{0, a * a}, {1, b * b}});
      for (int i : {0, 1}) probe[i] = cf_add(probe[i], cf_mul(sq.at(i), m.at(i)));
    }
    for (int i : {0, 1})
      for (int k = 0; k <= 20; ++k) CHECK(sgn(evaluate(probe.at(i), Rational(k, 3))) >= 0);
  }
}

TEST_CASE("strong moment property on the cross") {
  auto c = cross();
  auto sq = smp_curve(c, {});
  CHECK(sq.answer == Tri::Yes);
  CHECK(sq.c_prime == std::vector<int>{0, 1});
  CHECK(smp_curve(c, gens(c, {"x", "y"})).answer == Tri::Yes);
  CHECK(smp_curve(c, gens(c, {"x + y"})).answer == Tri::No);
  // Compact K: C' is empty.
  auto compact = smp_curve(c, gens(c, {"1 - x^2 - y^2"}));
  CHECK(compact.answer == Tri::Yes);
  CHECK(compact.c_prime.empty());
}

TEST_CASE("on a single line the moment verdict is the saturation verdict") {
  auto line = plane({"y"});
  for (const char* h : {"t", "t^3", "t^2 - t", "t^3 - t^2", "t^3 - t"}) {
    auto km = km_saturation({P(h)});
    auto smp = smp_curve(line, {line_element({{0, P(h)}})});
    CAPTURE(h);
    if (km.answer == Answer::Saturated) CHECK(smp.answer == Tri::Yes);
    if (km.answer == Answer::NotSaturated) CHECK(smp.answer == Tri::No);
  }
}

TEST_CASE("fibres of xy") {
  std::vector<Rational> five = {Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 2), Rational(1)};
  auto reps = fibre_analysis({parse_bipoly("1 - x^2*y^2")}, parse_bipoly("x*y"), five);
  REQUIRE(reps.size() == 5);
  for (const auto& r : reps) CHECK(r.verdict.answer == Tri::Yes);
  CHECK(reps[2].factors.size() == 2);

  auto split = fibre_analysis({parse_bipoly("x"), parse_bipoly("y"), parse_bipoly("1 - x*y")}, parse_bipoly("x*y"),
                              {Rational(0)});
  REQUIRE(split.size() == 1);
  CHECK(split[0].verdict.answer == Tri::Yes);
  CHECK(split[0].restricted_generators.size() == 3);

  auto joint = fibre_analysis({parse_bipoly("x + y"), parse_bipoly("1 - x^2*y^2")}, parse_bipoly("x*y"), {Rational(0)});
  CHECK(joint[0].verdict.answer == Tri::No);
}

TEST_CASE("rational factorization of fibres") {
  CHECK(factor_plane_curve(parse_bipoly("x*y")).size() == 2);
  CHECK(factor_plane_curve(parse_bipoly("x^2 - y^2")).size() == 2);
  CHECK(factor_plane_curve(parse_bipoly("x*y - 1")).size() == 1);
  CHECK(factor_plane_curve(parse_bipoly("x^2 + y^2 - 1")).size() == 1);
  CHECK(thrown_code([] { factor_plane_curve(parse_bipoly("x^2")); }) == ErrorCode::FibreNotCurve);
  auto fs = factor_plane_curve(parse_bipoly("x^2*y - y"));  // y (x - 1)(x + 1)
  CHECK(fs.size() == 3);
}
