#include <doctest.h>

#include <algorithm>
#include <random>

#include "curvesos/error.hpp"
#include "curvesos/plane_frontend.hpp"
#include "curvesos/poly_text.hpp"
#include "random_data.hpp"

using namespace curvesos;

namespace {

PlaneCurveInput curve(std::vector<std::string> factors) { return plane_input_from_strings(factors); }

std::vector<std::pair<Rational, Rational>> real_coordinates(const std::vector<PointRecord>& recs) {
  std::vector<std::pair<Rational, Rational>> out;
  for (const auto& r : recs)
    if (r.realness == Realness::Real) {
      REQUIRE(r.point.has_value());
      auto xy = r.point->exact_coordinates();
      REQUIRE(xy.has_value());
      out.push_back(*xy);
    }
  std::sort(out.begin(), out.end());
  return out;
}

int weighted_count(const InfinityReport& r) {
  int n = 0;
  for (const auto& p : r.points) n += (p.realness == Realness::NonReal ? 2 : 1) * p.multiplicity;
  return n;
}

}  // namespace

TEST_CASE("pairwise intersections of the fixture curves") {
  auto far = pairwise_intersections(curve({"x^2 + y^2 - 1", "x^2 - 6*x + y^2 + 8"}));
  REQUIRE(far.size() == 1);
  CHECK(far[0].realness == Realness::NonReal);
  REQUIRE(far[0].symbolic.has_value());
  CHECK(far[0].symbolic->abscissa == Rational(3, 2));

  auto overlap = pairwise_intersections(curve({"x^2 + y^2 - 1", "x^2 - 2*x + y^2"}));
  REQUIRE(overlap.size() == 2);
  for (const auto& r : overlap) {
    CHECK(r.realness == Realness::Real);
    REQUIRE(r.point.has_value());
    // y = +-sqrt(3)/2 is irrational; x is the rational coordinate.
    auto [x, y] = r.point->approx();
    CHECK(x == doctest::Approx(0.5));
    CHECK(std::abs(y) == doctest::Approx(std::sqrt(3.0) / 2));
  }

  auto line_circle = real_coordinates(pairwise_intersections(curve({"y", "x^2 + y^2 - 1"})));
  CHECK(line_circle == std::vector<std::pair<Rational, Rational>>{{Rational(-1), Rational(0)}, {Rational(1), Rational(0)}});
}

TEST_CASE("intersection realness agrees with a direct evaluation oracle") {
  // Lines y = m x + c against the unit circle: real iff the distance to the origin is at most 1.
  std::mt19937 rng(17);
  for (int i = 0; i < 40; ++i) {
    Rational m = testing::random_rational(rng, 3, 2), c = testing::random_rational(rng, 4, 2);
    BiPoly line = parse_bipoly("y") - BiPoly::constant(m) * parse_bipoly("x") - BiPoly::constant(c);
    PlaneCurveInput in;
    in.factors = {line, parse_bipoly("x^2 + y^2 - 1")};
    auto recs = pairwise_intersections(in);
    Rational disc = 1 + m * m - c * c;  // quarter discriminant of (1 + m^2) x^2 + 2 m c x + c^2 - 1
    if (sgn(disc) < 0) {
      REQUIRE(recs.size() == 1);
      CHECK(recs[0].realness == Realness::NonReal);
    } else {
      int expected = sgn(disc) == 0 ? 1 : 2;
      REQUIRE(static_cast<int>(recs.size()) == expected);
      for (const auto& r : recs) {
        CHECK(r.realness == Realness::Real);
        auto [x, y] = r.point->approx();
        CHECK(y == doctest::Approx(to_double(m) * x + to_double(c)).epsilon(1e-6));
        CHECK(x * x + y * y == doctest::Approx(1.0).epsilon(1e-6));
      }
    }
  }
}

TEST_CASE("point classification") {
  auto xy = classify_point(curve({"x", "y"}), Rational(0), Rational(0));
  CHECK(xy.kind == PointClass::OrdinaryDoublePoint);
  CHECK(xy.factors_through == 2);
  CHECK(xy.tangents.size() == 2);
  CHECK(classify_point(curve({"y", "y^2 - x^3"}), Rational(0), Rational(0)).kind == PointClass::NotOMPIT);
  CHECK(classify_point(curve({"y - x^2", "y"}), Rational(0), Rational(0)).kind == PointClass::NotOMPIT);
  CHECK(classify_point(curve({"x^2 + y^2 - 1"}), Rational(1), Rational(0)).kind == PointClass::NonSingular);
  CHECK_THROWS_AS(classify_point(curve({"x^2 + y^2 - 1"}), Rational(0), Rational(0)), Error);
}

TEST_CASE("classification is translation equivariant") {
  std::mt19937 rng(23);
  const std::vector<std::string> shapes = {"x*y", "y^2 - x^3", "x^2 - y^2 + x^3", "y - x^2", "x^2 + y^2 - x^3"};
  for (const auto& s : shapes) {
    BiPoly F = parse_bipoly(s);
    PointClass at_origin = classify_polynomial_at(F, Rational(0), Rational(0)).kind;
    for (int i = 0; i < 5; ++i) {
      Rational a = testing::random_rational(rng), b = testing::random_rational(rng);
      // G(x, y) = F(x - a, y - b) has the same germ at (a, b).
      BiPoly G = F.translate(-a, -b);
      CHECK(classify_polynomial_at(G, a, b).kind == at_origin);
    }
  }
}

TEST_CASE("points at infinity") {
  auto circle = points_at_infinity(parse_bipoly("x^2 + y^2 - 1"));
  REQUIRE(circle.points.size() == 1);
  CHECK(circle.points[0].realness == Realness::NonReal);
  CHECK_FALSE(circle.bounded_ring_trivial);

  auto parabola = points_at_infinity(parse_bipoly("y - x^2"));
  REQUIRE(parabola.points.size() == 1);
  CHECK(parabola.points[0].realness == Realness::Real);
  CHECK(parabola.bounded_ring_trivial);

  auto hyperbola = points_at_infinity(parse_bipoly("x*y - 1"));
  CHECK(hyperbola.points.size() == 2);
  CHECK(hyperbola.bounded_ring_trivial);
}

TEST_CASE("conic bounded rings follow the sign of the leading discriminant") {
  std::mt19937 rng(29);
  for (int i = 0; i < 60; ++i) {
    Rational a = testing::random_rational(rng, 4, 1), b = testing::random_rational(rng, 4, 1),
             c = testing::random_rational(rng, 4, 1);
    if (sgn(a) == 0 && sgn(b) == 0 && sgn(c) == 0) continue;
    BiPoly F = BiPoly::monomial(a, 2, 0) + BiPoly::monomial(b, 1, 1) + BiPoly::monomial(c, 0, 2) +
               parse_bipoly("x + 2*y - 3");
    auto rep = points_at_infinity(F);
    bool negative_disc = sgn(b * b - 4 * a * c) < 0;
    CHECK(rep.bounded_ring_trivial == !negative_disc);
    CHECK(weighted_count(rep) == 2);
  }
}

TEST_CASE("divisor at infinity has the factor's degree") {
  for (const char* s : {"x^2 + y^2 - 1", "y - x^2", "x*y - 1", "y", "x - y", "y^2 - x^3", "x^3 + y^3 - 1",
                        "x^4 + y^4 - 1", "x^2*y + y^3 - x"}) {
    BiPoly F = parse_bipoly(s);
    auto rep = points_at_infinity(F);
    if (!rep.best_effort) CHECK_MESSAGE(weighted_count(rep) == F.total_degree(), s);
  }
}

TEST_CASE("configuration of the triangle") {
  auto config = build_configuration(curve({"y", "x", "1 - x - y"}));
  CHECK(config.components.size() == 3);
  REQUIRE(config.points.size() == 3);
  for (const auto& p : config.points) {
    CHECK(p.realness == Realness::Real);
    CHECK(p.ompit == Tri::Yes);
    CHECK(p.components.size() == 2);
  }
  std::vector<std::pair<Rational, Rational>> at;
  for (const auto& p : config.points) at.push_back(*p.plane);
  std::sort(at.begin(), at.end());
  CHECK(at == std::vector<std::pair<Rational, Rational>>{
                  {Rational(0), Rational(0)}, {Rational(0), Rational(1)}, {Rational(1), Rational(0)}});
  for (const auto& c : config.components) CHECK(c.chart.kind == ChartKind::AffineLine);
}

TEST_CASE("configuration of a non-real and a real circle") {
  auto config = build_configuration(curve({"x^2 + y^2 + 1", "x^2 + y^2 - 1"}));
  REQUIRE(config.components.size() == 2);
  CHECK(config.components[0].has_real_points == Tri::No);
  CHECK(config.components[1].has_real_points == Tri::Yes);
  CHECK(config.components[1].chart.kind == ChartKind::UnitCircle);
  CHECK(config.points.empty());
}

TEST_CASE("configuration of the hyperbola and the diagonal") {
  auto config = build_configuration(curve({"x*y - 1", "x - y"}));
  REQUIRE(config.points.size() == 2);
  std::vector<std::pair<Rational, Rational>> at;
  for (const auto& p : config.points) {
    CHECK(p.ompit == Tri::Yes);
    at.push_back(*p.plane);
  }
  std::sort(at.begin(), at.end());
  CHECK(at == std::vector<std::pair<Rational, Rational>>{{Rational(-1), Rational(-1)}, {Rational(1), Rational(1)}});
  CHECK(config.components[0].chart.kind == ChartKind::PuncturedLine);
}

TEST_CASE("frontend input validation") {
  CHECK_THROWS_AS(build_configuration(curve({"x", "2*x"})), Error);
  CHECK_THROWS_AS(build_configuration(curve({"3"})), Error);
  CHECK_THROWS_AS(plane_input_from_json(Json::parse(R"({"factors": []})")), Error);
}
