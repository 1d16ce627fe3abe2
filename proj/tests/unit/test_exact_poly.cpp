#include <doctest.h>

#include <random>

#include "curvesos/bi_poly.hpp"
#include "curvesos/error.hpp"
#include "curvesos/poly_text.hpp"
#include "curvesos/real_roots.hpp"
#include "curvesos/resultant.hpp"
#include "curvesos/uni_poly.hpp"
#include "random_data.hpp"

using namespace curvesos;
using curvesos::testing::random_nonzero;
using curvesos::testing::random_poly;
using curvesos::testing::random_rational;

namespace {

UniPoly P(const char* s) { return parse_unipoly(s); }
BiPoly B(const char* s) { return parse_bipoly(s); }

// Equality up to a nonzero scalar.
bool associated(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.monic() == b.monic();
}

}  // namespace

TEST_CASE("text round trip for rational coefficients") {
  CHECK(P("3/2*t^2 - t + 2") == UniPoly({Rational(2), Rational(-1), Rational(3, 2)}));
  BiPoly f = B("3/2*x^2*y - 1*y + 2");
  CHECK(f.coeff(2, 1) == Rational(3, 2));
  CHECK(f.coeff(0, 1) == -1);
  CHECK(f.coeff(0, 0) == 2);
  CHECK(parse_bipoly(f.to_string()) == f);
  CHECK_THROWS_AS(P("t^"), Error);
  CHECK_THROWS_AS(B("x + * y"), Error);
  CHECK_THROWS_AS(B("(x + y)^2"), Error);
}

TEST_CASE("squarefree part") {
  CHECK(squarefree_part(P("t^2")) == P("t"));
  CHECK(associated(squarefree_part(P("t^3 - t")), P("t^3 - t")));
  // (t-1)^2 (t+2) expanded by hand.
  CHECK(associated(squarefree_part(P("t^3 - 3*t + 2")), P("t^2 + t - 2")));

  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    UniPoly a = random_poly(rng, 1 + i % 3), b = random_poly(rng, 1 + i % 2);
    UniPoly s = squarefree_part(a * a * b);
    CHECK(gcd(s, s.derivative()).degree() == 0);
    CHECK(divmod(a * a * b, s).rem.is_zero());
  }
}

TEST_CASE("Sturm counts") {
  CHECK(sturm_count(P("t^3 - t"), Rational(-2), Rational(2)) == 3);
  CHECK(sturm_count(P("t^2 + 1"), Rational(-10), Rational(10)) == 0);
  CHECK(sturm_count(P("t^2 - 2"), Rational(0), Rational(2)) == 1);
}

TEST_CASE("root isolation") {
  auto boxes = isolate_real_roots(P("t^2 - t"));
  REQUIRE(boxes.size() == 2);
  CHECK(boxes[0].exact_value == Rational(0));
  CHECK(boxes[1].exact_value == Rational(1));

  boxes = isolate_real_roots(P("t^2 - 2"));
  REQUIRE(boxes.size() == 2);
  CHECK_FALSE(boxes[0].is_exact());
  CHECK(boxes[0].lo >= -2);
  CHECK(boxes[0].hi <= -1);
  CHECK(boxes[1].lo >= 1);
  CHECK(boxes[1].hi <= 2);

  boxes = isolate_real_roots(P("4*t^2 - 4*t + 1"));
  REQUIRE(boxes.size() == 1);
  CHECK(boxes[0].exact_value == Rational(1, 2));
  CHECK(boxes[0].multiplicity == 2);
}

TEST_CASE("Sturm count beyond the Cauchy bound matches the isolated boxes") {
  std::mt19937 rng(11);
  for (int i = 0; i < 60; ++i) {
    UniPoly p = random_poly(rng, 1 + i % 5);
    Rational b = cauchy_bound(p) + 1;
    CHECK(sturm_count(squarefree_part(p), -b, b) == static_cast<int>(isolate_real_roots(p).size()));
  }
}

TEST_CASE("resultant examples") {
  // Sylvester oracle for the two unit circles at distance 3: (6x - 9)^2.
  UniPoly r = resultant_eliminate(B("x^2 + y^2 - 1"), B("x^2 - 6*x + y^2 + 8"), Axis::Y);
  CHECK(associated(r, P("36*t^2 - 108*t + 81")));
  CHECK(associated(resultant_eliminate(B("y - x^2"), B("y"), Axis::Y), P("t^2")));
  CHECK(associated(resultant_eliminate(B("x"), B("y"), Axis::Y), P("t")));
}

TEST_CASE("resultant vanishes at common rational abscissas") {
  std::mt19937 rng(3);
  for (int i = 0; i < 40; ++i) {
    Rational a = random_rational(rng), b = random_rational(rng);
    // Both curves pass through (a, b) by construction.
    BiPoly F = B("x^2 + x*y - y^2") + BiPoly::constant(random_nonzero(rng)) * B("y");
    BiPoly G = B("y^2 - x") + BiPoly::constant(random_nonzero(rng)) * B("x*y");
    F -= BiPoly::constant(F(a, b));
    G -= BiPoly::constant(G(a, b));
    UniPoly R = resultant_eliminate(F, G, Axis::Y);
    CHECK(sgn(R(a)) == 0);
  }
}

TEST_CASE("homogeneous parts") {
  CHECK(homogeneous_part(B("y^2 - x^3*y"), 2) == B("y^2"));
  CHECK(homogeneous_part(B("x*y"), 1).is_zero());
  CHECK(homogeneous_part(B("x*y - x^2*y - x*y^2"), 2) == B("x*y"));

  BiPoly F = B("x^3*y - 2*x^2 + 7/3*y + 5 - x*y^2");
  BiPoly sum;
  for (int d = 0; d <= F.total_degree(); ++d) sum += homogeneous_part(F, d);
  CHECK(sum == F);
}

TEST_CASE("binary quadratic splitting") {
  auto s = split_binary_quadratic(B("x*y"));
  CHECK(s.kind == BinaryQuadraticSplit::Kind::TwoDistinctRealFactors);
  REQUIRE(s.factors.size() == 2);
  CHECK(s.factors[0] * s.factors[1] * BiPoly::constant(B("x*y").coeff(1, 1) /
                                                       (s.factors[0] * s.factors[1]).coeff(1, 1)) ==
        B("x*y"));
  CHECK(split_binary_quadratic(B("y^2")).kind == BinaryQuadraticSplit::Kind::PerfectSquare);
  CHECK(split_binary_quadratic(B("x^2 + y^2")).kind == BinaryQuadraticSplit::Kind::IrreducibleOverReals);
  CHECK_THROWS_AS(split_binary_quadratic(B("x^2 + y")), Error);
}

TEST_CASE("degree rule for sums of squares") {
  std::mt19937 rng(5);
  for (int i = 0; i < 200; ++i) {
    std::vector<UniPoly> fs;
    int r = 1 + static_cast<int>(rng() % 4);
    for (int k = 0; k < r; ++k) fs.push_back(random_poly(rng, static_cast<int>(rng() % 5)));
    auto check = check_degree_rule(fs);
    UniPoly s;
    int m = 0;
    for (const auto& f : fs) {
      s += f * f;
      m = std::max(m, f.degree());
    }
    CHECK(check.holds());
    CHECK(s.degree() == 2 * m);
  }
}
