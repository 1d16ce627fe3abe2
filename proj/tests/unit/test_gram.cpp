#include <doctest.h>

#include <random>

#include "configs.hpp"
#include "curvesos/certificates.hpp"
#include "curvesos/gram.hpp"
#include "curvesos/numeric.hpp"
#include "curvesos/poly_text.hpp"

using namespace curvesos;
using curvesos::testing::line_element;
using curvesos::testing::plane;
using curvesos::testing::restrict_all;

namespace {

UniPoly P(const char* s) { return parse_unipoly(s); }

DMatrix random_psd(std::mt19937& rng, int n, int rank) {
  std::normal_distribution<double> g;
  DMatrix m(n);
  for (int k = 0; k < rank; ++k) {
    std::vector<double> v(n);
    for (auto& x : v) x = g(rng);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) += v[i] * v[j];
  }
  return m;
}

}  // namespace

TEST_CASE("Jacobi eigenvalues") {
  DMatrix m(2);
  m(0, 0) = 2;
  m(0, 1) = m(1, 0) = 1;
  m(1, 1) = 2;
  auto e = jacobi_eigen(m);
  CHECK(e.values[0] == doctest::Approx(1.0));
  CHECK(e.values[1] == doctest::Approx(3.0));
  CHECK(min_eigenvalue(m) == doctest::Approx(1.0));

  auto roots = polynomial_roots({2.0, -3.0, 1.0});  // (t - 1)(t - 2)
  REQUIRE(roots.size() == 2);
  double lo = std::min(roots[0].real(), roots[1].real()), hi = std::max(roots[0].real(), roots[1].real());
  CHECK(lo == doctest::Approx(1.0));
  CHECK(hi == doctest::Approx(2.0));
}

TEST_CASE("PSD projection fixes PSD matrices") {
  std::mt19937 rng(59);
  for (int i = 0; i < 20; ++i) {
    DMatrix m = random_psd(rng, 5, 1 + i % 5);
    DMatrix p = project_psd(m);
    for (size_t k = 0; k < m.a.size(); ++k) CHECK(p.a[k] == doctest::Approx(m.a[k]).epsilon(1e-9));
  }
  DMatrix neg(2);
  neg(0, 0) = 1;
  neg(1, 1) = -1;
  DMatrix p = project_psd(neg);
  CHECK(p(1, 1) == doctest::Approx(0.0));
  CHECK(p(0, 0) == doctest::Approx(1.0));
}

TEST_CASE("Gram problem structure") {
  auto xy = plane({"x", "y"});
  Element F = restrict_all(xy, parse_bipoly("x^2 + y^2"));
  auto p = build_gram_problem(xy, {0, 1}, F, 1);
  CHECK(p.N == 4);
  REQUIRE(p.kernel.size() == 3);
  // Constant terms vanish on both lines (degree rule), then the shared origin.
  CHECK(p.kernel[0] == RVector{Rational(1), Rational(0), Rational(0), Rational(0)});
  CHECK(p.kernel[1] == RVector{Rational(0), Rational(0), Rational(1), Rational(0)});
  // e_0(0) - e_1(0) in the stacked basis (1, u | 1, v).
  CHECK(p.kernel[2] == RVector{Rational(1), Rational(0), Rational(-1), Rational(0)});

  auto cl = plane({"x^2 + y^2 - 1", "y"});
  auto q = build_gram_problem(cl, {0, 1}, restrict_all(cl, parse_bipoly("1 - x*y")), 2);
  // Circle block 1, X, X^2, Y, XY plus line block 1, t, t^2.
  CHECK(q.N == 8);
  // t and t^2 on the line, two shared points; 1 - XY >= 1/2 on the circle adds nothing.
  CHECK(q.kernel.size() == 4);

  // (X - Y)^2 vanishes doubly at X = Y = +-1/sqrt(2): one conjugate pair, two rational directions.
  auto z = build_gram_problem(cl, {0}, restrict_all(cl, parse_bipoly("x^2 - 2*x*y + y^2")), 1);
  CHECK(z.kernel.size() == 2);
  CHECK(build_gram_problem(cl, {0}, restrict_all(cl, parse_bipoly("x^2 - 2*x*y + y^2")), 1, nullptr,
                           FaceReduction::None)
            .kernel.empty());
  // (X + 1)^2 + Y^2 = 2 + 2X vanishes only at (-1, 0), the point at s = infinity.
  CHECK(build_gram_problem(cl, {0}, restrict_all(cl, parse_bipoly("2 + 2*x")), 1).kernel.size() == 1);

  auto tri = plane({"y", "x", "1 - x - y"});
  Element W = line_element({{0, P("4*t^2 - 4*t + 1")}, {1, P("1")}, {2, P("1")}});
  auto t = build_gram_problem(tri, {0, 1, 2}, W, 1);
  CHECK(t.N == 6);
  CHECK(t.kernel.size() == 6);  // t on the two constant lines, three vertices, the double root 1/2
}

TEST_CASE("solver on the coordinate cross") {
  auto xy = plane({"x", "y"});
  Element F = restrict_all(xy, parse_bipoly("x^2 + y^2"));
  auto p = build_gram_problem(xy, {0, 1}, F, 1);
  ProjectionOptions opt;
  opt.tol = 1e-10;
  auto sol = alternating_projections(p, opt);
  CHECK(sol.converged);
  CHECK(sol.psd_residual < 1e-10);
  CHECK(sol.affine_residual < 1e-10);
  auto ex = extract_summands(p, sol, F, xy, true);
  CHECK(ex.exact);
  CHECK(ex.residual == 0.0);
  SosCertificate cert;
  cert.summands = ex.summands;
  cert.target = F;
  CHECK(verify_certificate(xy, F, cert).passed());
}

TEST_CASE("identity Gram matrix on a two element basis") {
  auto line = plane({"y"});
  Element F = line_element({{0, P("t^2 + 1")}});
  auto p = build_gram_problem(line, {0}, F, 1);
  REQUIRE(p.N == 2);
  ProjectionOptions opt;
  opt.start = DMatrix::identity(2);
  auto sol = alternating_projections(p, opt);
  CHECK(sol.iterations == 0);
  auto ex = extract_summands(p, sol, F, line, true);
  CHECK(ex.exact);
  std::vector<UniPoly> polys;
  for (const auto& s : ex.summands) polys.push_back(std::get<Laurent>(s.at(0)).to_poly());
  UniPoly sum;
  for (const auto& q : polys) sum += q * q;
  CHECK(sum == P("t^2 + 1"));
}

TEST_CASE("known certificates start at iteration zero") {
  auto xy = plane({"x", "y"});
  Element F = restrict_all(xy, parse_bipoly("x^2 + y^2 + 1"));
  auto p = build_gram_problem(xy, {0, 1}, F, 1);
  // Summands (u, v) and (1, 1): G = c1 c1^T + c2 c2^T in the basis (1, u | 1, v).
  DMatrix G(4);
  const double c1[4] = {0, 1, 0, 1}, c2[4] = {1, 0, 1, 0};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) G(i, j) = c1[i] * c1[j] + c2[i] * c2[j];
  ProjectionOptions opt;
  opt.start = G;
  auto sol = alternating_projections(p, opt);
  CHECK(sol.converged);
  CHECK(sol.iterations == 0);
}

TEST_CASE("circle and line completion is feasible at degrees two and three") {
  auto cl = plane({"x^2 + y^2 - 1", "y"});
  Element F = restrict_all(cl, parse_bipoly("1 - x*y"));
  for (int d : {2, 3}) {
    auto p = build_gram_problem(cl, {0, 1}, F, d);
    auto sol = alternating_projections(p, ProjectionOptions{});
    CHECK(sol.converged);
    auto ex = extract_summands(p, sol, F, cl, true);
    CHECK(ex.residual <= 1e-7);
  }
}

TEST_CASE("inconsistent constraints never report convergence") {
  // Prescribing value 2 where F = 1 leaves no feasible Gram matrix.
  auto cl = plane({"x^2 + y^2 - 1", "y"});
  Element F = restrict_all(cl, parse_bipoly("1"));
  PrescribedValues pv;
  pv.at_point[cl.points[0].id] = {Rational(2)};
  auto p = build_gram_problem(cl, {0}, F, 1, &pv);
  auto sol = alternating_projections(p, ProjectionOptions{}, true);
  CHECK_FALSE(sol.converged);
  CHECK_THROWS(alternating_projections(p, ProjectionOptions{}));
}

TEST_CASE("solver runs are reproducible") {
  auto tri = plane({"y", "x", "1 - x - y"});
  Element W = line_element({{0, P("4*t^2 - 4*t + 1")}, {1, P("1")}, {2, P("1")}});
  auto p = build_gram_problem(tri, {0, 1, 2}, W, 2);
  ProjectionOptions opt;
  opt.max_iter = 300;
  opt.seed = 3;
  auto a = alternating_projections(p, opt, true), b = alternating_projections(p, opt, true);
  CHECK(a.trajectory == b.trajectory);
  CHECK(a.G.a == b.G.a);
  CHECK_FALSE(a.converged);
}

TEST_CASE("interior retries certify thin Gram families") {
  // q^2 + 1/9 with q of degree two on the circle: plain projections stall on the boundary.
  auto cl = plane({"x^2 + y^2 - 1", "y"});
  BiPoly q = parse_bipoly("x^2 - x*y + 2*y");
  Element F = restrict_all(cl, q * q + BiPoly::constant(Rational(1, 9)));
  auto p = build_gram_problem(cl, {0, 1}, F, 2);
  auto sol = solve_gram(p, ProjectionOptions{});
  CHECK(sol.converged);
  auto inner = solve_gram(p, ProjectionOptions{}, true);
  REQUIRE(inner.converged);
  CHECK(min_eigenvalue(inner.G) > -1e-9);
  auto ex = extract_summands(p, inner, F, cl, true);
  CHECK(ex.residual <= 1e-7);
}

TEST_CASE("feasibility persists when the Gram degree grows") {
  struct Case {
    std::vector<std::string> factors;
    const char* target;
    int from;
  };
  for (const Case& c : {Case{{"x", "y"}, "x^2 + y^2 + 1", 1}, Case{{"x^2 + y^2 - 1", "y"}, "1 - x*y", 2}}) {
    auto config = plane(c.factors);
    Element F = restrict_all(config, parse_bipoly(c.target));
    CAPTURE(c.target);
    for (int d = c.from; d <= c.from + 2; ++d) {
      CAPTURE(d);
      auto p = build_gram_problem(config, config.component_ids(), F, d);
      auto sol = solve_gram(p, ProjectionOptions{});
      REQUIRE(sol.converged);
      auto ex = extract_summands(p, sol, F, config, true);
      SosCertificate cert;
      cert.summands = ex.summands;
      cert.target = F;
      if (ex.exact) CHECK(verify_certificate(config, F, cert).passed());
      CHECK(ex.residual <= 1e-7);
    }
  }
}
