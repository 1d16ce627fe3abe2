#include <doctest.h>

#include <random>

#include "configs.hpp"
#include "curvesos/certificates.hpp"
#include "curvesos/config_graph.hpp"
#include "curvesos/poly_text.hpp"
#include "curvesos/uni_sos.hpp"
#include "random_data.hpp"

using namespace curvesos;
using curvesos::testing::line_element;
using curvesos::testing::plane;
using curvesos::testing::random_poly;
using curvesos::testing::random_rational;
using curvesos::testing::restrict_all;
using curvesos::testing::thrown_code;

namespace {

UniPoly P(const char* s) { return parse_unipoly(s); }

UniPoly sum_squares(const std::vector<UniPoly>& fs) {
  UniPoly s;
  for (const auto& f : fs) s += f * f;
  return s;
}

// Sum of squares of the summands on one component.
ComponentFunction square_sum(const std::vector<Element>& summands, int component) {
  ComponentFunction s = cf_zero_like(summands.front().at(component));
  for (const auto& e : summands) s = cf_add(s, cf_mul(e.at(component), e.at(component)));
  return s;
}

bool is_identity(const RMatrix& M) { return M == rmatrix_identity(static_cast<int>(M.size())); }

}  // namespace

TEST_CASE("univariate two squares") {
  for (const char* s : {"t^2 + 1", "t^4 + 4", "4*t^2 - 4*t + 1", "5"}) {
    UniPoly p = P(s);
    auto r = uni_sos_two_squares(p);
    CHECK(r.exact);
    CHECK(r.squares.size() <= 2);
    CHECK(sum_squares(r.squares) == p);
  }
  // No Gaussian-integer split here: the exact Gram path returns a longer list.
  auto longer = uni_sos_two_squares(P("t^6 - 2*t^3 + 1 + t^2"));
  CHECK(longer.exact);
  CHECK(sum_squares(longer.squares) == P("t^6 - 2*t^3 + 1 + t^2"));
  // (2t - 1)^2 is rigid: the decomposition is (2t - 1, 0) up to sign.
  auto rigid = uni_sos_two_squares(P("4*t^2 - 4*t + 1"));
  int nonzero = 0;
  for (const auto& q : rigid.squares)
    if (!q.is_zero()) {
      ++nonzero;
      CHECK((q == P("2*t - 1") || q == P("1 - 2*t")));
    }
  CHECK(nonzero == 1);
  CHECK(thrown_code([] { uni_sos_two_squares(P("t^2 - 1")); }) == ErrorCode::NotPsd);
  CHECK(thrown_code([] { uni_sos_two_squares(P("t^3")); }) == ErrorCode::NotPsd);
}

TEST_CASE("two squares round trip on random psd polynomials") {
  std::mt19937 rng(41);
  for (int i = 0; i < 200; ++i) {
    UniPoly q1 = random_poly(rng, static_cast<int>(rng() % 4)), q2 = random_poly(rng, static_cast<int>(rng() % 4));
    UniPoly p = q1 * q1 + q2 * q2;
    auto r = uni_sos_two_squares(p);
    REQUIRE(r.exact);
    CHECK(sum_squares(r.squares) == p);
  }
}

TEST_CASE("Laurent decompositions on the punctured line") {
  Laurent f(-2, P("1 + t^4"));  // t^-2 + t^2
  auto r = laurent_sos(f);
  Laurent s;
  for (const auto& q : r.squares) s = s + q * q;
  CHECK(s == f);
}

TEST_CASE("Householder reflections") {
  CHECK(is_identity(householder_matrix({Rational(0)}, {Rational(0)})));
  CHECK(householder_matrix({Rational(1)}, {Rational(-1)}) == RMatrix{{Rational(-1)}});
  // (3/5, 4/5) onto (1, 0) by hand: u = (-2/5, 4/5), B = I - 2uu^T/|u|^2.
  RMatrix B = householder_matrix({Rational(3, 5), Rational(4, 5)}, {Rational(1), Rational(0)});
  CHECK(B == RMatrix{{Rational(3, 5), Rational(4, 5)}, {Rational(4, 5), Rational(-3, 5)}});
  CHECK(thrown_code([] { householder_matrix({Rational(1)}, {Rational(2)}); }) == ErrorCode::ValueMismatch);

  std::mt19937 rng(43);
  for (int i = 0; i < 100; ++i) {
    int n = 1 + static_cast<int>(rng() % 4);
    RVector v(n), w;
    for (auto& x : v) x = random_rational(rng);
    // A signed permutation keeps the norm.
    w = v;
    std::shuffle(w.begin(), w.end(), rng);
    for (auto& x : w)
      if (rng() % 2) x = -x;
    RMatrix H = householder_matrix(v, w);
    CHECK(is_identity(mul(transpose(H), H)));
    RMatrix col(n, RVector(1));
    for (int k = 0; k < n; ++k) col[k][0] = v[k];
    RMatrix Hv = mul(H, col);
    for (int k = 0; k < n; ++k) CHECK(Hv[k][0] == w[k]);
  }
}

TEST_CASE("gluing on the coordinate cross") {
  auto config = plane({"x", "y"});  // both charts pass through the origin at t = 0
  const int P0 = config.points.at(0).id;
  auto glue = [&](std::vector<UniPoly> fs, std::vector<UniPoly> gs, RMatrix* B) {
    GlueSide a{{0}, {}, 0}, b{{1}, {}, 1};
    for (auto& f : fs) a.summands.push_back(line_element({{0, f}}));
    for (auto& g : gs) b.summands.push_back(line_element({{1, g}}));
    return householder_glue(config, a, b, P0, B);
  };
  RMatrix B;
  auto out = glue({P("t")}, {P("t")}, &B);
  CHECK(is_identity(B));
  REQUIRE(out.size() == 1);

  out = glue({P("t + 1")}, {P("t - 1")}, &B);
  CHECK(B == RMatrix{{Rational(-1)}});
  REQUIRE(out.size() == 1);
  CHECK(cf_equal(out[0].at(0), Laurent(P("-t - 1"))));
  CHECK(cf_equal(out[0].at(1), Laurent(P("t - 1"))));
  CHECK(cf_equal(square_sum(out, 0), Laurent(P("t^2 + 2*t + 1"))));
  CHECK(cf_equal(square_sum(out, 1), Laurent(P("t^2 - 2*t + 1"))));

  out = glue({P("3/5"), P("4/5*t + 4/5")}, {P("t + 1"), P("t^2")}, &B);
  CHECK(is_identity(mul(transpose(B), B)));
  for (const auto& e : out) CHECK(evaluate(e.at(0), Rational(0)) == evaluate(e.at(1), Rational(0)));
  CHECK(cf_equal(square_sum(out, 0), Laurent(P("16/25*t^2 + 32/25*t + 1"))));
  CHECK(cf_equal(square_sum(out, 1), Laurent(P("t^4 + t^2 + 2*t + 1"))));

  CHECK(thrown_code([&] { glue({P("2")}, {P("1")}, nullptr); }) == ErrorCode::ValueMismatch);
}

TEST_CASE("forest assembly") {
  auto xy = plane({"x", "y"});
  auto order = *attachment_order(xy, {0, 1}).order;
  for (const char* target : {"x^2 + y^2", "x^2 + y^2 + 1", "x^4 + 2*y^2 + 3"}) {
    Element F = restrict_all(xy, parse_bipoly(target));
    auto cert = forest_assemble(xy, order, F);
    CHECK(cert.exact);
    auto rep = verify_certificate(xy, F, cert);
    CHECK_MESSAGE(rep.passed(), target);
  }
  // u^2 + v^2 needs a single summand (t on both lines).
  auto single = forest_assemble(xy, order, restrict_all(xy, parse_bipoly("x^2 + y^2")));
  int nonzero = 0;
  for (const auto& s : single.summands) nonzero += !(cf_is_zero(s.at(0)) && cf_is_zero(s.at(1)));
  CHECK(nonzero == 1);

  // Abstract star: three lines through one ordinary triple point at t = 1.
  auto star = testing::abstract_lines(3, {{0, 1, 2}});
  auto sorder = *attachment_order(star, {0, 1, 2}).order;
  Element F = line_element({{0, P("t^2")}, {1, P("t^2")}, {2, P("t^2")}});
  auto cert = forest_assemble(star, sorder, F);
  CHECK(verify_certificate(star, F, cert).passed());
  nonzero = 0;
  for (const auto& s : cert.summands) nonzero += !cf_is_zero(s.at(0)) || !cf_is_zero(s.at(1)) || !cf_is_zero(s.at(2));
  CHECK(nonzero == 1);
}

TEST_CASE("value-prescribed completion on the circle") {
  auto config = plane({"x^2 + y^2 - 1", "y"});
  Element F = restrict_all(config, parse_bipoly("1"));
  std::map<int, RVector> at;
  for (const auto& p : config.points) at[p.id] = {Rational(1)};
  auto done = compact_complete(config, {0}, F, at);
  CHECK(done.exact);
  CHECK(done.residual == 0.0);
  for (const auto& p : config.points) CHECK(values_at(config, done.summands, 0, p.id) == RVector{Rational(1)});

  std::map<int, RVector> bad;
  bad[config.points[0].id] = {Rational(2)};
  CHECK(thrown_code([&] { compact_complete(config, {0}, F, bad); }) == ErrorCode::ValueNormMismatch);
}

TEST_CASE("full certification") {
  auto cl = plane({"x^2 + y^2 - 1", "y"});
  for (const char* target : {"y^2", "1 - x*y", "x^2 + 2"}) {
    Element F = restrict_all(cl, parse_bipoly(target));
    auto cert = full_certify(cl, F);
    auto rep = verify_certificate(cl, F, cert);
    CHECK_MESSAGE(rep.passed(), target);
  }

  // Targets built from two random squares of glued elements on xy = 0.
  auto xy = plane({"x", "y"});
  std::mt19937 rng(47);
  for (int i = 0; i < 20; ++i) {
    Element F = line_element({{0, UniPoly()}, {1, UniPoly()}});
    for (int k = 0; k < 2; ++k) {
      UniPoly p = random_poly(rng, 1 + static_cast<int>(rng() % 3)), q = random_poly(rng, static_cast<int>(rng() % 3));
      q += UniPoly::constant(p(Rational(0)) - q(Rational(0)));  // same value at the origin
      F[0] = cf_add(F[0], Laurent(p * p));
      F[1] = cf_add(F[1], Laurent(q * q));
    }
    auto cert = full_certify(xy, F);
    CHECK(cert.exact);
    CHECK(verify_certificate(xy, F, cert).passed());
  }

  auto tri = plane({"y", "x", "1 - x - y"});
  CHECK(thrown_code([&] { full_certify(tri, restrict_all(tri, parse_bipoly("1"))); }) == ErrorCode::Refused);
  CHECK(thrown_code([&] { full_certify(xy, restrict_all(xy, parse_bipoly("x"))); }) ==
        ErrorCode::NotPsdOnComponent);
}

TEST_CASE("certificate verification catches tampering") {
  auto xy = plane({"x", "y"});
  Element F = line_element({{0, P("t^2 + 2*t + 1")}, {1, P("t^2 - 2*t + 1")}});
  SosCertificate cert;
  cert.target = F;
  cert.summands = {line_element({{0, P("-t - 1")}, {1, P("t - 1")}})};
  CHECK(verify_certificate(xy, F, cert).passed());

  SosCertificate bad = cert;
  bad.summands[0][0] = Laurent(P("t + 1"));  // same square, wrong value at the origin
  auto rep = verify_certificate(xy, F, bad);
  CHECK_FALSE(rep.passed());
  bool value_failure = false;
  for (const auto& c : rep.checks) value_failure |= !c.passed && c.name.find("value") != std::string::npos;
  CHECK(value_failure);

  // Round trip through JSON.
  auto back = certificate_from_json(xy, certificate_to_json(xy, cert));
  CHECK(verify_certificate(xy, F, back).passed());
}

TEST_CASE("spectral factorization on the circle cross-checks the exact path") {
  auto circle = plane({"x^2 + y^2 - 1"});
  for (const char* target : {"2 + x", "3 + x*y - y", "x^2 + 1/2"}) {
    Element F = restrict_all(circle, parse_bipoly(target));
    const auto& f = std::get<CircleFn>(F.at(0));
    CHECK(circle_fn_psd(f));
    auto fr = fejer_riesz_circle(f);
    CHECK(fr.residual < 1e-9);
    SosCertificate cert;
    cert.target = F;
    cert.exact = false;
    cert.summands = {Element{{0, fr.A}}, Element{{0, fr.B}}};
    auto rep = verify_certificate(circle, F, cert, 1e-9);
    CHECK(rep.passed());
    CHECK_FALSE(rep.exact);
    // The exact route certifies the same targets.
    CHECK(verify_certificate(circle, F, full_certify(circle, F)).passed());
  }
  CHECK_FALSE(circle_fn_psd(CircleFn{P("t"), UniPoly()}));
}
