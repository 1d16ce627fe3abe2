#include <doctest.h>

#include <numeric>
#include <random>

#include "configs.hpp"
#include "curvesos/config_graph.hpp"
#include "curvesos/decision.hpp"

using namespace curvesos;
using curvesos::testing::abstract_lines;
using curvesos::testing::plane;
using curvesos::testing::relabel;

namespace {

struct Case {
  std::vector<std::string> factors;
  Tri answer;
  std::vector<std::string> failed;
};

const std::vector<Case>& fixture_cases() {
  static const std::vector<Case> cases = {
      {{"y", "x", "1 - x - y"}, Tri::No, {"MT4"}},
      {{"y - x^2", "y + 1"}, Tri::No, {"MT2"}},
      {{"y - x^2", "y"}, Tri::No, {"MT1"}},
      {{"y - x^2", "y - 1"}, Tri::No, {"MT4"}},
      {{"x^2 + y^2 - 1", "y"}, Tri::Yes, {}},
      {{"x", "y"}, Tri::Yes, {}},
      {{"x^2 + y^2 - 1", "x^2 - 2*x + y^2"}, Tri::Yes, {}},
      {{"x^2 + y^2 - 1", "x^2 - 6*x + y^2 + 8"}, Tri::No, {"MT2"}},
      {{"x*y - 1", "x - y"}, Tri::No, {"MT4"}},
      {{"y", "y^2 - x^3"}, Tri::No, {"MT1"}},
      {{"x^2 + y^2 + 1", "x^2 + y^2 - 1"}, Tri::Yes, {}},
  };
  return cases;
}

}  // namespace

TEST_CASE("fixture verdicts") {
  for (const auto& c : fixture_cases()) {
    auto v = decide_psd_eq_sos(plane(c.factors));
    CAPTURE(c.factors[0]);
    CHECK(v.answer == c.answer);
    CHECK(v.failed_conditions == c.failed);
    if (v.answer == Tri::No) CHECK_FALSE(v.failed_conditions.empty());
  }
}

TEST_CASE("specialized deciders") {
  auto circles = plane({"x^2 + y^2 - 1", "x^2 - 2*x + y^2"});
  CHECK(decide_virtually_compact(circles).answer == Tri::Yes);
  auto far = decide_virtually_compact(plane({"x^2 + y^2 - 1", "x^2 - 6*x + y^2 + 8"}));
  CHECK(far.answer == Tri::No);
  CHECK(far.failed_conditions == std::vector<std::string>{"MT2"});
  CHECK(decide_virtually_compact(plane({"x^2 + y^2 - 1"})).answer == Tri::Yes);

  CHECK(decide_unbounded_case(plane({"x", "y"})).answer == Tri::Yes);
  auto hyp = decide_unbounded_case(plane({"x*y - 1", "x - y"}));
  CHECK(hyp.answer == Tri::No);
  CHECK(hyp.failed_conditions == std::vector<std::string>{"MT4"});
  CHECK(decide_unbounded_case(abstract_lines(3, {{0, 1, 2}})).answer == Tri::Yes);

  CHECK_THROWS(decide_unbounded_case(circles));
  CHECK_THROWS(decide_virtually_compact(plane({"x", "y"})));
}

TEST_CASE("main criterion agrees with the specialized deciders") {
  for (const auto& c : fixture_cases()) {
    auto config = plane(c.factors);
    auto cp = extract_C_prime(config);
    if (!cp.unknown.empty()) continue;
    auto v = decide_psd_eq_sos(config);
    if (cp.no.empty()) CHECK(decide_unbounded_case(config).answer == v.answer);
    if (cp.yes.empty()) CHECK(decide_virtually_compact(config).answer == v.answer);
  }
}

TEST_CASE("closed subcurves of a Yes curve are Yes") {
  for (const auto& c : fixture_cases()) {
    if (c.answer != Tri::Yes) continue;
    auto config = plane(c.factors);
    const int n = static_cast<int>(config.components.size());
    for (int mask = 1; mask < (1 << n); ++mask) {
      std::vector<int> ids;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) ids.push_back(i);
      CHECK(decide_psd_eq_sos(config.induced(ids)).answer == Tri::Yes);
    }
  }
}

TEST_CASE("verdicts are invariant under relabeling") {
  std::mt19937 rng(37);
  for (const auto& c : fixture_cases()) {
    auto config = plane(c.factors);
    std::vector<int> perm(config.components.size());
    std::iota(perm.begin(), perm.end(), 0);
    for (int k = 0; k < 3; ++k) {
      std::shuffle(perm.begin(), perm.end(), rng);
      auto moved = relabel(config, perm);
      std::reverse(moved.points.begin(), moved.points.end());
      for (size_t i = 0; i < moved.points.size(); ++i) moved.points[i].id = static_cast<int>(i);
      auto a = decide_psd_eq_sos(config), b = decide_psd_eq_sos(moved);
      CHECK(a.answer == b.answer);
      CHECK(a.failed_conditions == b.failed_conditions);
    }
  }
}

TEST_CASE("unknown inputs") {
  // A singular point of undecided type makes MT1 undecided.
  auto config = abstract_lines(2, {{0, 1}});
  config.points[0].ompit = Tri::Unknown;
  auto v = decide_psd_eq_sos(config);
  CHECK(v.answer == Tri::Unknown);
  CHECK_FALSE(v.unknown_flags.empty());

  // A definite failure wins over an undecided flag.
  auto tri = abstract_lines(3, {{0, 1}, {1, 2}, {0, 2}});
  tri.components[0].rational_open_A1 = Tri::Unknown;
  CHECK(decide_psd_eq_sos(tri).answer == Tri::No);
}

TEST_CASE("explanations name the failing clause") {
  CHECK(explain(decide_psd_eq_sos(plane({"y", "x", "1 - x - y"}))).find("forest") != std::string::npos);
  CHECK(explain(decide_psd_eq_sos(plane({"x^2 + y^2 - 1", "y"}))).find("C' = {C1}") != std::string::npos);
  CHECK(explain(decide_psd_eq_sos(plane({"y", "y^2 - x^3"}))).find("ordinary-multiple-point") !=
        std::string::npos);
  CHECK(verdict_exit_code(decide_psd_eq_sos(plane({"x", "y"}))) == 0);
  CHECK(verdict_exit_code(decide_psd_eq_sos(plane({"y", "x", "1 - x - y"}))) == 3);
}
