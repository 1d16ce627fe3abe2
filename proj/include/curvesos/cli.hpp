#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "curvesos/config_json.hpp"
#include "curvesos/configuration.hpp"
#include "curvesos/gram.hpp"
#include "curvesos/plane_frontend.hpp"

namespace curvesos {

struct RunConfig {
  std::string command;     // analyze | decide | certify | witness | verify | preorder | smp | gram
  std::string subcommand;  // preorder: saturation
  std::string input;
  std::string format = "json";
  double tol = 1e-9;
  int degree_cap = -1;  // -1: 2 deg F + 6
  unsigned seed = 0;
  std::string metadata;
};

// A curve given either as plane factors (with optional metadata) or as a configuration.
struct LoadedCurve {
  CurveConfiguration config;
  std::optional<PlaneCurveInput> plane;
};
LoadedCurve load_curve(const Json& j, const Json* metadata = nullptr);

// Target element: per-component strings, or one plane polynomial restricted to every component.
Element load_element(const LoadedCurve& curve, const Json& j);

// Runs one command; reports on `out`, diagnostics on `err`. Exit codes: 0 success / Yes /
// verified, 1 usage or parse error, 2 Unknown / inconclusive, 3 No / refuted.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);
// Same as `run` with the input (and optional metadata) already parsed; `cfg.input` is unused.
int run_json(const RunConfig& cfg, const Json& input, const Json* metadata, std::ostream& out, std::ostream& err);
int run_main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace curvesos
