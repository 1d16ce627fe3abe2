#pragma once

#include <string>
#include <vector>

#include "curvesos/config_json.hpp"
#include "curvesos/configuration.hpp"

namespace curvesos {

struct Verdict {
  Tri answer = Tri::Unknown;
  std::vector<std::string> failed_conditions;  // subset of MT1..MT4, NR-Points, NR-Touch
  Json witness_hint;                           // null when absent
  std::vector<std::string> notes;
  std::vector<std::string> unknown_flags;
};

// Main criterion: non-real preprocessing, then MT1 (ordinary multiple points),
// MT2 (real intersections), MT3 (rational open subcurves of the line on C'),
// MT4 (forest on C').
Verdict decide_psd_eq_sos(const CurveConfiguration& config);

// Every component has a nontrivial bounded ring: only MT1 and MT2 apply.
Verdict decide_virtually_compact(const CurveConfiguration& config);

// Every component has a trivial bounded ring: MT3 and MT4 apply to all components.
Verdict decide_unbounded_case(const CurveConfiguration& config);

std::string explain(const Verdict& v);
Json verdict_to_json(const Verdict& v);

// 0 for Yes, 3 for No, 2 for Unknown.
int verdict_exit_code(const Verdict& v);

}  // namespace curvesos
