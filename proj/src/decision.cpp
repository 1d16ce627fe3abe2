#include "curvesos/decision.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "curvesos/config_graph.hpp"
#include "curvesos/error.hpp"

namespace curvesos {

namespace {

enum class Mode { Full, VirtuallyCompact, Unbounded };

struct Acc {
  std::set<std::string> failed;
  std::vector<std::string> flags;
  std::vector<std::string> notes;
  Json hint;

  void fail_with(const std::string& cond, Json h) {
    if (failed.insert(cond).second && hint.is_null()) hint = std::move(h);
  }
  void flag(std::string f) {
    if (std::find(flags.begin(), flags.end(), f) == flags.end()) flags.push_back(std::move(f));
  }
};

const std::vector<std::string> kOrder = {"NR-Points", "NR-Touch", "MT1", "MT2", "MT3", "MT4"};

Json cycle_json(const GraphCycle& c) {
  Json j;
  j["kind"] = "cycle";
  j["components"] = c.components;
  j["points"] = c.points;
  return j;
}

Json point_hint(const char* kind, const IntersectionPoint& p) {
  Json j;
  j["kind"] = kind;
  j["point"] = p.id;
  j["label"] = p.label;
  j["coordinates"] = p.coordinates;
  return j;
}

std::string ids_string(const std::vector<int>& ids, const CurveConfiguration& config) {
  std::string s = "{";
  for (size_t k = 0; k < ids.size(); ++k) {
    if (k) s += ", ";
    s += config.component(ids[k]).label;
  }
  return s + "}";
}

Verdict run(const CurveConfiguration& config, Mode mode) {
  config.validate();
  Acc acc;

  // Non-real components: no real points and no meeting with real components.
  std::set<int> nonreal, maybe_nonreal;
  for (const auto& c : config.components) {
    if (c.is_real == Tri::No) {
      nonreal.insert(c.id);
      if (c.has_real_points == Tri::Yes) {
        Json h;
        h["kind"] = "nonreal_component_with_real_points";
        h["component"] = c.id;
        acc.fail_with("NR-Points", h);
      } else if (c.has_real_points == Tri::Unknown) {
        acc.flag("has_real_points(" + c.label + ")");
      }
    } else if (c.is_real == Tri::Unknown) {
      maybe_nonreal.insert(c.id);
      acc.flag("is_real(" + c.label + ")");
    }
  }
  for (const auto& p : config.points) {
    bool touches_nr = std::any_of(p.components.begin(), p.components.end(), [&](int c) { return nonreal.count(c) > 0; });
    if (touches_nr) acc.fail_with("NR-Touch", point_hint("point_on_nonreal_component", p));
  }
  if (!nonreal.empty())
    acc.notes.push_back("non-real components " + ids_string({nonreal.begin(), nonreal.end()}, config) +
                        " checked for real points and contact, then dropped");

  std::vector<int> real_ids;
  for (const auto& c : config.components)
    if (!nonreal.count(c.id)) real_ids.push_back(c.id);
  auto among_real = [&](const IntersectionPoint& p) {
    return std::all_of(p.components.begin(), p.components.end(), [&](int c) { return nonreal.count(c) == 0; });
  };

  // MT1: every real singular point is an ordinary multiple point.
  for (int id : real_ids) {
    const Component& c = config.component(id);
    for (const auto& s : c.own_singularities) {
      if (s.ompit == Tri::No) {
        Json h;
        h["kind"] = "bad_singularity";
        h["component"] = id;
        h["label"] = s.label;
        h["coordinates"] = s.coordinates;
        acc.fail_with("MT1", h);
      } else if (s.ompit == Tri::Unknown) {
        acc.flag("ompit(" + s.label + ")");
      }
    }
  }
  for (const auto& p : config.points) {
    if (!among_real(p) || p.realness == Realness::NonReal) continue;
    if (p.ompit == Tri::No)
      acc.fail_with("MT1", point_hint("bad_singularity", p));
    else if (p.ompit == Tri::Unknown && p.realness == Realness::Real)
      acc.flag("ompit(" + p.label + ")");
  }

  // MT2: every intersection point is real.
  for (const auto& p : config.points) {
    if (!among_real(p)) continue;
    if (p.realness == Realness::NonReal)
      acc.fail_with("MT2", point_hint("nonreal_point", p));
    else if (p.realness == Realness::Unknown)
      acc.flag("realness(" + p.label + ")");
  }

  if (mode != Mode::VirtuallyCompact) {
    std::vector<int> cp_yes, cp_unknown;
    for (int id : real_ids) {
      Tri b = mode == Mode::Unbounded ? Tri::Yes : config.component(id).bounded_ring_trivial;
      if (b == Tri::Yes) cp_yes.push_back(id);
      if (b == Tri::Unknown) cp_unknown.push_back(id);
    }
    acc.notes.push_back("C' = " + ids_string(cp_yes, config));

    // MT3 on C'.
    for (int id : cp_yes) {
      const Component& c = config.component(id);
      if (c.rational_open_A1 == Tri::No) {
        Json h;
        h["kind"] = "not_open_subcurve_of_line";
        h["component"] = id;
        acc.fail_with("MT3", h);
      } else if (c.rational_open_A1 == Tri::Unknown) {
        acc.flag("rational_open_A1(" + c.label + ")");
      }
    }
    for (int id : cp_unknown) {
      acc.flag("bounded_ring_trivial(" + config.component(id).label + ")");
    }

    // MT4: forest test on C'; components of unknown status widen the test.
    if (!cp_yes.empty()) {
      ForestResult fr = is_forest(config, cp_yes);
      if (!fr.forest) {
        acc.fail_with("MT4", cycle_json(*fr.cycle));
      } else if (!cp_unknown.empty()) {
        std::vector<int> wide = cp_yes;
        wide.insert(wide.end(), cp_unknown.begin(), cp_unknown.end());
        if (!is_forest(config, wide).forest) acc.flag("forest(C' with undecided components)");
      }
    }
  }

  Verdict v;
  for (const auto& c : kOrder)
    if (acc.failed.count(c)) v.failed_conditions.push_back(c);
  v.unknown_flags = acc.flags;
  v.notes = acc.notes;
  if (!v.failed_conditions.empty()) {
    v.answer = Tri::No;
    v.witness_hint = acc.hint;
  } else if (!v.unknown_flags.empty()) {
    v.answer = Tri::Unknown;
  } else {
    v.answer = Tri::Yes;
  }
  const char* clause = mode == Mode::Full ? "main criterion (conditions MT1-MT4)"
                       : mode == Mode::VirtuallyCompact ? "virtually compact criterion (MT1, MT2)"
                                                        : "unbounded criterion (MT1-MT4 on all components)";
  v.notes.insert(v.notes.begin(), std::string("applied ") + clause);
  return v;
}

}  // namespace

Verdict decide_psd_eq_sos(const CurveConfiguration& config) { return run(config, Mode::Full); }

Verdict decide_virtually_compact(const CurveConfiguration& config) {
  for (const auto& c : config.components)
    if (c.bounded_ring_trivial != Tri::No)
      fail(ErrorCode::PreconditionViolated, "component " + c.label + " is not known to have a nontrivial bounded ring");
  return run(config, Mode::VirtuallyCompact);
}

Verdict decide_unbounded_case(const CurveConfiguration& config) {
  for (const auto& c : config.components)
    if (c.bounded_ring_trivial != Tri::Yes)
      fail(ErrorCode::PreconditionViolated, "component " + c.label + " is not known to have a trivial bounded ring");
  return run(config, Mode::Unbounded);
}

std::string explain(const Verdict& v) {
  std::ostringstream os;
  os << "answer: " << tri_name(v.answer) << "\n";
  for (const auto& n : v.notes) os << "note: " << n << "\n";
  auto describe = [](const std::string& c) -> std::string {
    if (c == "NR-Points") return "a non-real component carries real points";
    if (c == "NR-Touch") return "a non-real component meets another component";
    if (c == "MT1") return "ordinary-multiple-point clause: some real singular point is not an ordinary multiple point";
    if (c == "MT2") return "real-intersection clause: some intersection point is non-real";
    if (c == "MT3") return "open-subcurve clause: a component of C' is not an open subcurve of the affine line";
    if (c == "MT4") return "forest clause: the configuration graph of C' contains a cycle";
    return c;
  };
  for (const auto& c : v.failed_conditions) os << "failed " << c << ": " << describe(c) << "\n";
  for (const auto& f : v.unknown_flags) os << "undecided input: " << f << "\n";
  if (!v.witness_hint.is_null()) os << "witness hint: " << v.witness_hint.dump() << "\n";
  return os.str();
}

Json verdict_to_json(const Verdict& v) {
  Json j;
  j["answer"] = tri_name(v.answer);
  j["failed_conditions"] = v.failed_conditions;
  j["witness_hint"] = v.witness_hint;
  j["notes"] = v.notes;
  j["unknown_flags"] = v.unknown_flags;
  return j;
}

int verdict_exit_code(const Verdict& v) {
  switch (v.answer) {
    case Tri::Yes: return 0;
    case Tri::No: return 3;
    case Tri::Unknown: return 2;
  }
  return 2;
}

}  // namespace curvesos
