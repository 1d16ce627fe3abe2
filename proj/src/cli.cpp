#include "curvesos/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "curvesos/certificates.hpp"
#include "curvesos/config_graph.hpp"
#include "curvesos/decision.hpp"
#include "curvesos/error.hpp"
#include "curvesos/poly_text.hpp"
#include "curvesos/preorder.hpp"

namespace curvesos {

LoadedCurve load_curve(const Json& j, const Json* metadata) {
  LoadedCurve out;
  if (j.contains("components")) {
    out.config = configuration_from_json(j);
    out.config.validate();
    return out;
  }
  if (!j.contains("factors")) fail(ErrorCode::InvalidInput, "curve needs \"factors\" or \"components\"");
  Json pj = j;
  if (metadata)
    for (const auto& [k, v] : metadata->items()) pj["metadata"][k] = v;
  out.plane = plane_input_from_json(pj);
  out.config = build_configuration(*out.plane);
  return out;
}

Element load_element(const LoadedCurve& curve, const Json& j) {
  if (curve.plane && j.is_string()) {
    BiPoly F = parse_bipoly(j.get<std::string>());
    Element e;
    for (const auto& c : curve.config.components) {
      if (!c.chart.has_embedding() && c.chart.kind != ChartKind::UnitCircle)
        fail(ErrorCode::Unsupported, "cannot restrict to " + c.label + ": no parametrization");
      e[c.id] = restrict_to_component(F, c);
    }
    return e;
  }
  return element_from_json(curve.config, j);
}

namespace {

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, path + ": " + e.what());
  }
}

const Json& curve_json(const Json& j) { return j.contains("curve") ? j["curve"] : j; }

// key: value lines for the text format.
void render_text(const Json& j, std::ostream& os, const std::string& prefix = "") {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured()) {
        os << prefix << k << ":\n";
        render_text(v, os, prefix + "  ");
      } else {
        os << prefix << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_structured()) {
        os << prefix << "-\n";
        render_text(v, os, prefix + "  ");
      } else {
        os << prefix << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else {
    os << prefix << j.dump() << "\n";
  }
}

void emit(const RunConfig& cfg, const Json& j, std::ostream& out) {
  if (cfg.format == "text") render_text(j, out);
  else out << j.dump(2) << "\n";
}

int tri_exit(Tri t) { return t == Tri::Yes ? 0 : (t == Tri::No ? 3 : 2); }

int error_exit(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidInput: return 1;
    case ErrorCode::Refused:
    case ErrorCode::NotPsd:
    case ErrorCode::NotPsdOnComponent:
    case ErrorCode::ValueMismatch:
    case ErrorCode::ValueNormMismatch: return 3;
    default: return 2;
  }
}

CompletionOptions completion_options(const RunConfig& cfg) {
  CompletionOptions o;
  o.degree_cap = cfg.degree_cap;
  o.projection.tol = cfg.tol;
  o.projection.seed = cfg.seed;
  return o;
}

int cmd_analyze(const RunConfig& cfg, const Json& in, const Json* meta, std::ostream& out) {
  LoadedCurve curve = load_curve(curve_json(in), meta);
  Json j;
  j["configuration"] = to_json(curve.config);
  if (curve.plane) {
    j["intersections"] = point_records_to_json(pairwise_intersections(*curve.plane));
    Json inf = Json::array();
    for (const auto& f : curve.plane->factors) inf.push_back(infinity_report_to_json(points_at_infinity(f)));
    j["infinity"] = inf;
  }
  Json comps = Json::array();
  for (const auto& p : connectivity_report(curve.config)) {
    Json e;
    e["components"] = p.components;
    e["bounded_ring_trivial"] = tri_name(p.bounded_ring_trivial);
    comps.push_back(e);
  }
  j["connected_pieces"] = comps;
  emit(cfg, j, out);
  return 0;
}

int cmd_decide(const RunConfig& cfg, const Json& in, const Json* meta, std::ostream& out) {
  LoadedCurve curve = load_curve(curve_json(in), meta);
  Verdict v = decide_psd_eq_sos(curve.config);
  if (cfg.format == "text") out << explain(v);
  else out << verdict_to_json(v).dump(2) << "\n";
  return verdict_exit_code(v);
}

int cmd_certify(const RunConfig& cfg, const Json& in, const Json* meta, std::ostream& out) {
  LoadedCurve curve = load_curve(curve_json(in), meta);
  if (!in.contains("target")) fail(ErrorCode::InvalidInput, "certify needs a \"target\"");
  Element F = load_element(curve, in["target"]);
  SosCertificate cert = full_certify(curve.config, F, completion_options(cfg));
  ExactReport r = verify_certificate(curve.config, F, cert, cfg.tol);
  Json j;
  j["curve"] = curve_json(in);
  j["target"] = in["target"];
  j["certificate"] = certificate_to_json(curve.config, cert);
  j["verification"] = report_to_json(r);
  emit(cfg, j, out);
  return report_exit_code(r);
}

int cmd_witness(const RunConfig& cfg, const Json& in, const Json* meta, std::ostream& out, std::ostream& err) {
  LoadedCurve curve = load_curve(curve_json(in), meta);
  const CurveConfiguration& config = curve.config;
  Verdict v = decide_psd_eq_sos(config);
  if (v.answer != Tri::No) {
    err << "no witness: psd=sos verdict is " << tri_name(v.answer) << "\n";
    return 2;
  }
  auto failed = [&](const std::string& c) {
    return std::find(v.failed_conditions.begin(), v.failed_conditions.end(), c) != v.failed_conditions.end();
  };
  std::optional<ObstructionWitness> w;
  if (failed("MT4")) {
    CPrime cp = extract_C_prime(config);
    ForestResult fr = is_forest(config, cp.yes);
    if (fr.cycle) w = cycle_witness(config, *fr.cycle);
  }
  if (!w && failed("MT2")) {
    for (const auto& p : config.points) {
      if (p.realness != Realness::NonReal || p.components.size() != 2) continue;
      w = nonreal_intersection_witness(config, p.components[0], p.components[1]);
      break;
    }
  }
  if (!w) {
    err << "no explicit witness construction for the failed conditions\n";
    return 2;
  }
  ExactReport r = verify_witness(config, *w);
  Json j;
  j["curve"] = curve_json(in);
  j["verdict"] = verdict_to_json(v);
  j["witness"] = witness_to_json(config, *w);
  j["verification"] = report_to_json(r);
  if (w->kind == WitnessKind::TriangleIntro) j["triangle_search"] = triangle_search_to_json(triangle_bruteforce(config, w->element));
  emit(cfg, j, out);
  return report_exit_code(r);
}

int cmd_verify(const RunConfig& cfg, const Json& in, const Json* meta, std::ostream& out) {
  LoadedCurve curve = load_curve(curve_json(in), meta);
  ExactReport r;
  if (in.contains("certificate")) {
    if (!in.contains("target")) fail(ErrorCode::InvalidInput, "verify needs the certified \"target\"");
    Element F = load_element(curve, in["target"]);
    SosCertificate cert = certificate_from_json(curve.config, in["certificate"]);
    r = verify_certificate(curve.config, F, cert, cfg.tol);
  } else if (in.contains("witness")) {
    r = verify_witness(curve.config, witness_from_json(curve.config, in["witness"]));
  } else {
    fail(ErrorCode::InvalidInput, "verify needs a \"certificate\" or a \"witness\"");
  }
  emit(cfg, report_to_json(r), out);
  return report_exit_code(r);
}

int cmd_saturation(const RunConfig& cfg, const Json& in, const Json* meta, std::ostream& out) {
  SaturationVerdict v;
  if (in.contains("curve")) {
    LoadedCurve curve = load_curve(in["curve"], meta);
    std::vector<Element> H;
    for (const auto& g : in.at("generators")) H.push_back(load_element(curve, g));
    v = prop45_check(curve.config, H);
  } else {
    std::vector<UniPoly> H;
    for (const auto& g : in.at("generators")) H.push_back(parse_unipoly(g.get<std::string>()));
    v = km_saturation(H);
  }
  emit(cfg, saturation_to_json(v), out);
  switch (v.answer) {
    case SaturationVerdict::Answer::Saturated: return 0;
    case SaturationVerdict::Answer::NotSaturated: return 3;
    default: return 2;
  }
}

int cmd_smp(const RunConfig& cfg, const Json& in, const Json* meta, std::ostream& out) {
  if (in.contains("phi")) {
    std::vector<BiPoly> H;
    for (const auto& g : in.at("generators")) H.push_back(parse_bipoly(g.get<std::string>()));
    std::vector<Rational> samples;
    for (const auto& s : in.at("samples")) samples.push_back(parse_rational(s.is_string() ? s.get<std::string>() : s.dump()));
    auto reports = fibre_analysis(H, parse_bipoly(in["phi"].get<std::string>()), samples);
    Tri agg = Tri::Yes;
    for (const auto& r : reports) {
      if (r.verdict.answer == Tri::No) agg = Tri::No;
      else if (r.verdict.answer == Tri::Unknown && agg == Tri::Yes) agg = Tri::Unknown;
    }
    Json j;
    j["answer"] = tri_name(agg);
    j["fibres"] = fibre_reports_to_json(reports);
    emit(cfg, j, out);
    return tri_exit(agg);
  }
  LoadedCurve curve = load_curve(in.at("curve"), meta);
  std::vector<Element> H;
  if (in.contains("generators"))
    for (const auto& g : in["generators"]) H.push_back(load_element(curve, g));
  SmpVerdict v = smp_curve(curve.config, H);
  emit(cfg, smp_to_json(v), out);
  return tri_exit(v.answer);
}

int cmd_gram(const RunConfig& cfg, const Json& in, const Json* meta, std::ostream& out) {
  LoadedCurve curve = load_curve(curve_json(in), meta);
  Element F = load_element(curve, in.at("target"));
  std::vector<int> comps = curve.config.component_ids();
  if (in.contains("components")) comps = in["components"].get<std::vector<int>>();
  int degree = in.value("degree", 1);
  GramProblem p = build_gram_problem(curve.config, comps, F, degree);
  ProjectionOptions opt;
  opt.tol = cfg.tol;
  opt.seed = cfg.seed;
  GramSolution s = solve_gram(p, opt);
  Json j;
  j["problem"] = gram_problem_to_json(p, curve.config);
  j["solution"] = gram_solution_to_json(s);
  if (s.converged) {
    ExtractedSummands ex = extract_summands(p, s, F, curve.config, true);
    Json sm = Json::array();
    for (const auto& e : ex.summands) sm.push_back(element_to_json(curve.config, e));
    j["summands"] = sm;
    j["exact"] = ex.exact;
    j["residual"] = ex.residual;
  }
  emit(cfg, j, out);
  return s.converged ? 0 : 2;
}

}  // namespace

namespace {

template <class Body>
int guarded(std::ostream& err, Body body) {
  try {
    return body();
  } catch (const Error& e) {
    Json d;
    d["error"] = error_code_name(e.code());
    d["message"] = e.what();
    err << d.dump() << "\n";
    return error_exit(e.code());
  } catch (const std::exception& e) {
    Json d;
    d["error"] = "InternalError";
    d["message"] = e.what();
    err << d.dump() << "\n";
    return 1;
  }
}

int dispatch(const RunConfig& cfg, const Json& in, const Json* metap, std::ostream& out, std::ostream& err) {
  if (cfg.tol <= 0) fail(ErrorCode::InvalidInput, "--tol must be positive");
  if (cfg.degree_cap == 0 || cfg.degree_cap < -1) fail(ErrorCode::InvalidInput, "--degree-cap must be >= 1");
  if (cfg.format != "json" && cfg.format != "text") fail(ErrorCode::InvalidInput, "--format must be json or text");
  const std::string& c = cfg.command;
  if (c == "analyze") return cmd_analyze(cfg, in, metap, out);
  if (c == "decide") return cmd_decide(cfg, in, metap, out);
  if (c == "certify") return cmd_certify(cfg, in, metap, out);
  if (c == "witness") return cmd_witness(cfg, in, metap, out, err);
  if (c == "verify") return cmd_verify(cfg, in, metap, out);
  if (c == "preorder") return cmd_saturation(cfg, in, metap, out);
  if (c == "smp") return cmd_smp(cfg, in, metap, out);
  if (c == "gram") return cmd_gram(cfg, in, metap, out);
  fail(ErrorCode::InvalidInput, "unknown command " + c);
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Json in = read_json(cfg.input);
    Json meta;
    const Json* metap = nullptr;
    if (!cfg.metadata.empty()) {
      meta = read_json(cfg.metadata);
      metap = &meta;
    }
    return dispatch(cfg, in, metap, out, err);
  });
}

int run_json(const RunConfig& cfg, const Json& input, const Json* metadata, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] { return dispatch(cfg, input, metadata, out, err); });
}

int run_main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sums of squares on reducible real affine curves"};
  app.require_subcommand(1);
  RunConfig cfg;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", cfg.input, "input JSON file")->required();
    sub->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--tol", cfg.tol, "numeric tolerance");
    sub->add_option("--degree-cap", cfg.degree_cap, "largest Gram degree tried");
    sub->add_option("--seed", cfg.seed, "solver seed");
    sub->add_option("--metadata", cfg.metadata, "factor metadata JSON");
  };
  for (const char* name : {"analyze", "decide", "certify", "witness", "verify", "smp", "gram"}) {
    auto* sub = app.add_subcommand(name);
    add_common(sub);
    sub->callback([&cfg, name] { cfg.command = name; });
  }
  auto* pre = app.add_subcommand("preorder", "preordering checks");
  pre->require_subcommand(1);
  auto* sat = pre->add_subcommand("saturation", "saturation of a finitely generated preordering");
  add_common(sat);
  sat->callback([&cfg] {
    cfg.command = "preorder";
    cfg.subcommand = "saturation";
  });
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }
  return run(cfg, out, err);
}

}  // namespace curvesos
