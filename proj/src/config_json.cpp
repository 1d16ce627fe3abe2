#include "curvesos/config_json.hpp"

#include "curvesos/error.hpp"
#include "curvesos/poly_text.hpp"

namespace curvesos {

namespace {

Json chart_to_json(const Chart& ch) {
  Json j;
  j["kind"] = chart_kind_name(ch.kind);
  if (ch.kind == ChartKind::None) return j;
  if (ch.kind == ChartKind::UnitCircle) {
    j["center"] = Json::array({to_string(ch.cx), to_string(ch.cy)});
    j["radius"] = to_string(ch.r);
    return j;
  }
  j["param"] = ch.param;
  if (ch.x) j["x"] = ch.x->to_string(ch.param);
  if (ch.y) j["y"] = ch.y->to_string(ch.param);
  if (ch.inverse)
    j["inverse"] = Json::array({to_string(ch.inverse->a), to_string(ch.inverse->b), to_string(ch.inverse->c)});
  if (!ch.excluded.empty()) {
    Json ex = Json::array();
    for (const auto& e : ch.excluded) ex.push_back(to_string(e));
    j["excluded"] = ex;
  }
  return j;
}

Chart chart_from_json(const Json& j) {
  Chart ch;
  ch.kind = parse_chart_kind(j.value("kind", std::string("none")));
  if (ch.kind == ChartKind::None) return ch;
  if (ch.kind == ChartKind::UnitCircle) {
    ch.cx = parse_rational(j.at("center").at(0).get<std::string>());
    ch.cy = parse_rational(j.at("center").at(1).get<std::string>());
    ch.r = parse_rational(j.at("radius").get<std::string>());
    return ch;
  }
  ch.param = j.value("param", std::string("t"));
  auto laurent = [](const std::string& s) {
    LaurentText l = parse_laurent(s);
    return Laurent(l.low, l.p);
  };
  if (j.contains("x")) ch.x = laurent(j["x"].get<std::string>());
  if (j.contains("y")) ch.y = laurent(j["y"].get<std::string>());
  if (j.contains("inverse")) {
    const Json& in = j["inverse"];
    ch.inverse = LinearForm{parse_rational(in.at(0).get<std::string>()),
                            parse_rational(in.at(1).get<std::string>()),
                            parse_rational(in.at(2).get<std::string>())};
  }
  if (j.contains("excluded"))
    for (const auto& e : j["excluded"]) ch.excluded.push_back(parse_rational(e.get<std::string>()));
  if (ch.kind == ChartKind::PuncturedLine && ch.excluded.empty()) ch.excluded.push_back(Rational(0));
  return ch;
}

Json chart_point_json(const ChartPoint& p) {
  if (auto* t = std::get_if<Rational>(&p)) return to_string(*t);
  const auto& xy = std::get<std::pair<Rational, Rational>>(p);
  return Json::array({to_string(xy.first), to_string(xy.second)});
}

ChartPoint chart_point_from_json(const Json& j) {
  if (j.is_array())
    return std::make_pair(parse_rational(j.at(0).get<std::string>()),
                          parse_rational(j.at(1).get<std::string>()));
  if (j.is_number_integer()) return Rational(j.get<long>());
  return parse_rational(j.get<std::string>());
}

Tri tri_field(const Json& j, const char* key) {
  if (!j.contains(key)) return Tri::Unknown;
  const Json& v = j[key];
  if (v.is_boolean()) return tri_from_bool(v.get<bool>());
  return parse_tri(v.get<std::string>());
}

}  // namespace

Json to_json(const Component& c) {
  Json j;
  j["id"] = c.id;
  j["label"] = c.label;
  if (c.equation) j["equation"] = c.equation->to_string();
  j["is_real"] = tri_name(c.is_real);
  j["has_real_points"] = tri_name(c.has_real_points);
  j["bounded_ring_trivial"] = tri_name(c.bounded_ring_trivial);
  j["rational_open_A1"] = tri_name(c.rational_open_A1);
  Json sing = Json::array();
  for (const auto& s : c.own_singularities) {
    Json e;
    e["label"] = s.label;
    e["coordinates"] = s.coordinates;
    e["ompit"] = tri_name(s.ompit);
    sing.push_back(e);
  }
  j["own_singularities"] = sing;
  j["chart"] = chart_to_json(c.chart);
  if (!c.notes.empty()) j["notes"] = c.notes;
  return j;
}

Json to_json(const IntersectionPoint& p) {
  Json j;
  j["id"] = p.id;
  j["label"] = p.label;
  j["realness"] = realness_name(p.realness);
  j["components"] = p.components;
  j["ompit"] = tri_name(p.ompit);
  if (!p.coordinates.empty()) j["coordinates"] = p.coordinates;
  if (p.plane) j["plane"] = Json::array({to_string(p.plane->first), to_string(p.plane->second)});
  if (!p.params.empty()) {
    Json ps = Json::object();
    for (const auto& [c, v] : p.params) ps[std::to_string(c)] = chart_point_json(v);
    j["params"] = ps;
  }
  if (p.in_S) j["in_S"] = *p.in_S;
  return j;
}

Json to_json(const CurveConfiguration& config) {
  Json j;
  Json cs = Json::array();
  for (const auto& c : config.components) cs.push_back(to_json(c));
  Json ps = Json::array();
  for (const auto& p : config.points) ps.push_back(to_json(p));
  j["components"] = cs;
  j["points"] = ps;
  return j;
}

CurveConfiguration configuration_from_json(const Json& j) {
  CurveConfiguration config;
  int next = 0;
  for (const auto& jc : j.at("components")) {
    Component c;
    c.id = jc.value("id", next);
    next = c.id + 1;
    c.label = jc.value("label", "C" + std::to_string(c.id));
    if (jc.contains("equation")) c.equation = parse_bipoly(jc["equation"].get<std::string>());
    c.is_real = tri_field(jc, "is_real");
    c.has_real_points = tri_field(jc, "has_real_points");
    if (c.is_real == Tri::Yes && !jc.contains("has_real_points")) c.has_real_points = Tri::Yes;
    c.bounded_ring_trivial = tri_field(jc, "bounded_ring_trivial");
    c.rational_open_A1 = tri_field(jc, "rational_open_A1");
    if (jc.contains("own_singularities"))
      for (const auto& s : jc["own_singularities"])
        c.own_singularities.push_back({s.value("label", std::string()), s.value("coordinates", std::string()),
                                       tri_field(s, "ompit")});
    if (jc.contains("chart")) c.chart = chart_from_json(jc["chart"]);
    config.components.push_back(std::move(c));
  }
  int pid = 0;
  if (j.contains("points")) {
    for (const auto& jp : j["points"]) {
      IntersectionPoint p;
      p.id = jp.value("id", pid);
      pid = p.id + 1;
      p.label = jp.value("label", "P" + std::to_string(p.id));
      p.realness = parse_realness(jp.value("realness", std::string("Real")));
      p.components = jp.at("components").get<std::vector<int>>();
      std::sort(p.components.begin(), p.components.end());
      p.ompit = tri_field(jp, "ompit");
      if (!jp.contains("ompit") && p.realness == Realness::Real) p.ompit = Tri::Unknown;
      p.coordinates = jp.value("coordinates", std::string());
      if (jp.contains("plane"))
        p.plane = std::make_pair(parse_rational(jp["plane"].at(0).get<std::string>()),
                                 parse_rational(jp["plane"].at(1).get<std::string>()));
      if (jp.contains("params"))
        for (const auto& [k, v] : jp["params"].items()) p.params.emplace(std::stoi(k), chart_point_from_json(v));
      if (jp.contains("in_S")) p.in_S = jp["in_S"].get<bool>();
      config.points.push_back(std::move(p));
    }
  }
  config.validate();
  return config;
}

std::map<int, ComponentFunction> element_from_json(const CurveConfiguration& config, const Json& j) {
  std::map<int, ComponentFunction> out;
  auto parse_for = [&](int id, const Json& v) {
    const Component& c = config.component(id);
    out[id] = cf_parse(v.get<std::string>(), is_circle(c));
  };
  if (j.is_array()) {
    if (j.size() != config.components.size())
      fail(ErrorCode::InvalidInput, "element has " + std::to_string(j.size()) + " entries for " +
                                        std::to_string(config.components.size()) + " components");
    for (size_t i = 0; i < j.size(); ++i) parse_for(config.components[i].id, j[i]);
  } else if (j.is_object()) {
    for (const auto& [k, v] : j.items()) parse_for(std::stoi(k), v);
    for (const auto& c : config.components)
      if (!out.count(c.id)) out[c.id] = evaluate_zero_function(c);
  } else if (j.is_string() && config.components.size() == 1) {
    parse_for(config.components[0].id, j);
  } else {
    fail(ErrorCode::InvalidInput, "malformed element");
  }
  return out;
}

Json element_to_json(const CurveConfiguration& config, const std::map<int, ComponentFunction>& e) {
  Json arr = Json::array();
  for (const auto& c : config.components) {
    auto it = e.find(c.id);
    if (it == e.end()) {
      arr.push_back("0");
      continue;
    }
    if (auto* l = std::get_if<Laurent>(&it->second))
      arr.push_back(l->to_string(c.chart.param));
    else
      arr.push_back(cf_to_string(it->second));
  }
  return arr;
}

}  // namespace curvesos
