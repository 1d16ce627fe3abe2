#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "curvesos/cli.hpp"
#include "curvesos/poly_text.hpp"

namespace py = pybind11;
using namespace curvesos;

namespace {

// JSON crosses the boundary as text; the Python layer owns decoding.
py::tuple run_text(const std::string& command, const std::string& input, const std::string& subcommand, double tol,
                   int degree_cap, unsigned seed, const std::optional<std::string>& metadata) {
  RunConfig cfg;
  cfg.command = command;
  cfg.subcommand = subcommand;
  cfg.tol = tol;
  cfg.degree_cap = degree_cap;
  cfg.seed = seed;
  std::ostringstream out, err;
  int code = 1;
  {
    py::gil_scoped_release release;
    Json in, meta;
    bool parsed = true;
    try {
      in = Json::parse(input);
      if (metadata) meta = Json::parse(*metadata);
    } catch (const nlohmann::json::exception& e) {
      Json d;
      d["error"] = "ParseError";
      d["message"] = e.what();
      err << d.dump() << "\n";
      parsed = false;
    }
    if (parsed) code = run_json(cfg, in, metadata ? &meta : nullptr, out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_curvesos, m) {
  m.doc() = "Native core of curvesos";
  m.def("run", &run_text, py::arg("command"), py::arg("input"), py::arg("subcommand") = "", py::arg("tol") = 1e-9,
        py::arg("degree_cap") = -1, py::arg("seed") = 0u, py::arg("metadata") = std::nullopt,
        "Run one command on a JSON document; returns (exit_code, stdout, stderr).");
  m.def(
      "canonical_poly",
      [](const std::string& s) { return parse_bipoly(s).to_string(); }, py::arg("text"),
      "Parse a polynomial in x, y and print it in canonical form.");
}
