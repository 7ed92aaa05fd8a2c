#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "vermakit/acceptance.hpp"
#include "vermakit/emit.hpp"
#include "vermakit/errors.hpp"

namespace py = pybind11;
using namespace vermakit;

namespace {

ParabolicData parabolic(int n, int p) { return ParabolicData(n, p); }

std::string pattern(const std::string& weight, const std::string& format, bool pairs) {
  auto g = pattern_for(parse_weight(weight));
  std::vector<PairAnnotation> annotations;
  if (pairs || g.singularity > 0) annotations = distinct_weight_pairs(g);
  if (format == "json") return pattern_json(g, annotations);
  if (format == "dot") return pattern_dot(g, annotations);
  if (format == "text") return pattern_text(g, annotations);
  throw InputError("unknown format '" + format + "'");
}

std::string singular(int n, int p, int k, const std::string& w, const std::string& variant, const std::string& target) {
  ParabolicData pd = parabolic(n, p);
  auto r = ModuleRealization::density(pd, parse_rational(w));
  Variant v = parse_variant(variant);
  auto report = find_singular_vectors(k, r, v, parse_singular_target(target));
  return singular_json(report, layer_basis(k, *r, v).size(), n, p);
}

std::string scan(int n, int p, int k, long from, long to, const std::string& variant, const std::string& target) {
  if (from > to) throw InputError("empty weight range");
  std::vector<Rational> ws;
  for (long w = from; w <= to; ++w) ws.emplace_back(w);
  Variant v = parse_variant(variant);
  SingularTarget t = parse_singular_target(target);
  return scan_json(scan_critical_weights(k, parabolic(n, p), v, ws, t), k, n, p, v, t);
}

std::string cover(int n, int p, const std::string& w, const std::string& vector) {
  auto r = ModuleRealization::density(parabolic(n, p), parse_rational(w));
  auto s = normal_form(parse_element(vector, r, Variant::Holonomic));
  return cover_json(s, cover_check(s));
}

std::string translate(const std::vector<long>& labels, const std::string& f, const std::string& e) {
  auto module = weight_support(labels, static_cast<int>(labels.size()) + 1);
  return translate_json(screen_translation(parse_weight(f), parse_weight(e), module));
}

std::string one_way(const std::vector<long>& labels, const std::string& e1, const std::string& e2, const std::string& f1,
                    const std::string& f2, const std::optional<std::string>& e, const std::optional<std::string>& f) {
  auto module = weight_support(labels, static_cast<int>(labels.size()) + 1);
  std::optional<std::pair<Weight, Weight>> sources;
  if (e && f) sources.emplace(parse_weight(*e), parse_weight(*f));
  return one_way_json(
      screen_one_way(parse_weight(e1), parse_weight(e2), parse_weight(f1), parse_weight(f2), module, sources));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact weight patterns and singular vectors for |1|-graded sl(n)";

  static py::exception<ContractError> contract_error(m, "ContractError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr ptr) {
    try {
      if (ptr) std::rethrow_exception(ptr);
    } catch (const InputError& err) {
      PyErr_SetString(PyExc_ValueError, err.what());
    } catch (const ContractError& err) {
      py::set_error(contract_error, err.what());
    }
  });

  m.def("pattern", &pattern, py::arg("weight"), py::arg("format") = "json", py::arg("pairs") = false,
        "Pattern diagram of a dominant weight such as \"3 2 | 1 0\".");
  m.def("orbit", [](const std::string& w) { return orbit_json(affine_orbit_p_dominant(parse_weight(w))); }, py::arg("weight"));
  m.def("weight", [](const std::string& w) { return weight_json(parse_weight(w)); }, py::arg("weight"));
  m.def("e_action", [](const std::string& w) { return to_string(e_action(parse_weight(w))); }, py::arg("weight"));
  m.def("pair_order", [](const std::string& u, const std::string& v) { return to_string(pair_order(parse_weight(u), parse_weight(v))); },
        py::arg("u"), py::arg("v"));
  m.def("singular", &singular, py::arg("n"), py::arg("p"), py::arg("k"), py::arg("w"), py::arg("variant") = "holonomic",
        py::arg("target") = "invariant");
  m.def("scan", &scan, py::arg("n"), py::arg("p"), py::arg("k"), py::arg("start"), py::arg("stop"),
        py::arg("variant") = "holonomic", py::arg("target") = "invariant");
  m.def("cover", &cover, py::arg("n"), py::arg("p"), py::arg("w"), py::arg("vector"));
  m.def("translate", &translate, py::arg("labels"), py::arg("f"), py::arg("e"));
  m.def("one_way", &one_way, py::arg("labels"), py::arg("e1"), py::arg("e2"), py::arg("f1"), py::arg("f2"),
        py::arg("e") = std::nullopt, py::arg("f") = std::nullopt);
  m.def("selftest", [](const std::string& dir, const std::vector<int>& only) { return acceptance_json(run_acceptance(dir, only)); },
        py::arg("golden_dir"), py::arg("only") = std::vector<int>{});
  m.def("default_golden_dir", &default_golden_dir);
}
