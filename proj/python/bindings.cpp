#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "owp/constructions.hpp"
#include "owp/io.hpp"
#include "owp/search.hpp"

namespace py = pybind11;
using namespace owp;

namespace {

SearchLimits limits(std::optional<double> max_seconds, bool all) {
  SearchLimits l;
  l.max_seconds = max_seconds;
  if (all) l.max_solutions.reset();
  return l;
}

// (True, document) or (False, "category: reason").
std::pair<bool, std::string> construct_json(int n, const std::string& type) {
  auto result = construct({n, parse_cycle_type(type)});
  if (auto* u = std::get_if<Unsupported>(&result))
    return {false, std::string(to_string(u->category)) + ": " + u->reason};
  return {true, serialize_factorization(std::get<Factorization>(result))};
}

std::string verify_json(const std::string& doc) {
  auto f = parse_factorization(doc, ParseOptions{.verify = false});
  return report_to_json(verify_factorization(f)).dump();
}

std::string search_json(int n, const std::string& type, std::optional<double> max_seconds,
                        bool all) {
  const auto out = search_factorization(n, parse_cycle_type(type), limits(max_seconds, all));
  ordered_json doc;
  doc["status"] = to_string(out.status);
  doc["nodes_explored"] = out.nodes_explored;
  doc["solutions"] = ordered_json::array();
  for (const auto& f : out.solutions) doc["solutions"].push_back(factorization_to_json(canonicalize(f)));
  return doc.dump();
}

std::string pair_search_json(int ell, std::optional<double> max_seconds) {
  const auto out = search_pair_4ell(ell, limits(max_seconds, false));
  ordered_json doc;
  doc["status"] = to_string(out.status);
  doc["ell"] = ell;
  doc["nodes_explored"] = out.nodes_explored;
  doc["first_candidates"] = out.first_candidates;
  doc["frontiers_checked"] = out.frontiers_checked;
  doc["congruence_failures"] = out.congruence_failures;
  doc["frontiers_obstructed"] = out.frontiers_obstructed;
  if (out.pair)
    doc["pair"] = {matching_to_json(out.pair->first), matching_to_json(out.pair->second)};
  else
    doc["pair"] = nullptr;
  return doc.dump();
}

std::string profile_json(const std::string& doc) {
  const auto m = parse_matching(doc);
  return profile_to_json(profile(m.k, m.edges)).dump();
}

std::string double_json(const std::string& doc) {
  return serialize_factorization(double_undirected(parse_undirected(doc)));
}

}  // namespace

PYBIND11_MODULE(_owp, m) {
  m.doc() = "Directed 2-factorizations of complete symmetric digraphs";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ConstructionError>(m, "ConstructionError", PyExc_ValueError);

  m.def("parse_cycle_type", [](const std::string& s) { return parse_cycle_type(s).lengths(); });
  m.def("construct", &construct_json, py::arg("n"), py::arg("type"));
  m.def("verify", &verify_json, py::arg("document"));
  m.def("search", &search_json, py::arg("n"), py::arg("type"), py::arg("max_seconds") = py::none(),
        py::arg("all") = false, py::call_guard<py::gil_scoped_release>());
  m.def("pair_search", &pair_search_json, py::arg("ell"), py::arg("max_seconds") = py::none(),
        py::call_guard<py::gil_scoped_release>());
  m.def("profile", &profile_json, py::arg("document"));
  m.def("double", &double_json, py::arg("document"));
}
