#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fourlines/errors.hpp"
#include "fourlines/farey.hpp"
#include "fourlines/hjchains.hpp"
#include "fourlines/report.hpp"
#include "fourlines/search.hpp"

namespace py = pybind11;
using namespace fourlines;

namespace {

std::vector<Rational> to_marks(const std::vector<std::string>& xs) {
  std::vector<Rational> out;
  for (const auto& x : xs) out.push_back(Rational::parse(x));
  return out;
}

std::vector<std::string> to_strings(const std::vector<Rational>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

std::string search_json(const std::string& set, int case_id, int cap, unsigned jobs) {
  const Context ctx = parse_context(set);
  Json all = Json::array();
  const auto pats = case_id ? std::vector<CasePattern>{pattern(ctx, case_id)}
                            : (ctx == Context::S1 ? patterns_S1() : patterns_S0());
  for (const auto& p : pats) {
    const SearchResult r = enumerate_min(p, SearchOptions{cap, jobs, false});
    Json argmins = Json::array();
    for (const auto& a : r.argmins) argmins.push_back(format_matrix(a.matrix));
    all.push_back({{"case", p.index},
                   {"pattern", p.describe()},
                   {"cap", r.cap},
                   {"minimum", r.minimum ? Json(r.minimum->str()) : Json(nullptr)},
                   {"argmins", argmins},
                   {"examined", r.examined}});
  }
  return all.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact invariants of surfaces built from four lines in the plane";

  py::register_exception<DegenerateChain>(m, "DegenerateChain", PyExc_ValueError);
  py::register_exception<NotPositiveDefinite>(m, "NotPositiveDefinite", PyExc_ValueError);
  py::register_exception<InvalidConfiguration>(m, "InvalidConfiguration", PyExc_ValueError);

  m.def("fraction_to_chain", [](const std::string& x) { return to_strings(fraction_to_chain(Rational::parse(x))); },
        py::arg("x"));
  m.def("chain_to_fraction", [](const std::vector<std::string>& c) { return chain_to_fraction(to_marks(c)).str(); },
        py::arg("chain"));
  m.def("chain_det", [](const std::vector<std::string>& c) { return chain_det(to_marks(c)).str(); },
        py::arg("chain"));
  m.def("cycle_det", [](const std::vector<std::string>& c) { return cycle_det(to_marks(c)).str(); },
        py::arg("cycle"));

  m.def("lr_to_weight", [](const std::string& w) {
    const WeightPair p = lr_to_weight(w);
    return std::pair(p.wi, p.wj);
  }, py::arg("word"));
  m.def("weight_to_lr", [](std::int64_t a, std::int64_t b) { return weight_to_lr(WeightPair::make(a, b)); },
        py::arg("wi"), py::arg("wj"));

  m.def("invariants_json", [](const std::string& matrix, const std::string& b, const std::string& context) {
    return to_json(evaluate(parse_config(matrix, b), parse_context(context))).dump();
  }, py::arg("matrix"), py::arg("b") = "0,0,0,0", py::arg("context") = "general");
  m.def("volume_oracle", [](const std::string& matrix, const std::string& b) {
    return volume_oracle(parse_config(matrix, b)).volume.str();
  }, py::arg("matrix"), py::arg("b") = "0,0,0,0");
  m.def("delta_fast", [](const std::string& matrix) {
    return delta_fast(parse_config(matrix, "0,0,0,0")).str();
  }, py::arg("matrix"));

  m.def("search_json", &search_json, py::arg("set"), py::arg("case") = 0, py::arg("cap") = 8,
        py::arg("jobs") = 1, py::call_guard<py::gil_scoped_release>());
  m.def("limit_volume", [](const std::string& matrix, const std::string& b, int row, int line) {
    std::optional<int> grow;
    if (line) grow = line - 1;
    return limit_volume(parse_config(matrix, b), static_cast<std::size_t>(row - 1), grow).str();
  }, py::arg("matrix"), py::arg("b"), py::arg("row"), py::arg("line") = 0);
  m.def("min_limit_point", [](int cap) { return min_limit_point(cap).value.str(); }, py::arg("cap") = 8,
        py::call_guard<py::gil_scoped_release>());
  m.def("acc_demo", [](int series, const std::vector<int>& order, const std::array<std::int64_t, 4>& x) {
    return acc_demo(series, order, x).str();
  }, py::arg("series"), py::arg("order"), py::arg("x"));
}
