// Python bindings for the main operations: basis families and graphs,
// good cycles, Hamiltonian counting, witnesses, and the bound formulas.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bghc/bounds.hpp"
#include "bghc/campaign.hpp"
#include "bghc/engine.hpp"
#include "bghc/graphic.hpp"
#include "bghc/io.hpp"

namespace py = pybind11;
using namespace bghc;

namespace {

std::unique_ptr<FamilyInstance> make_instance(const std::string& family,
                                              const std::vector<int>& params,
                                              const std::string& word) {
  if (family == "uniform")
    return std::make_unique<UniformInstance>(UniformSpec::make(params.at(0), params.at(1)));
  if (family == "catalan")
    return std::make_unique<CatalanInstance>(catalan_matroid(params.at(0)));
  if (family == "gencat")
    return std::make_unique<CatalanInstance>(GenCatalan::make(StepWord::parse(word)));
  if (family == "graphic_cycle") return std::make_unique<GraphicInstance>(mg_cycle(params.at(0)));
  if (family == "graphic_complete")
    return std::make_unique<GraphicInstance>(mg_complete(params.at(0)));
  if (family == "graphic_k2_sum_cycle")
    return std::make_unique<GraphicInstance>(mg_k2_sum_cycle(params.at(0)));
  if (family == "graphic_theta")
    return std::make_unique<GraphicInstance>(mg_theta(params.at(0), params.at(1), params.at(2)));
  throw Error("BadParams", "unknown family: " + family);
}

py::dict cycle_to_dict(const GoodCycle& gc) {
  py::dict d;
  d["vertices"] = py::make_tuple(gc.b1, gc.b2, gc.b3, gc.b4);
  d["e"] = gc.e;
  d["g"] = gc.g;
  d["f"] = gc.f;
  d["w"] = gc.w;
  return d;
}

}  // namespace

PYBIND11_MODULE(_bghc, m) {
  m.doc() = "matroid basis graphs: good cycles, Hamiltonian counts, lower bounds";

  py::register_exception<Error>(m, "BghcError");

  m.def(
      "bases",
      [](const std::string& family, const std::vector<int>& params, const std::string& word) {
        auto inst = make_instance(family, params, word);
        return inst->family().bases;
      },
      py::arg("family"), py::arg("params") = std::vector<int>{}, py::arg("word") = "");

  m.def(
      "basis_graph",
      [](const std::string& family, const std::vector<int>& params, const std::string& word) {
        auto inst = make_instance(family, params, word);
        return inst->graph().adj;
      },
      py::arg("family"), py::arg("params") = std::vector<int>{}, py::arg("word") = "");

  m.def(
      "good_cycles",
      [](const std::string& family, const std::vector<int>& params, int b1, int b2, bool oracle,
         const std::string& word) {
        auto inst = make_instance(family, params, word);
        auto cycles = oracle ? good_cycles_bruteforce(inst->family(), inst->graph(), b1, b2)
                             : inst->template_good_cycles(b1, b2);
        py::list out;
        for (const auto& gc : cycles) out.append(cycle_to_dict(gc));
        return out;
      },
      py::arg("family"), py::arg("params"), py::arg("b1"), py::arg("b2"),
      py::arg("oracle") = false, py::arg("word") = "");

  m.def(
      "count_hc_through_edge",
      [](const std::string& family, const std::vector<int>& params, int u, int v,
         std::optional<uint64_t> cap, const std::string& word) {
        auto inst = make_instance(family, params, word);
        auto hc = count_hc_through_edge(inst->graph(), u, v, cap);
        return py::make_tuple(hc.value, hc.capped);
      },
      py::arg("family"), py::arg("params"), py::arg("u"), py::arg("v"),
      py::arg("cap") = std::nullopt, py::arg("word") = "");

  m.def(
      "witnesses",
      [](const std::string& family, const std::vector<int>& params, int u, int v, uint64_t target,
         const std::string& word) {
        auto inst = make_instance(family, params, word);
        WitnessPolicy policy;
        policy.target = target;
        auto ws = witnesses_recursive(*inst, u, v, policy);
        validate_witness_set(inst->graph(), ws);
        return ws.cycles;
      },
      py::arg("family"), py::arg("params"), py::arg("u"), py::arg("v"), py::arg("target") = 1,
      py::arg("word") = "");

  m.def("hc_lower", [](int n, int k) { return hc_lower(n, k).value.str(); });
  m.def("hc_lower_corollary", [](int n, int k) { return hc_lower_corollary(n, k).value.str(); });
  m.def("catalan_lower", [](int k) { return catalan_lower(k).value.str(); });
  m.def("uniform_lower", [](int r, int n) { return uniform_lower(r, n).value.str(); });
  m.def("uniform_good_cycle_bound", &uniform_good_cycle_bound);
  m.def("superfactorial", [](uint64_t x) { return superfactorial(x).str(); });

  m.def(
      "verify",
      [](const std::string& family, int n_max, int m_max, int k_max,
         const std::vector<std::pair<int, int>>& grid, bool witnesses) {
        Campaign c;
        c.family = family;
        c.n_max = n_max;
        c.m_max = m_max;
        c.k_max = k_max;
        if (!grid.empty()) c.uniform_grid = grid;
        c.witnesses = witnesses;
        auto result = run_campaign(c);
        return py::make_tuple(result.pass, result.records.size());
      },
      py::arg("family"), py::arg("n_max") = 4, py::arg("m_max") = 6, py::arg("k_max") = 2,
      py::arg("grid") = std::vector<std::pair<int, int>>{}, py::arg("witnesses") = true);
}
