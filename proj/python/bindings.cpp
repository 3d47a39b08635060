#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ligraph/dot.hpp"
#include "ligraph/fixtures.hpp"
#include "ligraph/graph.hpp"
#include "ligraph/io.hpp"
#include "ligraph/likelihood.hpp"
#include "ligraph/markov.hpp"
#include "ligraph/separation.hpp"
#include "ligraph/simulate.hpp"

namespace py = pybind11;
using namespace ligraph;

namespace {

using Labels = std::vector<std::string>;

SeparationMethod method_of(const std::string& name) {
  if (name == "moral") return SeparationMethod::moral;
  if (name == "trail") return SeparationMethod::trail;
  throw py::value_error("method must be 'moral' or 'trail'");
}

py::dict statement_dict(const DynamicGraph& g, const LocalIndependenceStatement& s) {
  py::dict d;
  d["a"] = g.labels_of(s.a);
  d["b"] = g.labels_of(s.b);
  d["c"] = g.labels_of(s.c);
  d["provenance"] = std::string(to_string(s.provenance));
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Local independence graphs for marked point processes";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ModelError>(m, "ModelError", PyExc_ValueError);

  py::class_<DynamicGraph>(m, "Graph")
      .def(py::init([](const Labels& nodes, const std::vector<std::pair<std::string, std::string>>& edges,
                       const Labels& absorbing) { return DynamicGraph::from_labels(nodes, edges, absorbing); }),
           py::arg("nodes"), py::arg("edges") = std::vector<std::pair<std::string, std::string>>{},
           py::arg("absorbing") = Labels{})
      .def_property_readonly("nodes", [](const DynamicGraph& g) { return g.labels_of(g.vertices()); })
      .def_property_readonly("edges",
                             [](const DynamicGraph& g) {
                               std::vector<std::pair<std::string, std::string>> out;
                               for (const auto& [j, k] : g.edges()) out.emplace_back(g.label(j), g.label(k));
                               return out;
                             })
      .def_property_readonly("absorbing", [](const DynamicGraph& g) { return g.labels_of(g.absorbing()); })
      .def("parents", [](const DynamicGraph& g, const Labels& a) { return g.labels_of(parents(g, g.set_of(a))); })
      .def("ancestral_closure",
           [](const DynamicGraph& g, const Labels& a) { return g.labels_of(ancestral_closure(g, g.set_of(a))); })
      .def("to_json", &serialize_graph)
      .def("__eq__", [](const DynamicGraph& a, const DynamicGraph& b) { return a == b; })
      .def("__repr__", [](const DynamicGraph& g) {
        return "<Graph with " + std::to_string(g.vertices().size()) + " marks, " + std::to_string(g.edge_count()) +
               " edges>";
      });

  m.def("parse_graph", [](const std::string& text) { return parse_graph(text); }, py::arg("text"));

  m.def(
      "delta_separated",
      [](const DynamicGraph& g, const Labels& a, const Labels& b, const Labels& c, const std::string& method) {
        return delta_separated(g, {g.set_of(a), g.set_of(b), g.set_of(c)}, method_of(method));
      },
      py::arg("graph"), py::arg("a"), py::arg("b"), py::arg("c") = Labels{}, py::arg("method") = "moral",
      "True if c delta-separates a from b, i.e. b is locally independent of a given c.");

  m.def(
      "active_trail",
      [](const DynamicGraph& g, const Labels& a, const Labels& b, const Labels& c) -> std::optional<Labels> {
        const auto w = active_trail_witness(g, {g.set_of(a), g.set_of(b), g.set_of(c)});
        if (!w) return std::nullopt;
        Labels out;
        for (auto v : w->vertices) out.push_back(g.label(v));
        return out;
      },
      py::arg("graph"), py::arg("a"), py::arg("b"), py::arg("c") = Labels{});

  m.def(
      "minimal_separators",
      [](const DynamicGraph& g, const Labels& a, const Labels& b, std::optional<Labels> within) {
        const VertexSet sa = g.set_of(a), sb = g.set_of(b);
        const VertexSet w = within ? g.set_of(*within) : g.vertices() - (sa | sb);
        std::vector<Labels> out;
        for (auto c : minimal_separators(g, sa, sb, w)) out.push_back(g.labels_of(c));
        return out;
      },
      py::arg("graph"), py::arg("a"), py::arg("b"), py::arg("within") = std::nullopt);

  m.def(
      "moralize",
      [](const DynamicGraph& g, const Labels& deleted) {
        const auto ug = moralize(delete_out_edges(g, g.set_of(deleted)));
        py::dict d;
        std::vector<std::pair<std::string, std::string>> edges, marriage;
        for (const auto& [j, k] : ug.edges()) {
          (ug.is_marriage_edge(j, k) ? marriage : edges).emplace_back(ug.label(j), ug.label(k));
        }
        d["edges"] = edges;
        d["marriage"] = marriage;
        return d;
      },
      py::arg("graph"), py::arg("delete_out_of") = Labels{});

  m.def(
      "local_statements",
      [](const DynamicGraph& g) {
        py::list out;
        for (const auto& s : local_statements(g)) out.append(statement_dict(g, s));
        return out;
      },
      py::arg("graph"));
  m.def(
      "pairwise_statements",
      [](const DynamicGraph& g) {
        py::list out;
        for (const auto& s : pairwise_statements(g)) out.append(statement_dict(g, s));
        return out;
      },
      py::arg("graph"));

  m.def(
      "simulate_jsonl",
      [](const DynamicGraph& g, const std::string& model_json, double horizon, std::uint64_t seed,
         std::size_t replicates) {
        const auto model = parse_model(model_json, g);
        py::gil_scoped_release release;
        return serialize_histories(simulate(g, model, {horizon, seed, replicates}), g, seed);
      },
      py::arg("graph"), py::arg("model_json"), py::arg("horizon"), py::arg("seed") = 1, py::arg("replicates") = 1,
      "Simulated histories in the JSON Lines history format.");

  m.def(
      "loglik",
      [](const DynamicGraph& g, const std::string& model_json, const std::string& histories_jsonl,
         std::optional<double> t) {
        const auto model = parse_model(model_json, g);
        std::vector<std::optional<double>> out;
        for (const auto& r : parse_histories(histories_jsonl, g)) {
          const auto ll = loglik(model, g, r.history, t.value_or(r.history.horizon));
          out.push_back(ll.is_impossible() ? std::nullopt : std::optional<double>(ll.value()));
        }
        return out;
      },
      py::arg("graph"), py::arg("model_json"), py::arg("histories_jsonl"), py::arg("t") = std::nullopt,
      "Log-likelihood per history; None marks an impossible history.");

  m.def(
      "export_dot",
      [](const DynamicGraph& g, bool moral, const std::string& name) {
        return moral ? export_dot(moralize(g), {name, {}}) : export_dot(g, {name, {}});
      },
      py::arg("graph"), py::arg("moral") = false, py::arg("name") = "G");

  m.def("fixture_names", [] {
    Labels out;
    for (const auto& f : builtin_fixtures()) out.push_back(f.name);
    return out;
  });
  m.def("fixture_graph", [](const std::string& name) { return builtin_fixture(name).graph; }, py::arg("name"));
  m.def("run_fixtures", [] {
    const auto report = run_fixtures();
    return py::make_tuple(report.checks.size(), report.failures());
  }, "Checks every built-in fixture assertion; returns (checked, failed).");
}
