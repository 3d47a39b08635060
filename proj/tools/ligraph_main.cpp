#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ligraph/dot.hpp"
#include "ligraph/fixtures.hpp"
#include "ligraph/graph.hpp"
#include "ligraph/inference.hpp"
#include "ligraph/io.hpp"
#include "ligraph/likelihood.hpp"
#include "ligraph/markov.hpp"
#include "ligraph/model.hpp"
#include "ligraph/separation.hpp"
#include "ligraph/simulate.hpp"

using nlohmann::json;
using namespace ligraph;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitNotSeparated = 3;
constexpr int kExitFixtureFailure = 4;

// Bad values for otherwise well-formed flags (unknown labels and the like).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

DynamicGraph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

VertexSet label_set(const DynamicGraph& g, const std::string& csv, const char* flag) {
  std::vector<std::string> labels;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    if (b != std::string::npos) labels.push_back(item.substr(b, e - b + 1));
  }
  try {
    return g.set_of(labels);
  } catch (const std::domain_error& err) {
    throw UsageError(std::string(flag) + ": " + err.what());
  }
}

json labels_json(const DynamicGraph& g, VertexSet s) { return g.labels_of(s); }

json trail_json(const DynamicGraph& g, const Trail& t) {
  json out;
  out["vertices"] = json::array();
  for (auto v : t.vertices) out["vertices"].push_back(g.label(v));
  out["edges"] = json::array();
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    std::size_t from = t.vertices[i], to = t.vertices[i + 1];
    if (t.steps[i].orientation == EdgeOrientation::backward) std::swap(from, to);
    out["edges"].push_back({{"from", g.label(from)}, {"to", g.label(to)}, {"mutual", t.steps[i].both_present}});
  }
  return out;
}

json moral_json(const UndirectedGraph& ug) {
  json out;
  out["nodes"] = json::array();
  ug.vertices().for_each([&](std::size_t v) { out["nodes"].push_back(ug.label(v)); });
  out["edges"] = json::array();
  out["marriage"] = json::array();
  for (const auto& [j, k] : ug.edges()) {
    out[ug.is_marriage_edge(j, k) ? "marriage" : "edges"].push_back({ug.label(j), ug.label(k)});
  }
  return out;
}

void print(const json& j) { std::cout << j.dump() << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local independence graphs: delta-separation, simulation, likelihood and audits"};
  app.require_subcommand(1);

  std::string graph_path, model_path, history_path;
  std::string a_csv, b_csv, c_csv, within_csv, set_csv, delete_csv;
  std::string method = "moral";
  bool witness = false, pairwise = false, local = false, per_mark = false, moral = false;
  double horizon = 10.0, alpha = 0.05, min_exposure = 0.0;
  std::optional<double> t_opt;
  std::uint64_t seed = 1;
  std::size_t replicates = 500, test_sets = 200;
  std::string dot_name = "G";

  auto* separate = app.add_subcommand("separate", "Test whether C delta-separates A from B");
  separate->add_option("--graph", graph_path, "Graph JSON file")->required();
  separate->add_option("--a", a_csv, "Comma-separated labels of A")->required();
  separate->add_option("--b", b_csv, "Comma-separated labels of B")->required();
  separate->add_option("--c", c_csv, "Comma-separated labels of C");
  separate->add_option("--method", method, "moral, trail or both")->check(CLI::IsMember({"moral", "trail", "both"}));
  separate->add_flag("--witness", witness, "Print an active trail when not separated");

  auto* minsep = app.add_subcommand("minsep", "List the minimal separators of A from B");
  minsep->add_option("--graph", graph_path, "Graph JSON file")->required();
  minsep->add_option("--a", a_csv, "Comma-separated labels of A")->required();
  minsep->add_option("--b", b_csv, "Comma-separated labels of B")->required();
  minsep->add_option("--within", within_csv, "Candidate vertices (default: all others)");

  auto* moralize_cmd = app.add_subcommand("moralize", "Print the moral graph");
  moralize_cmd->add_option("--graph", graph_path, "Graph JSON file")->required();
  moralize_cmd->add_option("--delete", delete_csv, "Delete the out-edges of these vertices first");

  auto* ancestral = app.add_subcommand("ancestral", "Print the ancestral closure of a set");
  ancestral->add_option("--graph", graph_path, "Graph JSON file")->required();
  ancestral->add_option("--set", set_csv, "Comma-separated labels")->required();

  auto* markov = app.add_subcommand("markov", "List pairwise or local Markov statements");
  markov->add_option("--graph", graph_path, "Graph JSON file")->required();
  auto* pw = markov->add_flag("--pairwise", pairwise, "Pairwise statements");
  auto* lc = markov->add_flag("--local", local, "Local statements");
  pw->excludes(lc);

  auto* simulate_cmd = app.add_subcommand("simulate", "Simulate histories as JSON Lines");
  simulate_cmd->add_option("--graph", graph_path, "Graph JSON file")->required();
  simulate_cmd->add_option("--model", model_path, "Model JSON file")->required();
  simulate_cmd->add_option("--horizon", horizon, "Observation horizon")->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--seed", seed, "Master seed");
  simulate_cmd->add_option("--replicates", replicates, "Number of histories");

  auto* loglik_cmd = app.add_subcommand("loglik", "Log-likelihood of histories");
  loglik_cmd->add_option("--graph", graph_path, "Graph JSON file")->required();
  loglik_cmd->add_option("--model", model_path, "Model JSON file")->required();
  loglik_cmd->add_option("--history", history_path, "History JSON Lines file")->required();
  loglik_cmd->add_option("--t", t_opt, "Evaluate at time t (default: horizon)");
  loglik_cmd->add_flag("--per-mark", per_mark, "Include the per-mark terms");

  auto* verify = app.add_subcommand("verify", "Audit the graph's independence statements on simulated data");
  verify->add_option("--graph", graph_path, "Graph JSON file")->required();
  verify->add_option("--model", model_path, "Model JSON file")->required();
  verify->add_option("--alpha", alpha, "Test level")->check(CLI::Range(0.0, 1.0));
  verify->add_option("--replicates", replicates, "Histories per test set");
  verify->add_option("--seed", seed, "Master seed");
  verify->add_option("--test-sets", test_sets, "Independent test sets per statement");
  verify->add_option("--horizon", horizon, "Observation horizon")->check(CLI::PositiveNumber);
  verify->add_option("--min-exposure", min_exposure, "Pool strata with less exposure");

  auto* fixtures = app.add_subcommand("fixtures", "Check the built-in example graphs");

  auto* dot = app.add_subcommand("export-dot", "Print the graph (or its moral graph) in DOT");
  dot->add_option("--graph", graph_path, "Graph JSON file")->required();
  dot->add_flag("--moral", moral, "Export the moral graph");
  dot->add_option("--delete", delete_csv, "Delete the out-edges of these vertices first");
  dot->add_option("--name", dot_name, "Graph name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*separate) {
      const auto g = load_graph(graph_path);
      const Query q{label_set(g, a_csv, "--a"), label_set(g, b_csv, "--b"), label_set(g, c_csv, "--c")};
      if (q.b.empty()) throw UsageError("--b: must name at least one mark");
      json out;
      bool separated = false;
      if (method == "both") {
        const bool m = delta_separated_moral(g, q);
        const bool t = delta_separated_trail(g, q);
        out["moral"] = m;
        out["trail"] = t;
        out["agree"] = m == t;
        separated = m;
      } else {
        separated = delta_separated(g, q, method == "trail" ? SeparationMethod::trail : SeparationMethod::moral);
      }
      out["separated"] = separated;
      if (witness && !separated) {
        if (auto w = active_trail_witness(g, q)) out["witness"] = trail_json(g, *w);
      }
      print(out);
      return separated ? kExitOk : kExitNotSeparated;
    }
    if (*minsep) {
      const auto g = load_graph(graph_path);
      const VertexSet a = label_set(g, a_csv, "--a");
      const VertexSet b = label_set(g, b_csv, "--b");
      const VertexSet within = within_csv.empty() ? g.vertices() - (a | b) : label_set(g, within_csv, "--within");
      if (within.size() > kMaxSeparatorSearch) throw UsageError("--within: too many candidate vertices");
      json out = json::array();
      for (VertexSet c : minimal_separators(g, a, b, within)) out.push_back(labels_json(g, c));
      print(out);
      return kExitOk;
    }
    if (*moralize_cmd) {
      const auto g = load_graph(graph_path);
      print(moral_json(moralize(delete_out_edges(g, label_set(g, delete_csv, "--delete")))));
      return kExitOk;
    }
    if (*ancestral) {
      const auto g = load_graph(graph_path);
      print(labels_json(g, ancestral_closure(g, label_set(g, set_csv, "--set"))));
      return kExitOk;
    }
    if (*markov) {
      const auto g = load_graph(graph_path);
      const auto statements = pairwise ? pairwise_statements(g) : local_statements(g);
      for (const auto& s : statements) {
        print({{"a", labels_json(g, s.a)},
               {"b", labels_json(g, s.b)},
               {"c", labels_json(g, s.c)},
               {"provenance", std::string(to_string(s.provenance))}});
      }
      return kExitOk;
    }
    if (*simulate_cmd) {
      const auto g = load_graph(graph_path);
      const auto model = parse_model(read_file(model_path), g);
      const auto hs = simulate(g, model, {horizon, seed, replicates});
      std::cout << serialize_histories(hs, g, seed);
      return kExitOk;
    }
    if (*loglik_cmd) {
      const auto g = load_graph(graph_path);
      const auto model = parse_model(read_file(model_path), g);
      const auto records = parse_histories(read_file(history_path), g);
      for (const auto& r : records) {
        const double t = t_opt.value_or(r.history.horizon);
        const LogLik ll = loglik(model, g, r.history, t);
        json out;
        out["impossible"] = ll.is_impossible();
        out["loglik"] = ll.is_impossible() ? json(nullptr) : json(ll.value());
        out["t"] = t;
        if (per_mark) {
          const auto br = loglik_breakdown(model, g, r.history, t);
          out["per_mark"] = json::object();
          g.vertices().for_each([&](std::size_t k) {
            const auto& term = br.per_mark[k];
            out["per_mark"][g.label(k)] = {{"events", term.event_term},
                                           {"exposure", term.exposure_term},
                                           {"impossible", term.impossible}};
          });
        }
        print(out);
      }
      return kExitOk;
    }
    if (*verify) {
      const auto g = load_graph(graph_path);
      const auto model = parse_model(read_file(model_path), g);
      const auto report = verify_graph(g, model, {horizon, seed, replicates}, {alpha, test_sets, min_exposure});
      json out;
      out["alpha"] = report.alpha;
      out["test_sets"] = report.test_sets;
      out["histories_per_set"] = report.histories_per_set;
      out["horizon"] = horizon;
      out["seed"] = seed;
      out["statements"] = json::array();
      for (const auto& e : report.entries) {
        out["statements"].push_back({
            {"statement",
             {{"a", labels_json(g, e.statement.a)}, {"b", labels_json(g, e.statement.b)}, {"c", labels_json(g, e.statement.c)}}},
            {"kind", e.kind},
            {"implied", e.implied},
            {"tests", e.tests},
            {"untestable", e.untestable},
            {"rejection_rate", e.rejection_rate ? json(*e.rejection_rate) : json(nullptr)},
            {"band", {e.band_low, e.band_high}},
            {"within_band", e.within_band()},
        });
      }
      std::cout << out.dump(2) << "\n";
      return kExitOk;
    }
    if (*fixtures) {
      const auto report = run_fixtures();
      for (const auto& c : report.checks) {
        const auto& g = builtin_fixture(c.fixture).graph;
        print({{"fixture", c.fixture},
               {"a", labels_json(g, c.assertion.query.a)},
               {"b", labels_json(g, c.assertion.query.b)},
               {"c", labels_json(g, c.assertion.query.c)},
               {"expected", c.assertion.separated},
               {"moral", c.moral},
               {"trail", c.trail},
               {"passed", c.passed()},
               {"note", c.assertion.note}});
      }
      std::cerr << report.checks.size() - report.failures() << "/" << report.checks.size() << " assertions passed\n";
      return report.ok() ? kExitOk : kExitFixtureFailure;
    }
    if (*dot) {
      const auto g = load_graph(graph_path);
      const VertexSet del = label_set(g, delete_csv, "--delete");
      const DotOptions opts{dot_name, del};
      const DynamicGraph h = delete_out_edges(g, del);
      std::cout << (moral ? export_dot(moralize(h), opts) : export_dot(h, opts));
      return kExitOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitUsage;
}
