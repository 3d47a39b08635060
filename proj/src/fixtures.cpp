#include "ligraph/fixtures.hpp"

#include <stdexcept>

namespace ligraph {

namespace {

using Labels = std::initializer_list<std::string_view>;

FixtureAssertion claim(const DynamicGraph& g, Labels a, Labels b, Labels c, bool separated, std::string note) {
  return {{g.set_of(a), g.set_of(b), g.set_of(c)}, separated, std::move(note)};
}

Fixture skin_disease() {
  Fixture f;
  f.name = "skin_disease";
  f.description = "Onset of menopause may trigger a skin condition, never the reverse.";
  f.graph = DynamicGraph::from_labels({"menopause", "skin"}, {{"menopause", "skin"}});
  const auto& g = f.graph;
  f.model = make_model(g, {0.1, 0.05}, {{g.index_of("menopause"), g.index_of("skin"), 4.0, 1}});
  f.assertions = {
      claim(g, {"skin"}, {"menopause"}, {}, true, "menopause rate does not depend on the skin condition"),
      claim(g, {"menopause"}, {"skin"}, {}, false, "skin condition rate depends on menopause"),
  };
  return f;
}

// vi: home visits, ho: hospitalisation, hs: health status, d: death (absorbing).
Fixture home_visits() {
  Fixture f;
  f.name = "home_visits";
  f.description = "Home visits affect hospitalisation, which interacts with health status; both drive death.";
  f.graph = DynamicGraph::from_labels({"vi", "ho", "hs", "d"},
                                      {{"vi", "ho"}, {"hs", "ho"}, {"ho", "hs"}, {"ho", "d"}, {"hs", "d"}}, {"d"});
  const auto& g = f.graph;
  const auto vi = g.index_of("vi"), ho = g.index_of("ho"), hs = g.index_of("hs"), d = g.index_of("d");
  // Strong effects through hs so that conditioning on ho alone leaves a
  // detectable dependence of d on vi.
  f.model = make_model(g, {0.07, 0.01, 0.07, 0.02},
                       {{vi, ho, 20.0, 1}, {hs, ho, 20.0, 1}, {ho, hs, 2.0, 1}, {ho, d, 2.0, 1}, {hs, d, 20.0, 1}});
  f.assertions = {
      claim(g, {"vi"}, {"d"}, {"ho"}, false, "survival is not independent of visits given hospitalisation alone"),
      claim(g, {"vi"}, {"d"}, {"ho", "hs"}, true, "visits irrelevant for survival given hospitalisation and health"),
      claim(g, {"ho"}, {"vi"}, {"hs"}, true, "visits independent of hospitalisation given health status"),
      claim(g, {"hs"}, {"vi"}, {"ho"}, true, "visits independent of health status given hospitalisation"),
      claim(g, {"vi"}, {"hs"}, {"ho"}, true, "health status independent of visits given hospitalisation"),
      claim(g, {"ho", "hs", "d"}, {"vi"}, {}, true, "visits have no parents"),
  };
  return f;
}

// ch: chemotherapy, tx: toxicity, ax: anxiety, tu: tumour size, su: surgery,
// d: death (absorbing). The edge set is reconstructed so that it reproduces
// each separation statement below.
Fixture chemo_reconstructed() {
  Fixture f;
  f.name = "chemo_reconstructed";
  f.description =
      "Chemotherapy cycles (reconstructed edge set). Validated statements: ch -/-> d | tu fails; "
      "ax -/-> d given {su,tu} and given {ch,tu}; ax -/-> su given any set containing tu; "
      "ax -/-> tx given any set containing ch; {ch,tu} -/-> ax | tx; su -/-> ax given tx and given {ch,tu}; "
      "su -/-> ch | {ch,tx}; su -/-> tx | {ch,tu}.";
  f.graph = DynamicGraph::from_labels({"ch", "tx", "ax", "tu", "su", "d"},
                                      {{"tx", "ch"},
                                       {"ax", "ch"},
                                       {"ch", "tx"},
                                       {"tx", "ax"},
                                       {"ch", "tu"},
                                       {"tu", "su"},
                                       {"su", "tu"},
                                       {"tu", "d"},
                                       {"su", "d"}},
                                      {"d"});
  const auto& g = f.graph;
  std::vector<Multiplier> mults;
  for (const auto& [j, k] : g.edges()) mults.push_back({j, k, 3.0, 1});
  f.model = make_model(g, {0.2, 0.1, 0.1, 0.1, 0.05, 0.02}, std::move(mults));
  f.assertions = {
      claim(g, {"ch"}, {"d"}, {"tu"}, false, "chemotherapy affects death other than through tumour size"),
      claim(g, {"ax"}, {"d"}, {"su", "tu"}, true, "anxiety irrelevant for death given surgery and tumour"),
      claim(g, {"ax"}, {"d"}, {"ch", "tu"}, true, "anxiety irrelevant for death given chemotherapy and tumour"),
  };
  const VertexSet ax = g.set_of({"ax"});
  auto supersets = [&](std::string_view target, std::string_view required, const std::string& note) {
    const VertexSet b = g.set_of({target});
    const VertexSet req = g.set_of({required});
    for_each_subset(g.vertices() - (ax | b | req), [&](VertexSet extra) {
      f.assertions.push_back({{ax, b, req | extra}, true, note});
    });
  };
  supersets("su", "tu", "anxiety irrelevant for surgery given any set containing tumour size");
  supersets("tx", "ch", "anxiety irrelevant for toxicity given any set containing chemotherapy");
  f.assertions.push_back(claim(g, {"ch", "tu"}, {"ax"}, {"tx"}, true, "anxiety depends on the past only via toxicity"));
  f.assertions.push_back(claim(g, {"su"}, {"ax"}, {"tx"}, true, "surgery irrelevant for anxiety given toxicity"));
  f.assertions.push_back(claim(g, {"su"}, {"ax"}, {"ch", "tu"}, true, "surgery irrelevant for anxiety given {ch,tu}"));
  f.assertions.push_back(claim(g, {"su"}, {"ch"}, {"ch", "tx"}, true, "surgery irrelevant for chemotherapy given {ch,tx}"));
  f.assertions.push_back(claim(g, {"su"}, {"tx"}, {"ch", "tu"}, true, "surgery irrelevant for toxicity given {ch,tu}"));
  return f;
}

Fixture chain() {
  Fixture f;
  f.name = "chain";
  f.description = "Three-mark chain a -> b -> c.";
  f.graph = DynamicGraph::from_labels({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  const auto& g = f.graph;
  f.model = make_model(g, {0.2, 0.1, 0.1}, {{0, 1, 4.0, 1}, {1, 2, 4.0, 1}});
  f.assertions = {
      claim(g, {"a"}, {"c"}, {"b"}, true, "b screens c off from a"),
      claim(g, {"a"}, {"c"}, {}, false, "marginally c depends on a"),
      claim(g, {"c"}, {"a"}, {}, true, "a has no parents"),
  };
  return f;
}

}  // namespace

const std::vector<Fixture>& builtin_fixtures() {
  static const std::vector<Fixture> fixtures = {skin_disease(), home_visits(), chemo_reconstructed(), chain()};
  return fixtures;
}

const Fixture& builtin_fixture(const std::string& name) {
  for (const auto& f : builtin_fixtures()) {
    if (f.name == name) return f;
  }
  throw std::out_of_range("unknown fixture '" + name + "'");
}

std::size_t FixtureReport::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.passed() ? 0 : 1;
  return n;
}

FixtureReport run_fixtures() {
  FixtureReport report;
  for (const auto& f : builtin_fixtures()) {
    for (const auto& a : f.assertions) {
      report.checks.push_back({f.name, a, delta_separated_moral(f.graph, a.query),
                               delta_separated_trail(f.graph, a.query)});
    }
  }
  return report;
}

}  // namespace ligraph
