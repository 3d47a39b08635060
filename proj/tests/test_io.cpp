#include <gtest/gtest.h>

#include <random>

#include "ligraph/dot.hpp"
#include "ligraph/fixtures.hpp"
#include "ligraph/io.hpp"
#include "ligraph/simulate.hpp"
#include "support.hpp"

using namespace ligraph;

namespace {

std::string fixture_file(const std::string& name) { return read_file(std::string(LIGRAPH_SOURCE_DIR) + "/fixtures/" + name); }

void expect_parse_error(std::string_view text, const std::string& fragment) {
  try {
    parse_graph(text);
    ADD_FAILURE() << "no error for " << text;
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
  }
}

}  // namespace

TEST(GraphJson, Minimal) {
  const auto g = parse_graph(R"({"nodes":["a","b"],"edges":[["a","b"]]})");
  EXPECT_EQ(g.vertices().size(), 2U);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}}));
  EXPECT_TRUE(g.absorbing().empty());
}

TEST(GraphJson, Errors) {
  expect_parse_error(R"({"nodes":["a","b"],"edges":[["a","b"],["a","b"]]})", "duplicate edge a -> b");
  expect_parse_error(R"({"nodes":["a","b"],"edges":[["a","c"]]})", "'c'");
  expect_parse_error(R"({"nodes":["a"],"edges":[["a","a"]]})", "self-loop");
  expect_parse_error(R"({"edges":[]})", "\"nodes\"");
  expect_parse_error(R"({"nodes":["a",3]})", "graph.nodes[1]");
  expect_parse_error(R"({"nodes":["a","b"],"edges":[["a"]]})", "graph.edges[0]");
  expect_parse_error(R"({"nodes":["a"], )", "graph");
}

TEST(GraphJson, RoundTrip) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 200; ++i) {
    const auto g = testkit::random_graph(1 + i % 7, 0.3, rng);
    const auto text = serialize_graph(g);
    EXPECT_EQ(parse_graph(text), g);
    EXPECT_EQ(serialize_graph(parse_graph(text)), text);
  }
  for (const auto& f : builtin_fixtures()) EXPECT_EQ(parse_graph(serialize_graph(f.graph)), f.graph);
}

TEST(GraphJson, ShippedFixturesMatchBuiltins) {
  for (const auto& f : builtin_fixtures()) {
    const auto g = parse_graph(fixture_file(f.name + ".graph.json"));
    EXPECT_EQ(g, f.graph) << f.name;
    EXPECT_EQ(parse_model(fixture_file(f.name + ".model.json"), g), *f.model) << f.name;
  }
}

TEST(GraphJson, HomeVisitsFileHasFactorizationEdges) {
  const auto g = parse_graph(fixture_file("home_visits.graph.json"));
  const auto cl = [&](const char* k) { return closure(g, g.set_of({k})); };
  EXPECT_EQ(cl("vi"), g.set_of({"vi"}));
  EXPECT_EQ(cl("ho"), g.set_of({"vi", "ho", "hs"}));
  EXPECT_EQ(cl("hs"), g.set_of({"ho", "hs"}));
  EXPECT_EQ(cl("d"), g.set_of({"d", "ho", "hs"}));
  EXPECT_EQ(g.absorbing(), g.set_of({"d"}));
}

TEST(ModelJson, RoundTripAndErrors) {
  for (const auto& f : builtin_fixtures()) {
    EXPECT_EQ(parse_model(serialize_model(*f.model, f.graph), f.graph), *f.model);
  }
  const auto g = parse_graph(R"({"nodes":["a","b"],"edges":[["a","b"]]})");
  EXPECT_THROW(parse_model(R"({"baselines":{"a":1}})", g), ParseError);
  EXPECT_THROW(parse_model(R"({"baselines":{"a":1,"b":1,"c":1}})", g), ParseError);
  EXPECT_THROW(parse_model(R"({"baselines":{"a":-1,"b":1}})", g), ParseError);
  EXPECT_THROW(parse_model(R"({"baselines":{"a":1,"b":1},"multipliers":[{"from":"a","to":"b"}]})", g), ParseError);
  EXPECT_THROW(parse_model(R"({"baselines":{"a":1,"b":1},"multipliers":[{"from":"a","to":"b","factor":2,"cap":0}]})", g),
               ParseError);
  const auto m = parse_model(R"({"baselines":{"a":1,"b":0.5},"multipliers":[{"from":"a","to":"b","factor":2}]})", g);
  EXPECT_EQ(m.multipliers().at(0).cap, 1U);
}

TEST(HistoryJsonl, RoundTripIsExact) {
  for (const auto& f : builtin_fixtures()) {
    const auto hs = simulate(f.graph, *f.model, {10.0, 17, 50});
    const auto text = serialize_histories(hs, f.graph, 17);
    const auto back = parse_histories(text, f.graph);
    ASSERT_EQ(back.size(), hs.size());
    for (std::size_t i = 0; i < hs.size(); ++i) {
      EXPECT_EQ(back[i].history, hs[i]);
      EXPECT_EQ(back[i].seed, 17U);
      EXPECT_EQ(back[i].replicate, i);
    }
    EXPECT_EQ(serialize_histories(hs, f.graph, 17), text);
  }
}

TEST(HistoryJsonl, Errors) {
  const auto g = parse_graph(R"({"nodes":["a","d"],"absorbing":["d"]})");
  EXPECT_THROW(parse_histories(R"({"t":1,"mark":"a"})", g), ParseError);
  EXPECT_THROW(parse_histories("{\"tau\":2}\n{\"t\":3,\"mark\":\"a\"}\n", g), ParseError);
  EXPECT_THROW(parse_histories("{\"tau\":2}\n{\"t\":1,\"mark\":\"zz\"}\n", g), ParseError);
  EXPECT_THROW(parse_histories("{\"tau\":2}\n{\"t\":1,\"mark\":\"d\"}\n", g), ParseError);
  try {
    parse_histories("{\"tau\":2}\n\nnot json\n", g);
    ADD_FAILURE();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  EXPECT_TRUE(parse_histories("", g).empty());
}

TEST(Dot, EdgelessGraphHasOnlyNodes) {
  const DynamicGraph g({"a", "b"}, {});
  EXPECT_EQ(export_dot(g), "digraph \"G\" {\n  \"a\";\n  \"b\";\n}\n");
}

TEST(Dot, SkinDiseaseSingleArrow) {
  const auto text = export_dot(builtin_fixture("skin_disease").graph);
  EXPECT_NE(text.find("\"menopause\" -> \"skin\";"), std::string::npos);
  EXPECT_EQ(text.find("\"skin\" -> "), std::string::npos);
}

TEST(Dot, MutualEdgeDrawnOnceWithTwoHeads) {
  const auto text = export_dot(builtin_fixture("home_visits").graph);
  EXPECT_NE(text.find("\"ho\" -> \"hs\" [dir=both];"), std::string::npos);
  EXPECT_EQ(text.find("\"hs\" -> \"ho\""), std::string::npos);
  EXPECT_NE(text.find("\"d\" [peripheries=2];"), std::string::npos);
  EXPECT_EQ(text, export_dot(builtin_fixture("home_visits").graph));
}

TEST(Dot, MoralGraphMarksMarriageEdges) {
  const auto text = export_dot(moralize(builtin_fixture("home_visits").graph), {"moral", {}});
  EXPECT_EQ(text.rfind("graph \"moral\" {", 0), 0U);
  EXPECT_NE(text.find("\"vi\" -- \"hs\" [style=dotted];"), std::string::npos);
  EXPECT_NE(text.find("\"vi\" -- \"ho\";"), std::string::npos);
}
