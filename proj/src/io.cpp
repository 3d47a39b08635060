#include "ligraph/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace ligraph {

using nlohmann::json;

namespace {

json parse_json(std::string_view text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(what + ": " + e.what());
  }
}

const json& field(const json& obj, const char* key, const std::string& ctx) {
  if (!obj.is_object()) throw ParseError(ctx + ": expected a JSON object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(ctx + ": missing field \"" + key + "\"");
  return *it;
}

std::string as_label(const json& j, const std::string& ctx) {
  if (!j.is_string()) throw ParseError(ctx + ": expected a mark label (string)");
  return j.get<std::string>();
}

double as_number(const json& j, const std::string& ctx) {
  if (!j.is_number()) throw ParseError(ctx + ": expected a number");
  return j.get<double>();
}

std::size_t lookup(const DynamicGraph& g, const std::string& label, const std::string& ctx) {
  try {
    return g.index_of(label);
  } catch (const std::domain_error&) {
    throw ParseError(ctx + ": unknown mark '" + label + "'");
  }
}

}  // namespace

DynamicGraph parse_graph(std::string_view text) {
  const json doc = parse_json(text, "graph");
  const json& nodes = field(doc, "nodes", "graph");
  if (!nodes.is_array()) throw ParseError("graph: \"nodes\" must be an array");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < nodes.size(); ++i) labels.push_back(as_label(nodes[i], "graph.nodes[" + std::to_string(i) + "]"));

  std::vector<std::pair<std::string, std::string>> edges;
  std::set<std::pair<std::string, std::string>> seen;
  if (doc.contains("edges")) {
    const json& es = doc["edges"];
    if (!es.is_array()) throw ParseError("graph: \"edges\" must be an array");
    for (std::size_t i = 0; i < es.size(); ++i) {
      const std::string ctx = "graph.edges[" + std::to_string(i) + "]";
      if (!es[i].is_array() || es[i].size() != 2) throw ParseError(ctx + ": expected [from, to]");
      std::pair<std::string, std::string> e{as_label(es[i][0], ctx), as_label(es[i][1], ctx)};
      if (!seen.insert(e).second) throw ParseError(ctx + ": duplicate edge " + e.first + " -> " + e.second);
      edges.push_back(std::move(e));
    }
  }
  std::vector<std::string> absorbing;
  if (doc.contains("absorbing")) {
    const json& ab = doc["absorbing"];
    if (!ab.is_array()) throw ParseError("graph: \"absorbing\" must be an array");
    for (std::size_t i = 0; i < ab.size(); ++i) absorbing.push_back(as_label(ab[i], "graph.absorbing[" + std::to_string(i) + "]"));
  }
  try {
    return DynamicGraph::from_labels(std::move(labels), edges, absorbing);
  } catch (const std::exception& e) {
    throw ParseError(std::string("graph: ") + e.what());
  }
}

std::string serialize_graph(const DynamicGraph& g) {
  json doc;
  doc["nodes"] = g.labels_of(g.vertices());
  doc["edges"] = json::array();
  for (const auto& [j, k] : g.edges()) doc["edges"].push_back({g.label(j), g.label(k)});
  doc["absorbing"] = g.labels_of(g.absorbing());
  return doc.dump(2) + "\n";
}

IntensityModel parse_model(std::string_view text, const DynamicGraph& g) {
  const json doc = parse_json(text, "model");
  const json& base = field(doc, "baselines", "model");
  if (!base.is_object()) throw ParseError("model: \"baselines\" must be an object");
  std::vector<double> baselines(g.universe_size(), 0.0);
  std::vector<bool> given(g.universe_size(), false);
  for (const auto& [label, value] : base.items()) {
    const std::string ctx = "model.baselines." + label;
    const std::size_t k = lookup(g, label, ctx);
    baselines[k] = as_number(value, ctx);
    given[k] = true;
  }
  for (std::size_t k = 0; k < g.universe_size(); ++k) {
    if (!given[k]) throw ParseError("model.baselines: no baseline for mark '" + g.label(k) + "'");
  }
  std::vector<Multiplier> mults;
  if (doc.contains("multipliers")) {
    const json& ms = doc["multipliers"];
    if (!ms.is_array()) throw ParseError("model: \"multipliers\" must be an array");
    for (std::size_t i = 0; i < ms.size(); ++i) {
      const std::string ctx = "model.multipliers[" + std::to_string(i) + "]";
      Multiplier m;
      m.from = lookup(g, as_label(field(ms[i], "from", ctx), ctx + ".from"), ctx + ".from");
      m.to = lookup(g, as_label(field(ms[i], "to", ctx), ctx + ".to"), ctx + ".to");
      m.factor = as_number(field(ms[i], "factor", ctx), ctx + ".factor");
      if (ms[i].contains("cap")) {
        const json& cap = ms[i]["cap"];
        if (!cap.is_number_unsigned() || cap.get<unsigned>() < 1) throw ParseError(ctx + ".cap: expected a positive integer");
        m.cap = cap.get<unsigned>();
      }
      mults.push_back(m);
    }
  }
  try {
    return IntensityModel(std::move(baselines), std::move(mults));
  } catch (const ModelError& e) {
    throw ParseError(std::string("model: ") + e.what());
  }
}

std::string serialize_model(const IntensityModel& m, const DynamicGraph& g) {
  json doc;
  doc["baselines"] = json::object();
  for (std::size_t k = 0; k < m.num_marks(); ++k) doc["baselines"][g.label(k)] = m.baseline(k);
  doc["multipliers"] = json::array();
  for (const auto& x : m.multipliers()) {
    doc["multipliers"].push_back({{"from", g.label(x.from)}, {"to", g.label(x.to)}, {"factor", x.factor}, {"cap", x.cap}});
  }
  return doc.dump(2) + "\n";
}

std::vector<HistoryRecord> parse_histories(std::string_view text, const DynamicGraph& g) {
  std::vector<HistoryRecord> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  auto finish = [&] {
    if (out.empty()) return;
    try {
      validate_history(g, out.back().history);
    } catch (const std::invalid_argument& e) {
      throw ParseError("history " + std::to_string(out.size() - 1) + ": " + e.what());
    }
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string ctx = "history line " + std::to_string(line_no);
    const json rec = parse_json(line, ctx);
    if (!rec.is_object()) throw ParseError(ctx + ": expected a JSON object");
    if (rec.contains("tau")) {
      finish();
      HistoryRecord r;
      r.history.horizon = as_number(rec["tau"], ctx + ".tau");
      if (rec.contains("stopped_at") && !rec["stopped_at"].is_null()) {
        r.history.stopped_at = as_number(rec["stopped_at"], ctx + ".stopped_at");
      }
      if (rec.contains("seed") && !rec["seed"].is_null()) r.seed = rec["seed"].get<std::uint64_t>();
      if (rec.contains("replicate") && !rec["replicate"].is_null()) r.replicate = rec["replicate"].get<std::uint64_t>();
      out.push_back(std::move(r));
      continue;
    }
    if (out.empty()) throw ParseError(ctx + ": event before any header record");
    Event e;
    e.time = as_number(field(rec, "t", ctx), ctx + ".t");
    e.mark = lookup(g, as_label(field(rec, "mark", ctx), ctx + ".mark"), ctx + ".mark");
    out.back().history.events.push_back(e);
  }
  finish();
  return out;
}

std::string serialize_histories(const std::vector<History>& histories, const DynamicGraph& g,
                                std::optional<std::uint64_t> seed) {
  std::string out;
  for (std::size_t i = 0; i < histories.size(); ++i) {
    const History& h = histories[i];
    json header;
    header["tau"] = h.horizon;
    header["replicate"] = i;
    header["seed"] = seed ? json(*seed) : json(nullptr);
    header["stopped_at"] = h.stopped_at ? json(*h.stopped_at) : json(nullptr);
    out += header.dump() + "\n";
    for (const Event& e : h.events) {
      out += json{{"mark", g.label(e.mark)}, {"t", e.time}}.dump() + "\n";
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace ligraph
