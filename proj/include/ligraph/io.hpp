#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ligraph/graph.hpp"
#include "ligraph/history.hpp"
#include "ligraph/model.hpp"

namespace ligraph {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"nodes": [label...], "edges": [[from, to]...], "absorbing": [label...]}
// "absorbing" is optional. Duplicate edges, self-loops and unknown labels are
// rejected with a ParseError naming the offending field.
DynamicGraph parse_graph(std::string_view text);
// Keys sorted; parse_graph(serialize_graph(g)) == g for graphs whose
// vertices() is the full label universe.
std::string serialize_graph(const DynamicGraph& g);

// {"baselines": {mark: rate...}, "multipliers": [{"from", "to", "factor", "cap"}...]}
// Every mark of g needs a baseline; "cap" defaults to 1. The result is not
// checked for faithfulness to g (see validate_model).
IntensityModel parse_model(std::string_view text, const DynamicGraph& g);
std::string serialize_model(const IntensityModel& m, const DynamicGraph& g);

// JSON Lines. Each history starts with a header record
//   {"tau": ..., "seed": ..., "replicate": ..., "stopped_at": ... | null}
// followed by one {"t": ..., "mark": label} record per event.
struct HistoryRecord {
  History history;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> replicate;
};

std::vector<HistoryRecord> parse_histories(std::string_view text, const DynamicGraph& g);
std::string serialize_histories(const std::vector<History>& histories, const DynamicGraph& g,
                                std::optional<std::uint64_t> seed = std::nullopt);

std::string read_file(const std::string& path);

}  // namespace ligraph
