#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ligraph/graph.hpp"

namespace ligraph {

struct Event {
  double time = 0.0;
  std::size_t mark = 0;
  friend bool operator==(const Event&, const Event&) = default;
};

// Realization of the history process on [0, horizon]. Event times are strictly
// increasing (no two marks jump together). A stopped history ends at
// `stopped_at`, the time of its absorbing event.
struct History {
  std::vector<Event> events;
  double horizon = 0.0;
  std::optional<double> stopped_at;

  // End of the observation window: stopped_at when set, else horizon.
  double end() const { return stopped_at.value_or(horizon); }

  friend bool operator==(const History&, const History&) = default;
};

// Throws std::invalid_argument when h violates a history invariant: positive
// finite horizon, times in (0, horizon] strictly increasing, marks that are
// vertices of g, stopped_at not before the last event, and an absorbing event
// (if any) being the last event with stopped_at equal to its time.
void validate_history(const DynamicGraph& g, const History& h);

// H^A: the events whose mark lies in a. Horizon and stopped_at are kept.
History restrict_history(const History& h, VertexSet a);

}  // namespace ligraph
