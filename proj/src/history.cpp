#include "ligraph/history.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ligraph {

void validate_history(const DynamicGraph& g, const History& h) {
  auto fail = [](const std::string& msg) { throw std::invalid_argument("invalid history: " + msg); };
  if (!(h.horizon > 0.0) || !std::isfinite(h.horizon)) fail("horizon must be positive and finite");
  if (h.stopped_at && (!(*h.stopped_at > 0.0) || *h.stopped_at > h.horizon)) {
    fail("stopped_at must lie in (0, horizon]");
  }
  double prev = 0.0;
  for (std::size_t i = 0; i < h.events.size(); ++i) {
    const Event& e = h.events[i];
    if (!std::isfinite(e.time) || e.time <= prev) {
      fail("event " + std::to_string(i) + " at t=" + std::to_string(e.time) + " is not strictly after its predecessor");
    }
    if (e.time > h.horizon) fail("event " + std::to_string(i) + " after the horizon");
    if (!g.vertices().contains(e.mark)) fail("event " + std::to_string(i) + " has an unknown mark");
    if (h.stopped_at && e.time > *h.stopped_at) fail("event " + std::to_string(i) + " after stopped_at");
    if (g.absorbing().contains(e.mark)) {
      if (i + 1 != h.events.size()) fail("absorbing mark '" + g.label(e.mark) + "' is followed by further events");
      if (!h.stopped_at || *h.stopped_at != e.time) fail("absorbing event must set stopped_at to its time");
    }
    prev = e.time;
  }
}

History restrict_history(const History& h, VertexSet a) {
  History out;
  out.horizon = h.horizon;
  out.stopped_at = h.stopped_at;
  for (const Event& e : h.events) {
    if (a.contains(e.mark)) out.events.push_back(e);
  }
  return out;
}

}  // namespace ligraph
