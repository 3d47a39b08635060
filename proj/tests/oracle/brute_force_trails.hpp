#pragma once

// Test-only oracle: decides delta-separation by enumerating every simple trail
// of the whole graph and applying the blocking rule literally. Shares no code
// with the library's separation routines beyond the graph accessors.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ligraph/graph.hpp"

namespace ligraph::oracle {

inline std::uint64_t descendants_with_self(const DynamicGraph& g, std::size_t v) {
  std::uint64_t seen = std::uint64_t{1} << v;
  std::vector<std::size_t> stack{v};
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < g.universe_size(); ++w) {
      if (g.has_edge(u, w) && !((seen >> w) & 1U)) {
        seen |= std::uint64_t{1} << w;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

struct BruteForceTrails {
  const DynamicGraph& g;
  std::uint64_t a, b, c;
  std::vector<std::size_t> path;
  std::vector<bool> into_next;  // into_next[i]: step i points towards path[i+1]
  bool active_found = false;

  bool in(std::uint64_t s, std::size_t v) const { return (s >> v) & 1U; }

  bool trail_active() const {
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      const bool collider = into_next[i - 1] && !into_next[i];
      const std::size_t v = path[i];
      if (collider) {
        if ((descendants_with_self(g, v) & c) == 0) return false;
      } else if (in(c, v)) {
        return false;
      }
    }
    return true;
  }

  void extend() {
    if (active_found) return;
    const std::size_t v = path.back();
    if (path.size() > 1 && in(b, v) && trail_active()) {
      active_found = true;
      return;
    }
    for (std::size_t w = 0; w < g.universe_size(); ++w) {
      if (!g.vertices().contains(w)) continue;
      bool on_path = false;
      for (auto p : path) on_path = on_path || p == w;
      if (on_path) continue;
      for (int orient = 0; orient < 2; ++orient) {
        const bool forward = orient == 0;
        if (forward ? !g.has_edge(v, w) : !g.has_edge(w, v)) continue;
        const std::size_t tail = forward ? v : w;
        const std::size_t head = forward ? w : v;
        if (in(b, tail) && !in(b, head)) continue;  // edge leaving B: trail not allowed
        path.push_back(w);
        into_next.push_back(forward);
        extend();
        path.pop_back();
        into_next.pop_back();
      }
    }
  }
};

// Literal trail condition, with the overlap conventions applied first.
inline bool delta_separated_brute_force(const DynamicGraph& g, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  const std::uint64_t na = a & ~(b | c);
  const std::uint64_t nc = c & ~b;
  if (na == 0 || b == 0) return true;
  BruteForceTrails search{g, na, b, nc, {}, {}, false};
  for (std::size_t s = 0; s < g.universe_size(); ++s) {
    if (!((na >> s) & 1U)) continue;
    search.path = {s};
    search.into_next.clear();
    search.extend();
    if (search.active_found) return false;
  }
  return true;
}

}  // namespace ligraph::oracle
