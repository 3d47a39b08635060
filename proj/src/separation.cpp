#include "ligraph/separation.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

namespace ligraph {

namespace {

void require_query(const DynamicGraph& g, const Query& q) {
  g.require_subset(q.a, "query set A");
  g.require_subset(q.b, "query set B");
  g.require_subset(q.c, "query set C");
}

// Search state: vertex plus how the walk arrived there.
//   kDown: along an edge pointing into the vertex (u -> v)
//   kUp:   along an edge pointing out of the vertex (u <- v)
constexpr std::size_t kDown = 0;
constexpr std::size_t kUp = 1;

struct TrailSearch {
  std::size_t target_state = SIZE_MAX;   // first state reached in B
  std::vector<std::size_t> predecessor;  // state -> previous state, SIZE_MAX for starts
  std::vector<std::size_t> start_vertex; // start vertex in A for start states
};

// Reachability over (vertex, arrival direction). Allowed trails never use an
// edge leaving B, and the first vertex of B reached ends the trail, so edges
// out of B are simply never traversed. A vertex v continues a trail as a
// non-collider iff v is not in C, and as a collider iff v is in C or has a
// descendant in C.
//
// With `scope` = An(A u B u C) the search is exact. Take any vertex x on an
// active allowed trail and walk from x towards each end. If both walks reach
// the ends along edges pointing away from x, x is an ancestor of A or B.
// Otherwise one walk meets an edge pointing back, which makes x or one of its
// descendants a collider; active colliders lie in C u an(C), so x is in an(C).
TrailSearch search_trails(const DynamicGraph& g, const Query& nq, VertexSet scope) {
  const std::size_t n = g.universe_size();
  const VertexSet collider_ok = nq.c | ancestors(g, nq.c);
  TrailSearch out;
  out.predecessor.assign(2 * n, SIZE_MAX);
  out.start_vertex.assign(2 * n, SIZE_MAX);
  std::vector<char> seen(2 * n, 0);
  std::deque<std::size_t> queue;

  auto push = [&](std::size_t v, std::size_t dir, std::size_t from_state, std::size_t start) {
    const std::size_t s = 2 * v + dir;
    if (seen[s]) return;
    seen[s] = 1;
    out.predecessor[s] = from_state;
    out.start_vertex[s] = start;
    queue.push_back(s);
  };

  nq.a.for_each([&](std::size_t a) {
    (g.children_of(a) & scope).for_each([&](std::size_t w) { push(w, kDown, SIZE_MAX, a); });
    ((g.parents_of(a) & scope) - nq.b).for_each([&](std::size_t w) { push(w, kUp, SIZE_MAX, a); });
  });

  while (!queue.empty()) {
    const std::size_t s = queue.front();
    queue.pop_front();
    const std::size_t v = s / 2;
    const std::size_t dir = s % 2;
    if (nq.b.contains(v)) {
      // Only kDown states reach B: kUp would mean the trail used an edge out of B.
      out.target_state = s;
      return out;
    }
    const VertexSet kids = g.children_of(v) & scope;
    const VertexSet pars = (g.parents_of(v) & scope) - nq.b;
    const bool in_c = nq.c.contains(v);
    if (dir == kDown) {
      if (!in_c) kids.for_each([&](std::size_t w) { push(w, kDown, s, SIZE_MAX); });
      if (collider_ok.contains(v)) pars.for_each([&](std::size_t w) { push(w, kUp, s, SIZE_MAX); });
    } else if (!in_c) {
      kids.for_each([&](std::size_t w) { push(w, kDown, s, SIZE_MAX); });
      pars.for_each([&](std::size_t w) { push(w, kUp, s, SIZE_MAX); });
    }
  }
  return out;
}

bool trail_route(const DynamicGraph& g, const Query& q, bool restrict_to_ancestral) {
  require_query(g, q);
  const Query nq = normalized(q);
  if (nq.a.empty() || nq.b.empty()) return true;
  const VertexSet scope = restrict_to_ancestral ? ancestral_closure(g, nq.a | nq.b | nq.c) : g.vertices();
  return search_trails(g, nq, scope).target_state == SIZE_MAX;
}

// Depth-first enumeration of simple allowed trails with incremental blocking
// checks. Only used when the walk recovered from the reachability search
// repeats a vertex.
std::optional<Trail> dfs_witness(const DynamicGraph& g, const Query& nq, VertexSet scope) {
  const VertexSet collider_ok = nq.c | ancestors(g, nq.c);
  std::vector<std::size_t> path;
  std::vector<TrailStep> steps;
  VertexSet on_path;
  std::optional<Trail> found;

  std::function<void(std::size_t, bool)> extend = [&](std::size_t v, bool arrived_into_v) {
    if (found) return;
    if (nq.b.contains(v)) {
      found = Trail{path, steps};
      return;
    }
    const bool in_c = nq.c.contains(v);
    const bool is_start = path.size() == 1;
    auto try_step = [&](std::size_t w, EdgeOrientation o) {
      if (found || on_path.contains(w)) return;
      const bool into_v_next = (o == EdgeOrientation::backward);  // w -> v
      if (!is_start) {
        const bool collider = arrived_into_v && into_v_next;
        if (collider ? !collider_ok.contains(v) : in_c) return;
      }
      path.push_back(w);
      steps.push_back({o, g.has_edge(v, w) && g.has_edge(w, v)});
      on_path = on_path.with(w);
      extend(w, o == EdgeOrientation::forward);
      on_path = on_path.without(w);
      steps.pop_back();
      path.pop_back();
    };
    (g.children_of(v) & scope).for_each([&](std::size_t w) { try_step(w, EdgeOrientation::forward); });
    ((g.parents_of(v) & scope) - nq.b).for_each([&](std::size_t w) { try_step(w, EdgeOrientation::backward); });
  };

  nq.a.for_each([&](std::size_t a) {
    if (found) return;
    path = {a};
    steps.clear();
    on_path = VertexSet::single(a);
    extend(a, false);
  });
  return found;
}

}  // namespace

Query normalized(const Query& q) { return {q.a - (q.b | q.c), q.b, q.c - q.b}; }

bool delta_separated_moral(const DynamicGraph& g, const Query& q) {
  require_query(g, q);
  const Query nq = normalized(q);
  if (nq.a.empty() || nq.b.empty()) return true;
  const VertexSet s = ancestral_closure(g, nq.a | nq.b | nq.c);
  const UndirectedGraph h = moralize(delete_out_edges(induced_subgraph(g, s), nq.b));
  return u_separated(h, nq.a, nq.b, nq.c);
}

bool delta_separated_trail(const DynamicGraph& g, const Query& q) { return trail_route(g, q, true); }

bool delta_separated_trail_unrestricted(const DynamicGraph& g, const Query& q) { return trail_route(g, q, false); }

bool delta_separated(const DynamicGraph& g, const Query& q, SeparationMethod method) {
  return method == SeparationMethod::moral ? delta_separated_moral(g, q) : delta_separated_trail(g, q);
}

bool is_active_trail(const DynamicGraph& g, const Trail& trail, const Query& q) {
  require_query(g, q);
  const Query nq = normalized(q);
  const auto& vs = trail.vertices;
  if (vs.size() < 2 || trail.steps.size() + 1 != vs.size()) return false;
  if (!nq.a.contains(vs.front()) || !nq.b.contains(vs.back())) return false;
  VertexSet seen;
  for (auto v : vs) {
    if (!g.vertices().contains(v) || seen.contains(v)) return false;
    seen = seen.with(v);
  }
  for (std::size_t i = 0; i < trail.steps.size(); ++i) {
    const bool fwd = trail.steps[i].orientation == EdgeOrientation::forward;
    const std::size_t tail = fwd ? vs[i] : vs[i + 1];
    const std::size_t head = fwd ? vs[i + 1] : vs[i];
    if (!g.has_edge(tail, head)) return false;
    if (trail.steps[i].both_present != (g.has_edge(tail, head) && g.has_edge(head, tail))) return false;
    if (nq.b.contains(tail) && !nq.b.contains(head)) return false;  // not allowed
  }
  const VertexSet collider_ok = nq.c | ancestors(g, nq.c);
  for (std::size_t i = 1; i + 1 < vs.size(); ++i) {
    const bool into_from_left = trail.steps[i - 1].orientation == EdgeOrientation::forward;
    const bool into_from_right = trail.steps[i].orientation == EdgeOrientation::backward;
    const bool collider = into_from_left && into_from_right;
    if (collider ? !collider_ok.contains(vs[i]) : nq.c.contains(vs[i])) return false;
  }
  return true;
}

std::optional<Trail> active_trail_witness(const DynamicGraph& g, const Query& q) {
  require_query(g, q);
  const Query nq = normalized(q);
  if (nq.a.empty() || nq.b.empty()) return std::nullopt;
  const VertexSet scope = ancestral_closure(g, nq.a | nq.b | nq.c);
  const TrailSearch search = search_trails(g, nq, scope);
  if (search.target_state == SIZE_MAX) return std::nullopt;

  std::vector<std::size_t> states;
  for (std::size_t s = search.target_state; s != SIZE_MAX; s = search.predecessor[s]) states.push_back(s);
  std::reverse(states.begin(), states.end());

  Trail candidate;
  candidate.vertices.push_back(search.start_vertex[states.front()]);
  for (auto s : states) {
    const std::size_t prev = candidate.vertices.back();
    const std::size_t v = s / 2;
    const bool fwd = (s % 2) == kDown;
    candidate.vertices.push_back(v);
    candidate.steps.push_back({fwd ? EdgeOrientation::forward : EdgeOrientation::backward,
                               g.has_edge(prev, v) && g.has_edge(v, prev)});
  }
  // The search explores walks; a walk that repeats a vertex is not a trail,
  // so fall back to exact trail enumeration in that case.
  if (is_active_trail(g, candidate, nq)) return candidate;
  return dfs_witness(g, nq, scope);
}

std::vector<VertexSet> minimal_separators(const DynamicGraph& g, VertexSet a, VertexSet b, VertexSet within) {
  g.require_subset(a, "minimal_separators(): a");
  g.require_subset(b, "minimal_separators(): b");
  g.require_subset(within, "minimal_separators(): within");
  if (within.size() > kMaxSeparatorSearch) {
    throw std::invalid_argument("minimal_separators(): |within| = " + std::to_string(within.size()) +
                                " exceeds " + std::to_string(kMaxSeparatorSearch));
  }
  const auto members = within.indices();
  const std::size_t n = members.size();
  const std::size_t count = std::size_t{1} << n;
  auto expand = [&](std::size_t mask) {
    VertexSet c;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) c = c.with(members[i]);
    }
    return c;
  };
  std::vector<char> sep(count);
  for (std::size_t m = 0; m < count; ++m) sep[m] = delta_separated_moral(g, {a, b, expand(m)});
  // below[m]: some proper subset of m separates.
  std::vector<char> below(count, 0);
  std::vector<VertexSet> out;
  for (std::size_t m = 0; m < count; ++m) {
    for (std::size_t i = 0; i < n && !below[m]; ++i) {
      if ((m >> i) & 1U) {
        const std::size_t sub = m & ~(std::size_t{1} << i);
        below[m] = sep[sub] || below[sub];
      }
    }
    if (sep[m] && !below[m]) out.push_back(expand(m));
  }
  // Member order is increasing, so mask order equals bit-pattern order.
  return out;
}

bool ancestral_moral_separated(const DynamicGraph& g, VertexSet a, VertexSet b, VertexSet c) {
  g.require_subset(a, "a");
  g.require_subset(b, "b");
  g.require_subset(c, "c");
  const VertexSet s = ancestral_closure(g, a | b | c);
  return u_separated(moralize(induced_subgraph(g, s)), a, b, c);
}

}  // namespace ligraph
