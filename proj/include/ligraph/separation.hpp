#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ligraph/graph.hpp"

namespace ligraph {

// Asks whether C delta-separates A from B, i.e. the candidate statement
// "B is locally independent of A given C". Direction matters.
struct Query {
  VertexSet a;
  VertexSet b;
  VertexSet c;
  friend bool operator==(const Query&, const Query&) = default;
};

// Overlap convention: (A, B, C) -> (A \ (B u C), B, C \ B).
Query normalized(const Query& q);

enum class SeparationMethod { moral, trail };

// Moral-graph route: u-separation in the moral graph of the ancestral
// subgraph of A u B u C after deleting the edges leaving B.
bool delta_separated_moral(const DynamicGraph& g, const Query& q);

// Trail route: every allowed trail from A to B is blocked by C. Implemented
// as reachability over (vertex, arrival direction) states inside
// An(A u B u C); see separation.cpp for why the restriction is exact.
bool delta_separated_trail(const DynamicGraph& g, const Query& q);

// Same search with the ancestral restriction switched off. Exposed so tests
// can confirm the restriction does not change any answer.
bool delta_separated_trail_unrestricted(const DynamicGraph& g, const Query& q);

bool delta_separated(const DynamicGraph& g, const Query& q, SeparationMethod method = SeparationMethod::moral);

enum class EdgeOrientation {
  forward,   // edge (vertices[i], vertices[i+1])
  backward,  // edge (vertices[i+1], vertices[i])
};

struct TrailStep {
  EdgeOrientation orientation = EdgeOrientation::forward;
  // The reverse edge is also present in the graph (mutual dependence).
  bool both_present = false;
};

struct Trail {
  std::vector<std::size_t> vertices;
  std::vector<TrailStep> steps;  // steps[i] joins vertices[i] and vertices[i+1]
};

// True iff `trail` is an allowed trail from A to B in g that C does not block,
// for the normalized form of q.
bool is_active_trail(const DynamicGraph& g, const Trail& trail, const Query& q);

// An active allowed trail when q is not separated, nothing otherwise.
std::optional<Trail> active_trail_witness(const DynamicGraph& g, const Query& q);

// Largest `within` accepted by minimal_separators().
inline constexpr std::size_t kMaxSeparatorSearch = 20;

// All inclusion-minimal C within `within` such that C delta-separates a from b,
// sorted by bit pattern. Separation is not monotone in C, so minimality is
// checked against every proper subset.
std::vector<VertexSet> minimal_separators(const DynamicGraph& g, VertexSet a, VertexSet b, VertexSet within);

// Separation of a and b by c in the moral graph of the ancestral subgraph of
// a u b u c, with no edge deletion. When it holds, the histories of a and b
// are conditionally independent given the history of c.
bool ancestral_moral_separated(const DynamicGraph& g, VertexSet a, VertexSet b, VertexSet c);

}  // namespace ligraph
