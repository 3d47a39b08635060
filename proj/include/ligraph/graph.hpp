#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ligraph/vertex_set.hpp"

namespace ligraph {

using Edge = std::pair<std::size_t, std::size_t>;

// A mark of the mark space: display label plus dense index.
struct MarkId {
  std::string label;
  std::size_t index = 0;
  friend bool operator==(const MarkId&, const MarkId&) = default;
};

// Labels are shared between a graph and every graph derived from it, so that
// vertex sets keep their meaning across induced subgraphs and moralization.
using LabelTable = std::shared_ptr<const std::vector<std::string>>;

// Directed graph over marks. Cycles and mutual edges j <-> k are allowed,
// self-loops are not. `vertices()` may be a strict subset of the label
// universe for graphs produced by induced_subgraph().
class DynamicGraph {
 public:
  DynamicGraph();
  DynamicGraph(std::vector<std::string> labels, const std::vector<Edge>& edges, VertexSet absorbing = {});

  static DynamicGraph from_labels(std::vector<std::string> labels,
                                  const std::vector<std::pair<std::string, std::string>>& edges,
                                  const std::vector<std::string>& absorbing = {});

  std::size_t universe_size() const { return labels_->size(); }
  VertexSet vertices() const { return vertices_; }
  VertexSet absorbing() const { return absorbing_; }

  const std::vector<std::string>& labels() const { return *labels_; }
  const LabelTable& label_table() const { return labels_; }
  const std::string& label(std::size_t v) const;
  MarkId mark(std::size_t v) const { return {label(v), v}; }
  std::vector<MarkId> marks() const;

  // Throws std::domain_error for an unknown label.
  std::size_t index_of(std::string_view label) const;
  VertexSet set_of(const std::vector<std::string>& labels) const;
  VertexSet set_of(std::initializer_list<std::string_view> labels) const;
  std::vector<std::string> labels_of(VertexSet s) const;

  bool has_edge(std::size_t from, std::size_t to) const;
  VertexSet parents_of(std::size_t v) const { return parents_.at(v); }
  VertexSet children_of(std::size_t v) const { return children_.at(v); }
  std::vector<Edge> edges() const;
  std::size_t edge_count() const;

  // Throws std::domain_error unless s is a subset of vertices().
  void require_subset(VertexSet s, std::string_view what) const;

  friend bool operator==(const DynamicGraph& a, const DynamicGraph& b);

 private:
  DynamicGraph(LabelTable labels, VertexSet vertices, std::vector<VertexSet> parents, VertexSet absorbing);

  friend DynamicGraph induced_subgraph(const DynamicGraph&, VertexSet);
  friend DynamicGraph delete_out_edges(const DynamicGraph&, VertexSet);

  LabelTable labels_;
  VertexSet vertices_;
  std::vector<VertexSet> parents_;
  std::vector<VertexSet> children_;
  VertexSet absorbing_;
};

// Undirected graph, produced by moralize(). Edges added for a common child
// that were not already in the skeleton are remembered as marriage edges.
class UndirectedGraph {
 public:
  UndirectedGraph(LabelTable labels, VertexSet vertices);

  void add_edge(std::size_t j, std::size_t k, bool marriage = false);

  std::size_t universe_size() const { return labels_->size(); }
  VertexSet vertices() const { return vertices_; }
  const std::vector<std::string>& labels() const { return *labels_; }
  const std::string& label(std::size_t v) const { return labels_->at(v); }
  const LabelTable& label_table() const { return labels_; }

  bool has_edge(std::size_t j, std::size_t k) const;
  bool is_marriage_edge(std::size_t j, std::size_t k) const;
  VertexSet neighbors(std::size_t v) const { return adjacency_.at(v); }
  // Pairs (j, k) with j < k, sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const UndirectedGraph& a, const UndirectedGraph& b);

 private:
  LabelTable labels_;
  VertexSet vertices_;
  std::vector<VertexSet> adjacency_;
  std::vector<VertexSet> marriage_;
};

// pa(A): vertices outside A with an edge into A.
VertexSet parents(const DynamicGraph& g, VertexSet a);
// ch(A): vertices outside A with an edge from A.
VertexSet children(const DynamicGraph& g, VertexSet a);
// cl(A) = pa(A) u A.
VertexSet closure(const DynamicGraph& g, VertexSet a);
// an(A), de(A) exclude A itself.
VertexSet ancestors(const DynamicGraph& g, VertexSet a);
VertexSet descendants(const DynamicGraph& g, VertexSet a);
VertexSet nondescendants(const DynamicGraph& g, VertexSet a);
// An(A) = A u an(A); the smallest ancestral set containing A.
VertexSet ancestral_closure(const DynamicGraph& g, VertexSet a);

DynamicGraph induced_subgraph(const DynamicGraph& g, VertexSet a);
// Removes every edge whose tail lies in b; the vertex set is unchanged.
DynamicGraph delete_out_edges(const DynamicGraph& g, VertexSet b);
UndirectedGraph moralize(const DynamicGraph& g);

// True iff every path between A\C and B\C in ug meets C. Sets need not be disjoint;
// a vertex in (A n B)\C is a path of length zero.
bool u_separated(const UndirectedGraph& ug, VertexSet a, VertexSet b, VertexSet c);

}  // namespace ligraph
