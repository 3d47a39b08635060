#include "ligraph/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace ligraph {

namespace {

LabelTable make_labels(std::vector<std::string> labels) {
  if (labels.size() > kMaxVertices) {
    throw std::length_error("graph has " + std::to_string(labels.size()) + " marks; at most " +
                            std::to_string(kMaxVertices) + " are supported");
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw std::invalid_argument("empty mark label");
    if (!seen.insert(l).second) throw std::invalid_argument("duplicate mark label '" + l + "'");
  }
  return std::make_shared<const std::vector<std::string>>(std::move(labels));
}

std::vector<VertexSet> transpose(const std::vector<VertexSet>& parents) {
  std::vector<VertexSet> children(parents.size());
  for (std::size_t k = 0; k < parents.size(); ++k) {
    parents[k].for_each([&](std::size_t j) { children[j] = children[j].with(k); });
  }
  return children;
}

// Vertices reachable from `seed` by following `step` (excluding the seed
// unless it is reached again through a cycle; callers strip the seed).
VertexSet reach(const std::vector<VertexSet>& step, VertexSet seed) {
  VertexSet visited = seed;
  VertexSet frontier = seed;
  while (!frontier.empty()) {
    VertexSet next;
    frontier.for_each([&](std::size_t v) { next |= step[v]; });
    frontier = next - visited;
    visited |= frontier;
  }
  return visited;
}

}  // namespace

DynamicGraph::DynamicGraph() : labels_(std::make_shared<const std::vector<std::string>>()) {}

DynamicGraph::DynamicGraph(std::vector<std::string> labels, const std::vector<Edge>& edges, VertexSet absorbing)
    : labels_(make_labels(std::move(labels))),
      vertices_(VertexSet::range(labels_->size())),
      parents_(labels_->size()),
      absorbing_(absorbing) {
  const std::size_t n = labels_->size();
  for (const auto& [from, to] : edges) {
    if (from >= n || to >= n) throw std::domain_error("edge endpoint out of range");
    if (from == to) throw std::invalid_argument("self-loop on '" + label(from) + "' is not allowed");
    if (parents_[to].contains(from)) {
      throw std::invalid_argument("duplicate edge " + label(from) + " -> " + label(to));
    }
    parents_[to] = parents_[to].with(from);
  }
  children_ = transpose(parents_);
  require_subset(absorbing_, "absorbing set");
}

DynamicGraph::DynamicGraph(LabelTable labels, VertexSet vertices, std::vector<VertexSet> parents, VertexSet absorbing)
    : labels_(std::move(labels)),
      vertices_(vertices),
      parents_(std::move(parents)),
      children_(transpose(parents_)),
      absorbing_(absorbing) {}

DynamicGraph DynamicGraph::from_labels(std::vector<std::string> labels,
                                       const std::vector<std::pair<std::string, std::string>>& edges,
                                       const std::vector<std::string>& absorbing) {
  DynamicGraph names(labels, {});
  std::vector<Edge> idx;
  idx.reserve(edges.size());
  for (const auto& [from, to] : edges) idx.emplace_back(names.index_of(from), names.index_of(to));
  return DynamicGraph(std::move(labels), idx, names.set_of(absorbing));
}

const std::string& DynamicGraph::label(std::size_t v) const {
  if (v >= labels_->size()) throw std::domain_error("vertex index " + std::to_string(v) + " out of range");
  return (*labels_)[v];
}

std::vector<MarkId> DynamicGraph::marks() const {
  std::vector<MarkId> out;
  vertices_.for_each([&](std::size_t v) { out.push_back(mark(v)); });
  return out;
}

std::size_t DynamicGraph::index_of(std::string_view l) const {
  const auto& ls = *labels_;
  auto it = std::find(ls.begin(), ls.end(), l);
  if (it == ls.end()) throw std::domain_error("unknown mark '" + std::string(l) + "'");
  return static_cast<std::size_t>(it - ls.begin());
}

VertexSet DynamicGraph::set_of(const std::vector<std::string>& ls) const {
  VertexSet s;
  for (const auto& l : ls) s = s.with(index_of(l));
  return s;
}

VertexSet DynamicGraph::set_of(std::initializer_list<std::string_view> ls) const {
  VertexSet s;
  for (auto l : ls) s = s.with(index_of(l));
  return s;
}

std::vector<std::string> DynamicGraph::labels_of(VertexSet s) const {
  std::vector<std::string> out;
  s.for_each([&](std::size_t v) { out.push_back(label(v)); });
  return out;
}

bool DynamicGraph::has_edge(std::size_t from, std::size_t to) const {
  return to < parents_.size() && parents_[to].contains(from);
}

std::vector<Edge> DynamicGraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t j = 0; j < children_.size(); ++j) {
    children_[j].for_each([&](std::size_t k) { out.emplace_back(j, k); });
  }
  return out;
}

std::size_t DynamicGraph::edge_count() const {
  std::size_t n = 0;
  for (auto p : parents_) n += p.size();
  return n;
}

void DynamicGraph::require_subset(VertexSet s, std::string_view what) const {
  if (!s.subset_of(vertices_)) {
    throw std::domain_error(std::string(what) + " is not a subset of the graph's vertices");
  }
}

bool operator==(const DynamicGraph& a, const DynamicGraph& b) {
  return *a.labels_ == *b.labels_ && a.vertices_ == b.vertices_ && a.parents_ == b.parents_ &&
         a.absorbing_ == b.absorbing_;
}

UndirectedGraph::UndirectedGraph(LabelTable labels, VertexSet vertices)
    : labels_(std::move(labels)), vertices_(vertices), adjacency_(labels_->size()), marriage_(labels_->size()) {}

void UndirectedGraph::add_edge(std::size_t j, std::size_t k, bool marriage) {
  if (j == k) throw std::invalid_argument("undirected self-loop");
  if (!vertices_.contains(j) || !vertices_.contains(k)) throw std::domain_error("edge endpoint not a vertex");
  if (has_edge(j, k)) return;
  adjacency_[j] = adjacency_[j].with(k);
  adjacency_[k] = adjacency_[k].with(j);
  if (marriage) {
    marriage_[j] = marriage_[j].with(k);
    marriage_[k] = marriage_[k].with(j);
  }
}

bool UndirectedGraph::has_edge(std::size_t j, std::size_t k) const {
  return j < adjacency_.size() && adjacency_[j].contains(k);
}

bool UndirectedGraph::is_marriage_edge(std::size_t j, std::size_t k) const {
  return j < marriage_.size() && marriage_[j].contains(k);
}

std::vector<Edge> UndirectedGraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t j = 0; j < adjacency_.size(); ++j) {
    adjacency_[j].for_each([&](std::size_t k) {
      if (j < k) out.emplace_back(j, k);
    });
  }
  return out;
}

bool operator==(const UndirectedGraph& a, const UndirectedGraph& b) {
  return *a.labels_ == *b.labels_ && a.vertices_ == b.vertices_ && a.adjacency_ == b.adjacency_;
}

VertexSet parents(const DynamicGraph& g, VertexSet a) {
  g.require_subset(a, "parents(): argument");
  VertexSet out;
  a.for_each([&](std::size_t k) { out |= g.parents_of(k); });
  return out - a;
}

VertexSet children(const DynamicGraph& g, VertexSet a) {
  g.require_subset(a, "children(): argument");
  VertexSet out;
  a.for_each([&](std::size_t j) { out |= g.children_of(j); });
  return out - a;
}

VertexSet closure(const DynamicGraph& g, VertexSet a) { return parents(g, a) | a; }

VertexSet ancestors(const DynamicGraph& g, VertexSet a) {
  g.require_subset(a, "ancestors(): argument");
  std::vector<VertexSet> step(g.universe_size());
  g.vertices().for_each([&](std::size_t v) { step[v] = g.parents_of(v); });
  return reach(step, a) - a;
}

VertexSet descendants(const DynamicGraph& g, VertexSet a) {
  g.require_subset(a, "descendants(): argument");
  std::vector<VertexSet> step(g.universe_size());
  g.vertices().for_each([&](std::size_t v) { step[v] = g.children_of(v); });
  return reach(step, a) - a;
}

VertexSet nondescendants(const DynamicGraph& g, VertexSet a) {
  return g.vertices() - (descendants(g, a) | a);
}

VertexSet ancestral_closure(const DynamicGraph& g, VertexSet a) { return a | ancestors(g, a); }

DynamicGraph induced_subgraph(const DynamicGraph& g, VertexSet a) {
  g.require_subset(a, "induced_subgraph(): vertex set");
  std::vector<VertexSet> pa(g.universe_size());
  a.for_each([&](std::size_t k) { pa[k] = g.parents_of(k) & a; });
  return DynamicGraph(g.label_table(), a, std::move(pa), g.absorbing() & a);
}

DynamicGraph delete_out_edges(const DynamicGraph& g, VertexSet b) {
  g.require_subset(b, "delete_out_edges(): tail set");
  std::vector<VertexSet> pa(g.universe_size());
  g.vertices().for_each([&](std::size_t k) { pa[k] = g.parents_of(k) - b; });
  return DynamicGraph(g.label_table(), g.vertices(), std::move(pa), g.absorbing());
}

UndirectedGraph moralize(const DynamicGraph& g) {
  UndirectedGraph ug(g.label_table(), g.vertices());
  for (const auto& [j, k] : g.edges()) ug.add_edge(j, k);
  g.vertices().for_each([&](std::size_t child) {
    const auto pa = g.parents_of(child).indices();
    for (std::size_t x = 0; x < pa.size(); ++x) {
      for (std::size_t y = x + 1; y < pa.size(); ++y) ug.add_edge(pa[x], pa[y], /*marriage=*/true);
    }
  });
  return ug;
}

bool u_separated(const UndirectedGraph& ug, VertexSet a, VertexSet b, VertexSet c) {
  const VertexSet v = ug.vertices();
  if (!a.subset_of(v) || !b.subset_of(v) || !c.subset_of(v)) {
    throw std::domain_error("u_separated(): sets must be subsets of the graph's vertices");
  }
  const VertexSet source = a - c;
  const VertexSet target = b - c;
  if (source.empty() || target.empty()) return true;
  const VertexSet open = v - c;
  VertexSet visited = source;
  VertexSet frontier = source;
  while (!frontier.empty()) {
    if (frontier.intersects(target)) return false;
    VertexSet next;
    frontier.for_each([&](std::size_t u) { next |= ug.neighbors(u); });
    frontier = (next & open) - visited;
    visited |= frontier;
  }
  return true;
}

}  // namespace ligraph
