#include "ligraph/markov.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace ligraph {

namespace {

LocalIndependenceStatement make_statement(VertexSet a, VertexSet b, VertexSet c, Provenance p) {
  return {a - c, b, c, p};
}

void sort_statements(std::vector<LocalIndependenceStatement>& v) {
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
    return std::tuple(x.b, x.a, x.c) < std::tuple(y.b, y.a, y.c);
  });
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::pairwise: return "pairwise";
    case Provenance::local: return "local";
    case Provenance::global: return "global";
  }
  return "global";
}

std::vector<LocalIndependenceStatement> pairwise_statements(const DynamicGraph& g) {
  std::vector<LocalIndependenceStatement> out;
  const VertexSet v = g.vertices();
  v.for_each([&](std::size_t j) {
    v.for_each([&](std::size_t k) {
      if (j == k || g.has_edge(j, k)) return;
      const VertexSet jk = VertexSet::of({j, k});
      out.push_back(make_statement(VertexSet::single(j), VertexSet::single(k), v - jk, Provenance::pairwise));
    });
  });
  sort_statements(out);
  return out;
}

std::vector<LocalIndependenceStatement> local_statements(const DynamicGraph& g) {
  std::vector<LocalIndependenceStatement> out;
  const VertexSet v = g.vertices();
  v.for_each([&](std::size_t k) {
    const VertexSet kset = VertexSet::single(k);
    const VertexSet rest = v - closure(g, kset);
    if (rest.empty()) return;
    out.push_back(make_statement(rest, kset, parents(g, kset), Provenance::local));
  });
  sort_statements(out);
  return out;
}

bool implied(const DynamicGraph& g, const Query& q) { return delta_separated_moral(g, q); }

std::optional<LocalIndependenceStatement> global_statement(const DynamicGraph& g, const Query& q) {
  if (!implied(g, q)) return std::nullopt;
  const Query nq = normalized(q);
  return make_statement(nq.a, nq.b, nq.c, Provenance::global);
}

bool right_decomposition_applicable(const DynamicGraph& g, VertexSet a, VertexSet b, VertexSet c, VertexSet d) {
  for (auto [s, name] : {std::pair{a, "a"}, std::pair{b, "b"}, std::pair{c, "c"}, std::pair{d, "d"}}) {
    g.require_subset(s, std::string("right_decomposition_applicable(): ") + name);
  }
  if (!d.subset_of(b)) throw std::domain_error("right_decomposition_applicable(): d must be a subset of b");
  if (!((b & a) - (c | d)).empty()) {
    throw std::domain_error("right_decomposition_applicable(): (b n a) \\ (c u d) must be empty");
  }
  if (!implied(g, {b, a - (c | d), c | d})) return false;
  bool ok = true;
  (c - d).for_each([&](std::size_t k) {
    if (!ok) return;
    const VertexSet kset = VertexSet::single(k);
    ok = implied(g, {a, kset, c | b}) || implied(g, {b, kset, c | d | a});
  });
  return ok;
}

}  // namespace ligraph
