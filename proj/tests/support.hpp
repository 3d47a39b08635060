#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ligraph/graph.hpp"

namespace ligraph::testkit {

inline std::vector<std::string> letters(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
  return out;
}

// Ordered pairs (j, k), j != k, in a fixed order; bit i of a graph code
// selects pair i.
inline std::vector<Edge> ordered_pairs(std::size_t n) {
  std::vector<Edge> out;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      if (j != k) out.emplace_back(j, k);
    }
  }
  return out;
}

inline DynamicGraph graph_from_code(std::size_t n, std::uint64_t code) {
  const auto pairs = ordered_pairs(n);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if ((code >> i) & 1U) edges.push_back(pairs[i]);
  }
  return DynamicGraph(letters(n), edges);
}

inline DynamicGraph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (const auto& e : ordered_pairs(n)) {
    if (coin(rng)) edges.push_back(e);
  }
  return DynamicGraph(letters(n), edges);
}

// Each vertex lands in A, B, C or none of them.
struct Assignment {
  VertexSet a, b, c;
};

inline std::vector<Assignment> disjoint_assignments(std::size_t n) {
  std::vector<Assignment> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 4;
  for (std::size_t code = 0; code < total; ++code) {
    Assignment s;
    std::size_t x = code;
    for (std::size_t v = 0; v < n; ++v, x /= 4) {
      if (x % 4 == 1) s.a = s.a.with(v);
      if (x % 4 == 2) s.b = s.b.with(v);
      if (x % 4 == 3) s.c = s.c.with(v);
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace ligraph::testkit
