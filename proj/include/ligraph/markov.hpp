#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "ligraph/graph.hpp"
#include "ligraph/separation.hpp"

namespace ligraph {

enum class Provenance { pairwise, local, global };

std::string_view to_string(Provenance p);

// "A -/-> B | C": the intensities of B, given the past of A u B u C, depend
// only on the past of B u C. Stored with A \ C (A and C disjoint).
struct LocalIndependenceStatement {
  VertexSet a;
  VertexSet b;
  VertexSet c;
  Provenance provenance = Provenance::global;

  Query query() const { return {a, b, c}; }
  friend bool operator==(const LocalIndependenceStatement&, const LocalIndependenceStatement&) = default;
};

// One statement {j} -/-> {k} | V \ {j, k} per ordered non-edge (j, k).
std::vector<LocalIndependenceStatement> pairwise_statements(const DynamicGraph& g);

// One statement V \ cl(k) -/-> {k} | pa(k) per vertex k with V \ cl(k) nonempty.
std::vector<LocalIndependenceStatement> local_statements(const DynamicGraph& g);

// Whether the graph implies q's statement via delta-separation.
bool implied(const DynamicGraph& g, const Query& q);

// The normalized statement for q tagged `global`, when implied.
std::optional<LocalIndependenceStatement> global_statement(const DynamicGraph& g, const Query& q);

// Graphical side conditions under which A -/-> B | C may be weakened to
// A -/-> D | C for D a subset of B:
//   B -/-> A \ (C u D) | C u D, and
//   for every k in C \ D: A -/-> {k} | C u B  or  B -/-> {k} | C u D u A,
// each read as delta-separation. Requires d within b and (b n a) \ (c u d)
// empty; throws std::domain_error otherwise.
bool right_decomposition_applicable(const DynamicGraph& g, VertexSet a, VertexSet b, VertexSet c, VertexSet d);

}  // namespace ligraph
