#pragma once

#include <string>

#include "ligraph/graph.hpp"

namespace ligraph {

struct DotOptions {
  std::string name = "G";
  // Drawn with a bold outline, e.g. the set whose out-edges were deleted.
  VertexSet highlighted;
};

// Mutual edges j <-> k become one edge with dir=both; absorbing marks get a
// double outline. An edgeless graph yields node statements only.
std::string export_dot(const DynamicGraph& g, const DotOptions& options = {});
// Marriage edges carry style=dotted.
std::string export_dot(const UndirectedGraph& ug, const DotOptions& options = {});

}  // namespace ligraph
