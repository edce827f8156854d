#pragma once

#include <vector>

#include "tww/graph.hpp"

namespace tww {

/// Orientation with at most one out-arc per vertex; each weak component has
/// exactly one directed cycle or exactly one sink.
struct FunctionalOrientation {
    int n = 0;
    std::vector<int> out;  // out[v] = head of v's arc, or -1

    std::vector<Edge> underlying_edges() const;  // deduplicated, u < v
    Graph underlying_graph() const;
};

/// Splits g into a spanning subgraphs, each orientable with max outdegree 1,
/// covering every edge of g at least b times. Requires a >= b >= 1 and
/// a/b >= mad(g)/2; the matching this builds cannot fail under that
/// precondition.
std::vector<FunctionalOrientation> decompose(const Graph& g, int a, int b);

}  // namespace tww
