#pragma once

#include <vector>

#include "nsd/graph.hpp"

namespace nsd {

struct BalancedSplit {
    EdgeBipartition bipartition;
    std::vector<int> exceptional; // sorted vertex ids, at most one per component
};

// Splits the edges of g into two sides so that every vertex keeps at least
// floor(d(v)/2) incident edges on each side. Per connected component: if odd
// degrees exist, an auxiliary vertex is joined to all of them; otherwise the
// walk starts at the lowest-id minimum-degree vertex. An Eulerian tour is then
// traversed and edges assigned to alternating sides; auxiliary edges count for
// the alternation and are dropped afterwards.
//
// Only in an all-even component with an odd edge count does the start vertex
// end up imbalanced, with side-one degree ceil((d+1)/2) and side-two degree
// floor((d-1)/2); such vertices are reported in `exceptional`.
//
// Deterministic: incidence lists are walked in (neighbour, edge id) order.
BalancedSplit balanced_split(const Graph& g);

// Same procedure restricted to a subset of edge ids. Sides are written into
// side_out (indexed by edge id) for exactly the ids in edge_ids; other entries
// are untouched. Returns the exceptional vertices.
std::vector<int> split_edges_balanced(const Graph& g, const std::vector<int>& edge_ids,
                                      std::vector<Side>& side_out);

} // namespace nsd
