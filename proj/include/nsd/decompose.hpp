#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nsd/graph.hpp"
#include "nsd/rational.hpp"

namespace nsd {

// Per-vertex colour pair (c1, c2), each uniform on [0, range). `range` is the
// per-vertex sample-space width; the random pipeline always uses powers of
// two, the grid construction uses the grid width.
struct PairAssignment {
    std::vector<int> c1;
    std::vector<int> c2;
    std::vector<int> range;

    // ranges >= 1 and coordinates within range; throws std::invalid_argument
    void validate(const Graph& g) const;
};

// Text format: n lines "v c1 c2 range", one per vertex.
std::string serialize_pair_assignment(const PairAssignment& pa);
PairAssignment load_pair_assignment(const std::string& text, const Graph& g);

struct FarSplit {
    std::vector<int> far_edges;   // endpoint degrees more than a factor 2 apart
    std::vector<int> close_edges; // the rest
};

// An edge uv is far when max(d(u), d(v)) > 2 * min(d(u), d(v)); such pairs can
// never collide on weighted degree and are handled by a plain balanced split.
FarSplit split_far_edges(const Graph& g);

// Largest power of two <= q*d / (24t). Throws std::invalid_argument when that
// quantity is below 1 (degree too small for the chosen parameters).
int pair_range_for_degree(long long d, Ratio q, int t);

// pair_range_for_degree over all vertices; error messages name the vertex.
std::vector<int> compute_pair_ranges(const Graph& g, Ratio q, int t);

struct SameClassComponent {
    int c1, c2, range;
    std::vector<int> vertices;
};

// Everything the partition rules produce over the close-edge set.
struct PartitionOutcome {
    std::vector<int> h1, h2;          // close edges per side, ascending ids
    std::vector<Side> side;           // indexed by edge id, meaningful on close edges
    std::vector<Placement> placed_by; // indexed by edge id, meaningful on close edges
    std::vector<int> same_pair_edges; // endpoints carry identical pairs (any range)
    std::vector<int> special;         // exceptional vertices of the rule-5 splits
    int conflict_bound = 1;           // least T with every |A(v)| <= 2T-2
    std::vector<SameClassComponent> same_class_components;
};

// Classifies every close edge exactly once:
//   equal c1, differing c2            -> side two   (rule 1)
//   equal c2, differing c1            -> side one   (rule 2)
//   both differ, odd coordinate sum   -> side one   (rule 3)
//   both differ, even coordinate sum  -> side two   (rule 4)
//   identical pair, equal range       -> balanced Euler split of the class (rule 5)
//   identical pair, different range   -> side two   (rule 6)
PartitionOutcome apply_rules(const Graph& g, const std::vector<int>& close_edges,
                             const PairAssignment& pa);

// Number of same-pair same-range neighbours of v among close edges.
int same_pair_neighbours(const Graph& g, const std::vector<char>& close_mask,
                         const PairAssignment& pa, int v);

// K_{n^2} with vertex (i, j) encoded as i*n + j, pair (i, j), range n.
// Feeding the result through apply_rules puts all j = l edges and all odd-sum
// edges with i != k on side one; both sides then have minimum degree at least
// floor((n^2-1)/2) and are properly colourable by the first (respectively
// second) coordinate. Requires n >= 2 even.
std::pair<Graph, PairAssignment> complete_grid_assignment(int n);

} // namespace nsd
