#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace nsd {

// Endpoints are stored normalized, u < v.
struct Edge {
    int u;
    int v;
};

inline bool operator==(const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }

// Immutable simple undirected graph. Vertices are 0..n-1; edges carry stable
// ids 0..m-1 in construction order. Adjacency lists hold (neighbour, edge id).
// Safe to share across threads once built.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    // Validates simplicity: throws std::invalid_argument on self-loops,
    // duplicates or out-of-range endpoints.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& pairs);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(int e) const { return edges_[e]; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::pair<int, int>>& neighbours(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int min_degree() const;
    bool has_edge(int u, int v) const;

    // The endpoint of edge e that is not v.
    int other_end(int e, int v) const { return edges_[e].u == v ? edges_[e].v : edges_[e].u; }

    // Component index per vertex, numbered in order of first (lowest-id) vertex.
    std::vector<int> component_ids() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
};

// --- edge-list text format -------------------------------------------------
//
//   n m
//   u v      (m lines, 0-indexed endpoints)
//
// The serializer is canonical: u < v, edges in id order, no trailing junk.

Graph load_edge_list(const std::string& text);
std::string serialize_edge_list(const Graph& g);

// --- generators -------------------------------------------------------------
// All are pure functions of (parameters, seed); edge ids are assigned in
// lexicographic endpoint order so repeated calls are bit-identical.

Graph generate_complete(int k);
Graph generate_gnp(int n, double p, uint64_t seed);

// Pairing-model sampling with whole-round rejection of loops and duplicates.
// Practical for small d only; throws after a bounded number of failed rounds.
Graph generate_regular(int n, int d, uint64_t seed);

// d-regular circulant with seed-chosen offsets; covers the large-d regimes the
// pairing model cannot reach. Requires d even and d/2 distinct offsets to exist.
Graph generate_circulant(int n, int d, uint64_t seed);

// --- decompositions ----------------------------------------------------------

enum class Side : uint8_t { one = 1, two = 2 };

inline int side_index(Side s) { return s == Side::one ? 0 : 1; }

// Which rule placed an edge on its side of a bipartition.
enum class Placement : uint8_t {
    none = 0,
    rule1,      // first coordinates equal, second differ
    rule2,      // second coordinates equal, first differ
    rule3,      // both differ, odd coordinate sum
    rule4,      // both differ, even coordinate sum
    rule5,      // same pair and range: balanced Euler split of the class
    rule6,      // same pair, different range
    far_split,  // far-degree edge, placed by the Euler split of the far part
    euler,      // standalone balanced Euler split
};

const char* placement_tag(Placement p);
Placement placement_from_tag(const std::string& tag);

// Total assignment of every edge of a graph to one of two sides.
struct EdgeBipartition {
    std::vector<Side> side;           // indexed by edge id
    std::vector<Placement> placed_by; // indexed by edge id

    EdgeBipartition() = default;
    explicit EdgeBipartition(int m)
        : side(m, Side::one), placed_by(m, Placement::none) {}

    int size() const { return static_cast<int>(side.size()); }
};

// Degree of v among edges assigned to side s.
int degree_on_side(const Graph& g, const EdgeBipartition& b, int v, Side s);

} // namespace nsd
