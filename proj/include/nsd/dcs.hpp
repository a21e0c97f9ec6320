#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nsd/graph.hpp"

namespace nsd {

// Per-vertex residue target: the chosen subgraph must have degree congruent to
// a(v) or a(v)+1 modulo lambda(v), on top of the [d/3, 2d/3] degree window.
// a may be any integer (negative included); it is reduced internally.
struct ModTarget {
    std::vector<long long> a;
    std::vector<long long> lambda; // each >= 2

    void validate(const Graph& g) const;
};

// Text format: edge-list block of the graph, then n lines "v a lambda".
std::string serialize_dcs_instance(const Graph& g, const ModTarget& t);
std::pair<Graph, ModTarget> load_dcs_instance(const std::string& text);

enum class DcsStatus {
    found,             // witness returned, already certified by verify_dcs
    proven_infeasible, // exact search exhausted the space
    budget_exhausted,  // neither found nor disproved within budget
};

struct DcsOptions {
    int exact_threshold = 30;               // run exact search when m <= this
    long long exact_node_budget = 50'000'000;
    long long local_steps = 1'000'000;      // local-search flip budget
    int local_restarts = 8;
    uint64_t seed = 1;
};

struct VertexViolation {
    int v;
    long long deg;      // degree in the candidate subgraph
    long long lo, hi;   // smallest/largest admissible degree (window)
    long long res1, res2; // admissible residues mod lambda
};

struct DcsResult {
    DcsStatus status = DcsStatus::budget_exhausted;
    std::vector<int> edges;                  // witness edge ids, ascending (found only)
    long long best_potential = -1;           // failure: lowest violation potential seen
    std::vector<VertexViolation> violations; // failure: per-vertex summary at best state
};

// Finds a spanning subgraph with every degree in [d(v)/3, 2d(v)/3] hitting
// a(v) or a(v)+1 mod lambda(v). Exact depth-first search with degree-window
// pruning when m <= exact_threshold (falls through to local search if its node
// budget runs out); otherwise randomized local search minimizing the sum of
// window excess and cyclic residue distance. Every returned witness has passed
// verify_dcs. All comparisons are exact integer arithmetic.
DcsResult find_dcs(const Graph& g, const ModTarget& targets, const DcsOptions& opts = {});

struct DcsCheck {
    bool ok;
    std::vector<VertexViolation> violations;
};

// Checks the degree window and the residue condition at every vertex.
// Throws std::invalid_argument on unknown or repeated edge ids.
DcsCheck verify_dcs(const Graph& g, const std::vector<int>& edges, const ModTarget& targets);

} // namespace nsd
