#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "nsd/dcs.hpp"
#include "nsd/decompose.hpp"
#include "nsd/graph.hpp"
#include "nsd/lll.hpp"
#include "nsd/rational.hpp"

namespace nsd {

// Admissible weighted-degree residues for one vertex and side, modulo
// 4t*range: { 4t*c + 2*(log2(range) mod 2) + 4k : 0 <= k < t }, where c is the
// side's colour coordinate. t even elements, all below the modulus.
std::vector<long long> residue_list(int colour, int range, int t);

// Both sides' lists for a vertex. Requires range[v] to be a power of two.
std::array<std::vector<long long>, 2> build_lists(int v, const PairAssignment& pa, int t);

// Chosen residue targets per side.
struct SideTargets {
    std::array<std::vector<long long>, 2> chosen;  // a'_i(v), an element of the list
    std::array<std::vector<long long>, 2> shifted; // a_i(v) = a'_i(v) - d_{G_i}(v)
    std::vector<long long> modulus;                // 4t * range(v)
};

// Fixes every special vertex to its minimum list element first, then walks the
// remaining vertices in ascending id, giving each the smallest list element not
// taken by a neighbour inside its same-class subgraph on that side. Feasible
// whenever the conflict bound is at most t; throws std::logic_error otherwise
// (that signals a broken upstream sampling run, not bad user input).
SideTargets assign_targets(const Graph& g, const EdgeBipartition& bipartition,
                           const PartitionOutcome& outcome, const PairAssignment& pa, int t);

struct Verdict {
    bool valid = false;
    int side = 0;  // 1-based, 0 when not side-specific
    int edge = -1; // conflicting edge for weighting failures
    std::string reason;
};

// Full output of a decomposition run: the bipartition over every edge, the
// {1,2} weights, per-side weighted degrees, and the degree-constrained witness
// behind the weight-2 edges.
struct Certificate {
    EdgeBipartition bipartition;
    std::vector<uint8_t> weight;                 // per edge, 1 or 2
    std::array<std::vector<long long>, 2> sums;  // s_i(v) per side
    std::array<std::vector<int>, 2> dcs_witness; // weight-2 edges per side
    bool balance_ok = true;                      // d_{G_i}(v) >= q d(v) everywhere
    std::vector<int> balance_violations;
    Verdict verdict;
};

// Runs the degree-constrained solver on each side with the shifted targets,
// weights the witness edges 2 and the rest 1, and fills in sums and verdict.
// Vertices isolated on a side get a relaxed residue target (their side degree
// is forced to zero and no distinguishing constraint applies there).
Certificate build_weighting(const Graph& g, const EdgeBipartition& bipartition,
                            const SideTargets& targets, const DcsOptions& opts);

struct ShortcutResult {
    std::vector<int> colour; // greedy proper colouring
    int colours_used = 0;
    Certificate cert;        // single weighting: everything on side one
};

// Greedy-colouring route for graphs whose chromatic number is far below the
// minimum degree: a'(v) = 2*colour(v), modulus 2*chi everywhere, one
// degree-constrained subgraph, weight 2 on it. Requires 12*chi <= min degree.
ShortcutResult chromatic_shortcut(const Graph& g, const DcsOptions& opts);

struct PipelineParams {
    Ratio q{9, 20};
    int t = 18;
    uint64_t seed = 1;
    long max_rounds = -1; // -1: use 100 * n
    DcsOptions dcs;
};

struct PipelineResult {
    Certificate cert;
    FarSplit far;
    std::vector<int> ranges;
    PairAssignment assignment;
    EventReport lll_report;
    PartitionOutcome outcome; // empty when the sampling stage failed
    std::vector<std::string> warnings;
};

// The whole construction: far/close split, balanced split of the far part,
// pair ranges, resampling until no bad event, partition rules, greedy residue
// targets, per-side degree-constrained weighting. Parameter errors surface as
// StageError; solver failures and unremoved bad events yield a certificate
// with an invalid verdict instead (kept for post-mortem).
PipelineResult full_pipeline(const Graph& g, const PipelineParams& params);

// Same, but with a caller-provided pair assignment instead of sampling.
PipelineResult full_pipeline_with_assignment(const Graph& g, const PairAssignment& pa,
                                             const PipelineParams& params);

} // namespace nsd
