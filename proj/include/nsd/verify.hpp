#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nsd/graph.hpp"
#include "nsd/weighting.hpp"

namespace nsd {

struct NsdCheck {
    bool ok;
    std::vector<int> conflicts; // edges whose endpoints share a weighted degree
};

// Neighbour-sum-distinguishing check: weighted degrees of adjacent vertices
// must differ. w must assign a positive weight to every edge.
NsdCheck verify_nsd(const Graph& g, const std::vector<int>& w);

enum class CertStage {
    structure,   // sizes and value ranges
    bipartition, // sides cover every edge
    weights,     // weights total and in {1, 2}
    sums,        // recomputed sums match
    nsd,         // per-side distinguishing
    ok,
};

struct CertificateCheck {
    bool ok;
    CertStage failed = CertStage::ok;
    std::string detail;
};

// Independent recheck of a certificate: structural consistency, weight range,
// recomputed weighted degrees, then per-side distinguishing.
CertificateCheck verify_certificate(const Graph& g, const Certificate& cert);

// Exhaustive search over {1..k}^E in lexicographic order (edge 0 most
// significant, all-ones first). Returns the first distinguishing weighting, or
// nullopt as a proof that none exists. Throws when k^m exceeds search_limit.
std::optional<std::vector<int>> brute_force_nsd(const Graph& g, int k,
                                                long long search_limit = 100'000'000);

struct DecompositionWitness {
    std::vector<Side> side; // per edge
    std::vector<int> w;     // per edge, 1 or 2
};

// Exhaustive search over all 2^m bipartitions (edge 0 most significant, all on
// side one first); each side must admit a {1,2} distinguishing weighting found
// by brute_force_nsd. Returns the first full witness or nullopt.
std::optional<DecompositionWitness> brute_force_22(const Graph& g, int max_edges = 20);

} // namespace nsd
