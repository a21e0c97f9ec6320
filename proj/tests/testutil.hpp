#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "nsd/graph.hpp"
#include "nsd/rng.hpp"
#include "nsd/weighting.hpp"

namespace testutil {

// Structural checks every valid pipeline certificate must satisfy; returns an
// empty string or the first failure description.
inline std::string pipeline_invariant_failure(const nsd::Graph& g,
                                              const nsd::PipelineResult& pr, int t) {
    using namespace nsd;
    const Certificate& cert = pr.cert;
    if (!cert.verdict.valid) return "verdict not valid";

    std::vector<char> witness(g.edge_count(), 0);
    for (int i = 0; i < 2; ++i)
        for (int e : cert.dcs_witness[i]) witness[e] = 1;

    for (int e = 0; e < g.edge_count(); ++e) {
        int want = witness[e] ? 2 : 1;
        if (cert.weight[e] != want) return "weight disagrees with the witness at edge " +
                                           std::to_string(e);
    }

    for (int v = 0; v < g.vertex_count(); ++v) {
        for (int i = 0; i < 2; ++i) {
            Side s = i == 0 ? Side::one : Side::two;
            long long side_deg = degree_on_side(g, cert.bipartition, v, s);
            long long wit_deg = cert.sums[i][v] - side_deg;
            if (side_deg == 0) {
                if (cert.sums[i][v] != 0) return "isolated-on-side vertex with nonzero sum";
                continue;
            }
            if (3 * wit_deg < side_deg || 3 * wit_deg > 2 * side_deg)
                return "witness degree outside [d/3, 2d/3] at vertex " + std::to_string(v);
        }
    }

    // close edges: residue separation within equal ranges, parity separation
    // across a range doubling
    std::vector<char> close(g.edge_count(), 0);
    for (int e : pr.far.close_edges) close[e] = 1;
    const PairAssignment& pa = pr.assignment;
    auto log2i = [](int x) {
        int b = 0;
        while ((1 << b) < x) ++b;
        return b;
    };
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!close[e]) continue;
        int i = side_index(cert.bipartition.side[e]);
        int u = g.edge(e).u, v = g.edge(e).v;
        if (pa.range[u] < pa.range[v]) std::swap(u, v);
        long long su = cert.sums[i][u], sv = cert.sums[i][v];
        if (pa.range[u] == pa.range[v]) {
            long long modulus = 4LL * t * pa.range[v];
            if (((su - sv) % modulus + modulus) % modulus == 0)
                return "equal weighted-degree residues across close edge " + std::to_string(e);
        } else {
            // range(u) = 2 range(v): residues mod 4 live in complementary pairs
            int base = (2 * log2i(pa.range[v])) % 4;
            long long ru = ((su % 4) + 4) % 4, rv = ((sv % 4) + 4) % 4;
            if (rv != base && rv != (base + 1) % 4)
                return "small-range endpoint outside its parity pair at edge " +
                       std::to_string(e);
            if (ru != (base + 2) % 4 && ru != (base + 3) % 4)
                return "large-range endpoint outside the complementary parity pair at edge " +
                       std::to_string(e);
        }
    }
    return "";
}

// Adjacency-driven weighted degrees, independent of the library's edge-driven
// accumulation; used to cross-check verify_nsd.
inline std::vector<long long> sums_via_adjacency(const nsd::Graph& g,
                                                 const std::vector<int>& w) {
    std::vector<long long> out(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v)
        for (const auto& [u, e] : g.neighbours(v)) out[v] += w[e];
    return out;
}

inline nsd::Graph path(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int v = 0; v + 1 < n; ++v) pairs.push_back({v, v + 1});
    return nsd::Graph::from_edges(n, pairs);
}

inline nsd::Graph cycle(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int v = 0; v + 1 < n; ++v) pairs.push_back({v, v + 1});
    pairs.push_back({0, n - 1});
    return nsd::Graph::from_edges(n, pairs);
}

inline nsd::Graph star(int leaves) {
    std::vector<std::pair<int, int>> pairs;
    for (int v = 1; v <= leaves; ++v) pairs.push_back({0, v});
    return nsd::Graph::from_edges(leaves + 1, pairs);
}

inline nsd::Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) pairs.push_back({i, a + j});
    return nsd::Graph::from_edges(a + b, pairs);
}

// Two degree tiers far apart: a complete bipartite core plus a sparse regular
// graph inside the high-degree part. Every cross edge is far-degree; only the
// inner edges are close, so bad events stay rare and the whole pipeline can
// succeed at desk scale.
inline nsd::Graph two_tier(int a, int b, int inner_degree, uint64_t seed) {
    nsd::Graph inner = nsd::generate_circulant(a, inner_degree, seed);
    std::vector<std::pair<int, int>> pairs;
    for (const nsd::Edge& e : inner.edges()) pairs.push_back({e.u, e.v});
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) pairs.push_back({i, a + j});
    return nsd::Graph::from_edges(a + b, pairs);
}

// Three degree tiers at q = 9/20, t = 1: 24 vertices of degree 216 (pair
// range 4), 48 of degree 213 (range 2), 210 of degree 72 (range 1). The only
// close edges run between the two high tiers, so every close edge joins ranges
// 4 and 2 — the range-doubling and identical-pair/different-range cases.
// Close degrees (6 and 3) stay under the busy threshold, so no bad events.
inline nsd::Graph mixed_range_fixture() {
    const int a = 24, ap = 48, b = 210;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < 6; ++j) pairs.push_back({i, a + (6 * i + j) % ap});
    for (int i = 0; i < a + ap; ++i)
        for (int j = 0; j < b; ++j) pairs.push_back({i, a + ap + j});
    return nsd::Graph::from_edges(a + ap + b, pairs);
}

// Dense graph with all degrees >= floor: K_n with random edges removed while
// the degree floor survives.
inline nsd::Graph dense_with_min_degree(int n, int floor, int removals, uint64_t seed) {
    nsd::Rng rng(seed);
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
    std::vector<int> deg(n, n - 1);
    for (int tries = 0; tries < removals * 4 && removals > 0; ++tries) {
        size_t idx = rng.below(pairs.size());
        auto [u, v] = pairs[idx];
        if (deg[u] <= floor || deg[v] <= floor) continue;
        --deg[u];
        --deg[v];
        pairs.erase(pairs.begin() + static_cast<long>(idx));
        --removals;
    }
    return nsd::Graph::from_edges(n, pairs);
}

} // namespace testutil
