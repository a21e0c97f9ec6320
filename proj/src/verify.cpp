#include "nsd/verify.hpp"

#include <algorithm>
#include <stdexcept>

namespace nsd {

NsdCheck verify_nsd(const Graph& g, const std::vector<int>& w) {
    if (static_cast<int>(w.size()) != g.edge_count())
        throw std::invalid_argument("weight vector size mismatch: " + std::to_string(w.size()) +
                                    " weights for " + std::to_string(g.edge_count()) + " edges");
    for (int e = 0; e < g.edge_count(); ++e)
        if (w[e] < 1)
            throw std::invalid_argument("edge " + std::to_string(e) + " has weight < 1");

    std::vector<long long> sum(g.vertex_count(), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        sum[g.edge(e).u] += w[e];
        sum[g.edge(e).v] += w[e];
    }
    NsdCheck out{true, {}};
    for (int e = 0; e < g.edge_count(); ++e) {
        if (sum[g.edge(e).u] == sum[g.edge(e).v]) {
            out.ok = false;
            out.conflicts.push_back(e);
        }
    }
    return out;
}

CertificateCheck verify_certificate(const Graph& g, const Certificate& cert) {
    int n = g.vertex_count(), m = g.edge_count();

    if (cert.bipartition.size() != m || static_cast<int>(cert.weight.size()) != m ||
        static_cast<int>(cert.sums[0].size()) != n || static_cast<int>(cert.sums[1].size()) != n)
        return {false, CertStage::structure, "certificate sizes do not match the graph"};

    for (int e = 0; e < m; ++e)
        if (cert.bipartition.side[e] != Side::one && cert.bipartition.side[e] != Side::two)
            return {false, CertStage::bipartition,
                    "edge " + std::to_string(e) + " assigned to no side"};

    for (int e = 0; e < m; ++e)
        if (cert.weight[e] != 1 && cert.weight[e] != 2)
            return {false, CertStage::weights,
                    "edge " + std::to_string(e) + " carries weight " +
                        std::to_string(static_cast<int>(cert.weight[e]))};

    long long recomputed[2];
    for (int v = 0; v < n; ++v) {
        recomputed[0] = recomputed[1] = 0;
        for (const auto& [u, e] : g.neighbours(v))
            recomputed[side_index(cert.bipartition.side[e])] += cert.weight[e];
        for (int i = 0; i < 2; ++i)
            if (recomputed[i] != cert.sums[i][v])
                return {false, CertStage::sums,
                        "vertex " + std::to_string(v) + " side " + std::to_string(i + 1) +
                            ": stored " + std::to_string(cert.sums[i][v]) + ", recomputed " +
                            std::to_string(recomputed[i])};
    }

    for (int e = 0; e < m; ++e) {
        int i = side_index(cert.bipartition.side[e]);
        const Edge& ed = g.edge(e);
        if (cert.sums[i][ed.u] == cert.sums[i][ed.v])
            return {false, CertStage::nsd,
                    "edge " + std::to_string(e) + " on side " + std::to_string(i + 1) +
                        ": endpoints share weighted degree " +
                        std::to_string(cert.sums[i][ed.u])};
    }
    return {true, CertStage::ok, ""};
}

namespace {

// odometer over {1..k}^m, position m-1 fastest; maintains vertex sums
struct WeightEnumerator {
    const Graph& g;
    int k;
    std::vector<int> w;
    std::vector<long long> sum;

    WeightEnumerator(const Graph& g_, int k_)
        : g(g_), k(k_), w(g_.edge_count(), 1), sum(g_.vertex_count(), 0) {
        for (int e = 0; e < g.edge_count(); ++e) {
            sum[g.edge(e).u] += 1;
            sum[g.edge(e).v] += 1;
        }
    }

    bool distinguishing() const {
        for (int e = 0; e < g.edge_count(); ++e)
            if (sum[g.edge(e).u] == sum[g.edge(e).v]) return false;
        return true;
    }

    void bump(int e, int delta) {
        w[e] += delta;
        sum[g.edge(e).u] += delta;
        sum[g.edge(e).v] += delta;
    }

    bool next() {
        for (int e = g.edge_count() - 1; e >= 0; --e) {
            if (w[e] < k) {
                bump(e, 1);
                return true;
            }
            bump(e, 1 - w[e]);
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<int>> brute_force_nsd(const Graph& g, int k, long long search_limit) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    long long space = 1;
    for (int e = 0; e < g.edge_count(); ++e) {
        space *= k;
        if (space > search_limit)
            throw std::invalid_argument("instance too large: k^m exceeds the search limit");
    }

    WeightEnumerator en(g, k);
    do {
        if (en.distinguishing()) return en.w;
    } while (en.next());
    return std::nullopt;
}

std::optional<DecompositionWitness> brute_force_22(const Graph& g, int max_edges) {
    int m = g.edge_count();
    if (m > max_edges)
        throw std::invalid_argument("instance too large: " + std::to_string(m) + " edges, limit " +
                                    std::to_string(max_edges));

    for (uint64_t mask = 0; mask < (1ull << m); ++mask) {
        // edge 0 owns the most significant bit; bit clear = side one
        std::vector<Side> side(m);
        std::array<std::vector<std::pair<int, int>>, 2> pairs;
        std::array<std::vector<int>, 2> ids;
        for (int e = 0; e < m; ++e) {
            int i = (mask >> (m - 1 - e)) & 1;
            side[e] = i == 0 ? Side::one : Side::two;
            pairs[i].push_back({g.edge(e).u, g.edge(e).v});
            ids[i].push_back(e);
        }

        std::array<std::optional<std::vector<int>>, 2> found;
        bool ok = true;
        for (int i = 0; i < 2 && ok; ++i) {
            Graph side_graph = Graph::from_edges(g.vertex_count(), pairs[i]);
            found[i] = brute_force_nsd(side_graph, 2);
            ok = found[i].has_value();
        }
        if (!ok) continue;

        DecompositionWitness out;
        out.side = side;
        out.w.assign(m, 1);
        for (int i = 0; i < 2; ++i)
            for (size_t j = 0; j < ids[i].size(); ++j) out.w[ids[i][j]] = (*found[i])[j];
        return out;
    }
    return std::nullopt;
}

} // namespace nsd
