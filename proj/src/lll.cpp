#include "nsd/lll.hpp"

#include <algorithm>
#include <stdexcept>

namespace nsd {

PairAssignment sample_uniform_pairs(const Graph& g, const std::vector<int>& ranges,
                                    uint64_t seed) {
    int n = g.vertex_count();
    if (static_cast<int>(ranges.size()) != n)
        throw std::invalid_argument("ranges size mismatch");
    PairAssignment pa;
    pa.range = ranges;
    pa.c1.resize(n);
    pa.c2.resize(n);
    Rng rng(seed);
    for (int v = 0; v < n; ++v) {
        if (ranges[v] < 1) throw std::invalid_argument("range < 1 at vertex " + std::to_string(v));
        pa.c1[v] = static_cast<int>(rng.below(ranges[v]));
        pa.c2[v] = static_cast<int>(rng.below(ranges[v]));
    }
    return pa;
}

CrowdingCheck check_crowding(const Graph& g, const std::vector<char>& close_mask,
                             const PairAssignment& pa, int v, int t) {
    int count = same_pair_neighbours(g, close_mask, pa, v);
    return {count >= 2 * t - 1, count};
}

bool imbalance_from_degrees(long long d, long long close_deg, long long side1,
                            long long side2, Ratio q) {
    // close_deg > (1-2q) d - 2   and   min side < q close_deg + 1
    bool busy = q.den * close_deg > (q.den - 2 * q.num) * d - 2 * q.den;
    if (!busy) return false;
    long long lo = std::min(side1, side2);
    return q.den * lo < q.num * close_deg + q.den;
}

ImbalanceCheck check_imbalance(const Graph& g, const std::vector<char>& close_mask,
                               const PairAssignment& pa, int v, Ratio q) {
    ImbalanceCheck out{false, 0, 0, 0};
    for (const auto& [u, e] : g.neighbours(v)) {
        if (!close_mask[e]) continue;
        ++out.close_degree;
        bool eq1 = pa.c1[u] == pa.c1[v], eq2 = pa.c2[u] == pa.c2[v];
        if (eq1 && eq2) continue; // same-pair edges count for neither side here
        if (eq1) ++out.distinct_degree_side2;                       // rule 1
        else if (eq2) ++out.distinct_degree_side1;                  // rule 2
        else if ((pa.c1[u] + pa.c2[u] + pa.c1[v] + pa.c2[v]) % 2 == 1)
            ++out.distinct_degree_side1;                            // rule 3
        else ++out.distinct_degree_side2;                           // rule 4
    }
    out.violated = imbalance_from_degrees(g.degree(v), out.close_degree,
                                          out.distinct_degree_side1,
                                          out.distinct_degree_side2, q);
    return out;
}

EventScan scan_events(const Graph& g, const std::vector<char>& close_mask,
                      const PairAssignment& pa, Ratio q, int t) {
    EventScan scan;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (check_crowding(g, close_mask, pa, v, t).violated) scan.crowding.push_back(v);
        if (check_imbalance(g, close_mask, pa, v, q).violated) scan.imbalance.push_back(v);
    }
    return scan;
}

bool resample_step(const Graph& g, const std::vector<char>& close_mask, PairAssignment& pa,
                   Ratio q, int t, Rng& rng, int& event_vertex, char& event_kind, bool& stuck) {
    stuck = false;
    int v = -1;
    char kind = 0;
    for (int w = 0; w < g.vertex_count() && v == -1; ++w) {
        if (check_crowding(g, close_mask, pa, w, t).violated) {
            v = w;
            kind = 'A';
        } else if (check_imbalance(g, close_mask, pa, w, q).violated) {
            v = w;
            kind = 'B';
        }
    }
    if (v == -1) return false;

    event_vertex = v;
    event_kind = kind;

    // scope: v plus its close neighbours, ascending
    std::vector<int> scope{v};
    for (const auto& [u, e] : g.neighbours(v))
        if (close_mask[e]) scope.push_back(u);
    std::sort(scope.begin(), scope.end());
    scope.erase(std::unique(scope.begin(), scope.end()), scope.end());

    bool any_random = false;
    for (int u : scope)
        if (pa.range[u] > 1) any_random = true;
    if (!any_random) {
        // the event depends only on frozen coordinates; it can never be repaired
        stuck = true;
        return true;
    }

    for (int u : scope) {
        pa.c1[u] = static_cast<int>(rng.below(pa.range[u]));
        pa.c2[u] = static_cast<int>(rng.below(pa.range[u]));
    }
    return true;
}

ResampleResult resample_until_good(const Graph& g, const std::vector<int>& close_edges,
                                   const std::vector<int>& ranges, Ratio q, int t,
                                   uint64_t seed, long max_rounds) {
    if (max_rounds < 1) throw std::invalid_argument("max_rounds must be >= 1");
    std::vector<char> close_mask(g.edge_count(), 0);
    for (int e : close_edges) close_mask[e] = 1;

    Rng rng(seed);
    PairAssignment pa = sample_uniform_pairs(g, ranges, rng.next_u64());

    ResampleResult out;
    PairAssignment best = pa;
    size_t best_violations = SIZE_MAX;

    for (long round = 0; round <= max_rounds; ++round) {
        EventScan scan = scan_events(g, close_mask, pa, q, t);
        size_t total = scan.crowding.size() + scan.imbalance.size();
        if (total < best_violations) {
            best_violations = total;
            best = pa;
        }
        if (total == 0) {
            out.assignment = pa;
            out.report.iterations = round;
            return out;
        }
        if (round == max_rounds) break;

        int v = -1;
        char kind = 0;
        bool stuck = false;
        resample_step(g, close_mask, pa, q, t, rng, v, kind, stuck);
        out.report.resample_log.push_back({round, kind, v});
        out.report.iterations = round + 1;
        if (stuck) {
            out.report.stuck = true;
            break;
        }
    }

    // failure: return the best assignment with a fresh scan of it
    out.assignment = best;
    EventScan scan = scan_events(g, close_mask, out.assignment, q, t);
    out.report.violated_crowding = scan.crowding;
    out.report.violated_imbalance = scan.imbalance;
    return out;
}

} // namespace nsd
