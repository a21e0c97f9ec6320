#pragma once

#include <cstdint>
#include <vector>

#include "nsd/decompose.hpp"
#include "nsd/graph.hpp"
#include "nsd/rational.hpp"
#include "nsd/rng.hpp"

namespace nsd {

// Two kinds of bad event per vertex:
//   crowding  — at least 2t-1 close neighbours share v's pair and range
//   imbalance — d_H(v) > (1-2q) d(v) - 2 while some pair-distinct side degree
//               stays below q d_H(v) + 1
struct EventReport {
    std::vector<int> violated_crowding;  // vertices with the crowding event
    std::vector<int> violated_imbalance; // vertices with the imbalance event
    long iterations = 0;                 // resampling rounds performed
    struct LogEntry {
        long iteration;
        char kind; // 'A' crowding, 'B' imbalance
        int vertex;
    };
    std::vector<LogEntry> resample_log;
    bool stuck = false; // the selected event's scope had no randomness left

    bool success() const { return violated_crowding.empty() && violated_imbalance.empty(); }
};

// Independent uniform pair per vertex, both coordinates below ranges[v].
// Coordinates are drawn in vertex order, c1 before c2.
PairAssignment sample_uniform_pairs(const Graph& g, const std::vector<int>& ranges,
                                    uint64_t seed);

struct CrowdingCheck {
    bool violated;
    int count; // |A(v)|
};
CrowdingCheck check_crowding(const Graph& g, const std::vector<char>& close_mask,
                             const PairAssignment& pa, int v, int t);

struct ImbalanceCheck {
    bool violated;
    int close_degree;            // d_H(v)
    int distinct_degree_side1;   // close neighbours routed to side one by rules 2, 3
    int distinct_degree_side2;   // close neighbours routed to side two by rules 1, 4
};
ImbalanceCheck check_imbalance(const Graph& g, const std::vector<char>& close_mask,
                               const PairAssignment& pa, int v, Ratio q);

// The arithmetic of the imbalance event, exact in integers.
bool imbalance_from_degrees(long long d, long long close_deg, long long side1,
                            long long side2, Ratio q);

// Violated vertices of both kinds, ascending.
struct EventScan {
    std::vector<int> crowding;
    std::vector<int> imbalance;
};
EventScan scan_events(const Graph& g, const std::vector<char>& close_mask,
                      const PairAssignment& pa, Ratio q, int t);

// One resampling step: find the violated event with the smallest vertex id
// (crowding before imbalance on ties) and redraw the pairs of its scope, the
// vertex plus its close neighbours, in ascending id order. Returns false when
// no event is violated. Sets `stuck` when the whole scope has range 1, meaning
// resampling can never change anything.
bool resample_step(const Graph& g, const std::vector<char>& close_mask, PairAssignment& pa,
                   Ratio q, int t, Rng& rng, int& event_vertex, char& event_kind, bool& stuck);

struct ResampleResult {
    PairAssignment assignment;
    EventReport report;
};

// Moser-Tardos loop: sample, then resample violated events until none remain
// or max_rounds is spent. On failure the best assignment seen (fewest violated
// events) is returned and the report's violated sets are a fresh scan of that
// assignment — the failure path never claims success.
ResampleResult resample_until_good(const Graph& g, const std::vector<int>& close_edges,
                                   const std::vector<int>& ranges, Ratio q, int t,
                                   uint64_t seed, long max_rounds);

} // namespace nsd
