#include "nsd/euler_split.hpp"

#include <algorithm>
#include <stdexcept>

namespace nsd {

namespace {

// Incidence restricted to the edge subset, per vertex: (neighbour, edge id),
// sorted. The auxiliary vertex uses id n and sorts last.
struct SubsetView {
    std::vector<std::vector<std::pair<int, int>>> inc; // size n + 1
    std::vector<int> comp_of_vertex;                   // -1 if untouched
    int components = 0;
};

SubsetView build_view(const Graph& g, const std::vector<int>& edge_ids) {
    int n = g.vertex_count();
    SubsetView view;
    view.inc.assign(n + 1, {});
    view.comp_of_vertex.assign(n, -1);

    for (int e : edge_ids) {
        if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("unknown edge id");
        const Edge& ed = g.edge(e);
        view.inc[ed.u].push_back({ed.v, e});
        view.inc[ed.v].push_back({ed.u, e});
    }
    for (int v = 0; v < n; ++v) std::sort(view.inc[v].begin(), view.inc[v].end());

    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (view.comp_of_vertex[s] != -1 || view.inc[s].empty()) continue;
        int c = view.components++;
        view.comp_of_vertex[s] = c;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const auto& [u, e] : view.inc[v]) {
                if (view.comp_of_vertex[u] == -1) {
                    view.comp_of_vertex[u] = c;
                    stack.push_back(u);
                }
            }
        }
    }
    return view;
}

} // namespace

std::vector<int> split_edges_balanced(const Graph& g, const std::vector<int>& edge_ids,
                                      std::vector<Side>& side_out) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    const int aux = n;
    SubsetView view = build_view(g, edge_ids);
    std::vector<int> exceptional;

    std::vector<std::vector<int>> members(view.components);
    for (int v = 0; v < n; ++v)
        if (view.comp_of_vertex[v] != -1) members[view.comp_of_vertex[v]].push_back(v);

    std::vector<char> used(m, 0);
    std::vector<char> aux_used;              // per-component auxiliary edges
    std::vector<size_t> cursor(n + 1, 0);

    auto edge_used = [&](int e) -> char& { return e < m ? used[e] : aux_used[e - m]; };

    for (const auto& comp : members) {
        std::vector<int> odd;
        long long comp_edges = 0;
        for (int v : comp) {
            comp_edges += static_cast<long long>(view.inc[v].size());
            if (view.inc[v].size() % 2 == 1) odd.push_back(v);
        }
        comp_edges /= 2;

        int start;
        view.inc[aux].clear();
        cursor[aux] = 0;
        aux_used.assign(odd.size(), 0);
        if (!odd.empty()) {
            // auxiliary vertex joined to every odd-degree vertex; ids follow the
            // real range and are reused per component
            for (size_t k = 0; k < odd.size(); ++k) {
                int v = odd[k];
                int ve = m + static_cast<int>(k);
                view.inc[aux].push_back({v, ve});
                view.inc[v].push_back({aux, ve});
            }
            start = aux;
        } else {
            // comp is ascending, so ties keep the lowest id
            start = comp[0];
            for (int v : comp)
                if (view.inc[v].size() < view.inc[start].size()) start = v;
        }

        // Hierholzer, iterative; circuit edges come out reversed.
        std::vector<std::pair<int, int>> stack; // (vertex, edge used to arrive)
        std::vector<int> circuit;
        stack.push_back({start, -1});
        while (!stack.empty()) {
            int v = stack.back().first;
            bool advanced = false;
            while (cursor[v] < view.inc[v].size()) {
                auto [u, e] = view.inc[v][cursor[v]++];
                if (edge_used(e)) continue;
                edge_used(e) = 1;
                stack.push_back({u, e});
                advanced = true;
                break;
            }
            if (!advanced) {
                circuit.push_back(stack.back().second);
                stack.pop_back();
            }
        }
        circuit.pop_back(); // the start marker (-1)
        std::reverse(circuit.begin(), circuit.end());

        // Alternate sides along the tour. Auxiliary edges take part in the
        // alternation but are not emitted.
        for (size_t i = 0; i < circuit.size(); ++i) {
            int e = circuit[i];
            if (e < m) side_out[e] = (i % 2 == 0) ? Side::one : Side::two;
        }

        // All-even component with an odd tour: the start vertex carries both the
        // first and the last edge, both on side one.
        if (odd.empty() && comp_edges % 2 == 1) exceptional.push_back(start);
    }

    std::sort(exceptional.begin(), exceptional.end());
    return exceptional;
}

BalancedSplit balanced_split(const Graph& g) {
    BalancedSplit out;
    out.bipartition = EdgeBipartition(g.edge_count());
    std::vector<int> ids(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) ids[e] = e;
    out.exceptional = split_edges_balanced(g, ids, out.bipartition.side);
    std::fill(out.bipartition.placed_by.begin(), out.bipartition.placed_by.end(),
              Placement::euler);
    return out;
}

} // namespace nsd
