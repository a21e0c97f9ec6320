#include "nsd/decompose.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "nsd/errors.hpp"
#include "nsd/euler_split.hpp"

namespace nsd {

void PairAssignment::validate(const Graph& g) const {
    size_t n = static_cast<size_t>(g.vertex_count());
    if (c1.size() != n || c2.size() != n || range.size() != n)
        throw std::invalid_argument("pair assignment size mismatch");
    for (size_t v = 0; v < n; ++v) {
        if (range[v] < 1)
            throw std::invalid_argument("vertex " + std::to_string(v) + ": range < 1");
        if (c1[v] < 0 || c1[v] >= range[v] || c2[v] < 0 || c2[v] >= range[v])
            throw std::invalid_argument("vertex " + std::to_string(v) +
                                        ": pair outside [0, range)");
    }
}

std::string serialize_pair_assignment(const PairAssignment& pa) {
    std::ostringstream out;
    for (size_t v = 0; v < pa.c1.size(); ++v)
        out << v << ' ' << pa.c1[v] << ' ' << pa.c2[v] << ' ' << pa.range[v] << '\n';
    return out.str();
}

PairAssignment load_pair_assignment(const std::string& text, const Graph& g) {
    int n = g.vertex_count();
    PairAssignment pa;
    pa.c1.assign(n, -1);
    pa.c2.assign(n, -1);
    pa.range.assign(n, 0);
    std::vector<char> filled(n, 0);

    std::istringstream in(text);
    std::string line;
    int lineno = 0, count = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        long long v, a, b, r;
        std::string extra;
        if (!(ls >> v >> a >> b >> r) || (ls >> extra))
            throw ParseError(lineno, "expected 'v c1 c2 range'");
        if (v < 0 || v >= n) throw ParseError(lineno, "vertex out of range");
        if (filled[v]) throw ParseError(lineno, "vertex " + std::to_string(v) + " repeated");
        filled[v] = 1;
        pa.c1[v] = static_cast<int>(a);
        pa.c2[v] = static_cast<int>(b);
        pa.range[v] = static_cast<int>(r);
        ++count;
    }
    if (count != n) throw ParseError(lineno, "expected one line per vertex");
    pa.validate(g);
    return pa;
}

FarSplit split_far_edges(const Graph& g) {
    FarSplit out;
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        long long a = g.degree(ed.u), b = g.degree(ed.v);
        if (std::max(a, b) > 2 * std::min(a, b)) out.far_edges.push_back(e);
        else out.close_edges.push_back(e);
    }
    return out;
}

int pair_range_for_degree(long long d, Ratio q, int t) {
    if (q.num <= 0 || q.den <= 0 || t < 1)
        throw std::invalid_argument("need q > 0 and t >= 1");
    long long lhs = q.num * d;          // q*d >= 24t  <=>  num*d >= 24*t*den
    long long unit = 24LL * t * q.den;
    if (lhs < unit)
        throw std::invalid_argument("degree " + std::to_string(d) +
                                    " too small: q*d/(24t) = " + std::to_string(q.num) + "*" +
                                    std::to_string(d) + "/" + std::to_string(unit) + " < 1");
    long long r = 1;
    while (2 * r * unit <= lhs && r < (1LL << 30)) r *= 2;
    return static_cast<int>(r);
}

std::vector<int> compute_pair_ranges(const Graph& g, Ratio q, int t) {
    std::vector<int> out(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        try {
            out[v] = pair_range_for_degree(g.degree(v), q, t);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("vertex " + std::to_string(v) + ": " + e.what());
        }
    }
    return out;
}

int same_pair_neighbours(const Graph& g, const std::vector<char>& close_mask,
                         const PairAssignment& pa, int v) {
    int count = 0;
    for (const auto& [u, e] : g.neighbours(v)) {
        if (!close_mask[e]) continue;
        if (pa.range[u] == pa.range[v] && pa.c1[u] == pa.c1[v] && pa.c2[u] == pa.c2[v]) ++count;
    }
    return count;
}

PartitionOutcome apply_rules(const Graph& g, const std::vector<int>& close_edges,
                             const PairAssignment& pa) {
    pa.validate(g);
    PartitionOutcome out;
    out.side.assign(g.edge_count(), Side::one);
    out.placed_by.assign(g.edge_count(), Placement::none);

    // same-class groups: (c1, c2, range) -> their internal close edges
    std::map<std::tuple<int, int, int>, std::vector<int>> classes;

    for (int e : close_edges) {
        const Edge& ed = g.edge(e);
        int u = ed.u, v = ed.v;
        bool eq1 = pa.c1[u] == pa.c1[v], eq2 = pa.c2[u] == pa.c2[v];
        if (eq1 && eq2) {
            out.same_pair_edges.push_back(e);
            if (pa.range[u] == pa.range[v]) {
                classes[{pa.c1[u], pa.c2[u], pa.range[u]}].push_back(e);
            } else {
                out.side[e] = Side::two;
                out.placed_by[e] = Placement::rule6;
            }
        } else if (eq1) {
            out.side[e] = Side::two;
            out.placed_by[e] = Placement::rule1;
        } else if (eq2) {
            out.side[e] = Side::one;
            out.placed_by[e] = Placement::rule2;
        } else {
            int sum = pa.c1[u] + pa.c2[u] + pa.c1[v] + pa.c2[v];
            out.side[e] = (sum % 2 == 1) ? Side::one : Side::two;
            out.placed_by[e] = (sum % 2 == 1) ? Placement::rule3 : Placement::rule4;
        }
    }

    // rule 5: balanced Euler split inside every same-class subgraph
    for (auto& [key, ids] : classes) {
        std::vector<int> exc = split_edges_balanced(g, ids, out.side);
        for (int e : ids) out.placed_by[e] = Placement::rule5;
        out.special.insert(out.special.end(), exc.begin(), exc.end());

        // record edge-bearing components of this class
        std::vector<char> in_class(g.edge_count(), 0);
        for (int e : ids) in_class[e] = 1;
        std::vector<char> seen(g.vertex_count(), 0);
        for (int e : ids) {
            int root = std::min(g.edge(e).u, g.edge(e).v);
            if (seen[root]) continue;
            SameClassComponent comp;
            comp.c1 = std::get<0>(key);
            comp.c2 = std::get<1>(key);
            comp.range = std::get<2>(key);
            std::vector<int> stack{root};
            seen[root] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                comp.vertices.push_back(v);
                for (const auto& [u, e2] : g.neighbours(v)) {
                    if (in_class[e2] && !seen[u]) {
                        seen[u] = 1;
                        stack.push_back(u);
                    }
                }
            }
            std::sort(comp.vertices.begin(), comp.vertices.end());
            out.same_class_components.push_back(std::move(comp));
        }
    }
    std::sort(out.special.begin(), out.special.end());

    // conflict bound: least T with max |A(v)| <= 2T - 2
    std::vector<char> close_mask(g.edge_count(), 0);
    for (int e : close_edges) close_mask[e] = 1;
    int max_same = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        max_same = std::max(max_same, same_pair_neighbours(g, close_mask, pa, v));
    out.conflict_bound = (max_same + 2 + 1) / 2; // ceil((max + 2) / 2)

    for (int e : close_edges)
        (out.side[e] == Side::one ? out.h1 : out.h2).push_back(e);
    std::sort(out.h1.begin(), out.h1.end());
    std::sort(out.h2.begin(), out.h2.end());
    return out;
}

std::pair<Graph, PairAssignment> complete_grid_assignment(int n) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("grid assignment needs even n >= 2");
    Graph g = generate_complete(n * n);
    PairAssignment pa;
    pa.c1.resize(n * n);
    pa.c2.resize(n * n);
    pa.range.assign(static_cast<size_t>(n) * n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            pa.c1[i * n + j] = i;
            pa.c2[i * n + j] = j;
        }
    return {std::move(g), std::move(pa)};
}

} // namespace nsd
