#include "nsd/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "nsd/errors.hpp"
#include "nsd/rng.hpp"

namespace nsd {

Graph::Graph(int n) : n_(n), adj_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& pairs) {
    Graph g(n);
    g.edges_.reserve(pairs.size());
    std::set<std::pair<int, int>> seen;
    for (const auto& [a, b] : pairs) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(a) +
                                        " " + std::to_string(b));
        if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
        int u = std::min(a, b), v = std::max(a, b);
        if (!seen.insert({u, v}).second)
            throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " +
                                        std::to_string(v));
        int id = static_cast<int>(g.edges_.size());
        g.edges_.push_back({u, v});
        g.adj_[u].push_back({v, id});
        g.adj_[v].push_back({u, id});
    }
    return g;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int d = degree(0);
    for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    for (const auto& [w, e] : adj_[u])
        if (w == v) return true;
    return false;
}

std::vector<int> Graph::component_ids() const {
    std::vector<int> comp(n_, -1);
    int next = 0;
    std::vector<int> stack;
    for (int s = 0; s < n_; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const auto& [u, e] : adj_[v]) {
                if (comp[u] == -1) {
                    comp[u] = next;
                    stack.push_back(u);
                }
            }
        }
        ++next;
    }
    return comp;
}

// --- text format --------------------------------------------------------------

Graph load_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    auto next_line = [&](bool required) -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            // tolerate whitespace-only trailing lines
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
            if (required) return true;
        }
        return false;
    };

    if (!next_line(false)) throw ParseError(1, "missing header 'n m'");
    long long n, m;
    {
        std::istringstream hs(line);
        std::string extra;
        if (!(hs >> n >> m) || (hs >> extra))
            throw ParseError(lineno, "malformed header, expected 'n m'");
        if (n < 0 || m < 0) throw ParseError(lineno, "negative n or m");
    }

    std::vector<std::pair<int, int>> pairs;
    std::set<std::pair<int, int>> seen;
    pairs.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_line(true) || line.find_first_not_of(" \t\r") == std::string::npos)
            throw ParseError(lineno + 1, "expected " + std::to_string(m) +
                                             " edge lines, got " + std::to_string(i));
        std::istringstream es(line);
        long long u, v;
        std::string extra;
        if (!(es >> u >> v) || (es >> extra))
            throw ParseError(lineno, "malformed edge line, expected 'u v'");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(lineno, "vertex out of range [0, " + std::to_string(n) + ")");
        if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
        int lo = static_cast<int>(std::min(u, v)), hi = static_cast<int>(std::max(u, v));
        if (!seen.insert({lo, hi}).second)
            throw ParseError(lineno,
                             "duplicate edge " + std::to_string(lo) + " " + std::to_string(hi));
        pairs.push_back({static_cast<int>(u), static_cast<int>(v)});
    }
    if (next_line(false)) throw ParseError(lineno, "unexpected content after last edge");
    return Graph::from_edges(static_cast<int>(n), pairs);
}

std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

// --- generators -----------------------------------------------------------------

Graph generate_complete(int k) {
    if (k < 1) throw std::invalid_argument("complete graph needs k >= 1");
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<size_t>(k) * (k - 1) / 2);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) pairs.push_back({u, v});
    return Graph::from_edges(k, pairs);
}

Graph generate_gnp(int n, double p, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gnp needs n >= 1");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("gnp needs p in [0, 1]");
    Rng rng(seed);
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.unit() < p) pairs.push_back({u, v});
    return Graph::from_edges(n, pairs);
}

Graph generate_regular(int n, int d, uint64_t seed) {
    if (n < 1 || d < 1) throw std::invalid_argument("regular graph needs n, d >= 1");
    if (d >= n) throw std::invalid_argument("regular graph needs d < n");
    if ((static_cast<long long>(n) * d) % 2 != 0)
        throw std::invalid_argument("infeasible: n*d must be even");

    Rng rng(seed);
    const int rounds = 2000;
    for (int attempt = 0; attempt < rounds; ++attempt) {
        std::vector<int> stubs;
        stubs.reserve(static_cast<size_t>(n) * d);
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < d; ++i) stubs.push_back(v);
        // Fisher-Yates with our own stream
        for (size_t i = stubs.size(); i > 1; --i)
            std::swap(stubs[i - 1], stubs[rng.below(i)]);

        std::set<std::pair<int, int>> seen;
        bool ok = true;
        for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v) { ok = false; break; }
            if (!seen.insert({std::min(u, v), std::max(u, v)}).second) { ok = false; break; }
        }
        if (!ok) continue;
        std::vector<std::pair<int, int>> pairs(seen.begin(), seen.end());
        std::sort(pairs.begin(), pairs.end());
        return Graph::from_edges(n, pairs);
    }
    throw std::runtime_error("pairing model failed after " + std::to_string(rounds) +
                             " rounds (n=" + std::to_string(n) + ", d=" + std::to_string(d) +
                             "); try generate_circulant for dense regular graphs");
}

Graph generate_circulant(int n, int d, uint64_t seed) {
    if (n < 3 || d < 2) throw std::invalid_argument("circulant needs n >= 3, d >= 2");
    if (d % 2 != 0) throw std::invalid_argument("circulant generator needs d even");
    if (d >= n) throw std::invalid_argument("circulant needs d < n");
    // offsets in [1, ceil(n/2) - 1]; offset n/2 (n even) would add degree 1, skip it
    int max_off = (n - 1) / 2;
    int want = d / 2;
    if (want > max_off)
        throw std::invalid_argument("not enough distinct offsets for requested degree");

    Rng rng(seed);
    std::vector<int> all(max_off);
    for (int i = 0; i < max_off; ++i) all[i] = i + 1;
    for (size_t i = all.size(); i > 1; --i) std::swap(all[i - 1], all[rng.below(i)]);
    std::vector<int> offsets(all.begin(), all.begin() + want);
    std::sort(offsets.begin(), offsets.end());

    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<size_t>(n) * want);
    for (int v = 0; v < n; ++v)
        for (int off : offsets) {
            int u = (v + off) % n;
            if (v < u) pairs.push_back({v, u});
            else pairs.push_back({u, v});
        }
    std::sort(pairs.begin(), pairs.end());
    Graph g = Graph::from_edges(n, pairs);
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != d) throw std::logic_error("circulant construction broke regularity");
    return g;
}

// --- bipartition helpers ----------------------------------------------------------

const char* placement_tag(Placement p) {
    switch (p) {
        case Placement::rule1: return "1";
        case Placement::rule2: return "2";
        case Placement::rule3: return "3";
        case Placement::rule4: return "4";
        case Placement::rule5: return "5";
        case Placement::rule6: return "6";
        case Placement::far_split: return "hprime";
        case Placement::euler: return "euler";
        case Placement::none: return "none";
    }
    return "none";
}

Placement placement_from_tag(const std::string& tag) {
    if (tag == "1") return Placement::rule1;
    if (tag == "2") return Placement::rule2;
    if (tag == "3") return Placement::rule3;
    if (tag == "4") return Placement::rule4;
    if (tag == "5") return Placement::rule5;
    if (tag == "6") return Placement::rule6;
    if (tag == "hprime") return Placement::far_split;
    if (tag == "euler") return Placement::euler;
    if (tag == "none") return Placement::none;
    throw std::invalid_argument("unknown placement tag '" + tag + "'");
}

int degree_on_side(const Graph& g, const EdgeBipartition& b, int v, Side s) {
    int d = 0;
    for (const auto& [u, e] : g.neighbours(v))
        if (b.side[e] == s) ++d;
    return d;
}

} // namespace nsd
