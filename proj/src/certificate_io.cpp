#include "nsd/certificate_io.hpp"

#include <algorithm>
#include <sstream>

#include "nsd/errors.hpp"

namespace nsd {

namespace {

constexpr const char* kMagic = "STD22-CERTIFICATE";

struct LineReader {
    std::istringstream in;
    std::string line;
    int lineno = 0;

    explicit LineReader(const std::string& text) : in(text) {}

    bool next() {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    }

    std::string expect() {
        if (!next()) throw ParseError(lineno + 1, "unexpected end of certificate");
        return line;
    }
};

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream ls(line);
    std::vector<std::string> out;
    std::string tok;
    while (ls >> tok) out.push_back(tok);
    return out;
}

long long to_int(const std::string& s, int lineno) {
    try {
        size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw ParseError(lineno, "expected an integer, got '" + s + "'");
    }
}

} // namespace

std::string serialize_certificate(const CertificateFile& file) {
    std::ostringstream out;
    out << kMagic << '\n';
    out << "MODE " << file.mode << '\n';
    out << "GRAPH " << file.n << ' ' << file.m << '\n';

    if (file.mode == "full") {
        out << "Q " << file.q.num << '/' << file.q.den << '\n';
        out << "T " << file.t << '\n';
        out << "SEED " << file.seed << '\n';
    }
    if (file.mode == "chromatic") {
        out << "CHI " << file.chi << '\n';
        out << "COLOURS " << file.colour.size() << '\n';
        for (size_t v = 0; v < file.colour.size(); ++v)
            out << v << ' ' << file.colour[v] << '\n';
    }
    if (file.mode == "knsq") out << "GRID " << file.grid_n << '\n';

    const Certificate& c = file.cert;
    out << "BIPARTITION " << c.bipartition.size() << '\n';
    for (int e = 0; e < c.bipartition.size(); ++e)
        out << e << ' ' << static_cast<int>(c.bipartition.side[e]) << ' '
            << placement_tag(c.bipartition.placed_by[e]) << '\n';

    if (file.mode == "full" || file.mode == "chromatic") {
        for (int i = 0; i < 2; ++i) {
            std::vector<int> side_edges;
            for (int e = 0; e < c.bipartition.size(); ++e)
                if (side_index(c.bipartition.side[e]) == i) side_edges.push_back(e);
            out << "WEIGHTS-" << (i + 1) << ' ' << side_edges.size() << '\n';
            for (int e : side_edges) out << e << ' ' << static_cast<int>(c.weight[e]) << '\n';
        }
        for (int i = 0; i < 2; ++i) {
            out << "SUMS-" << (i + 1) << ' ' << c.sums[i].size() << '\n';
            for (size_t v = 0; v < c.sums[i].size(); ++v)
                out << v << ' ' << c.sums[i][v] << '\n';
        }
    }
    if (file.mode == "full") {
        if (c.balance_ok) {
            out << "BALANCE ok 0\n";
        } else {
            out << "BALANCE violated " << c.balance_violations.size() << '\n';
            for (int v : c.balance_violations) out << v << '\n';
        }
    }
    if (file.mode == "euler") {
        out << "EXCEPTIONAL " << file.exceptional.size() << '\n';
        for (int v : file.exceptional) out << v << '\n';
    }

    if (c.verdict.valid) {
        out << "VERDICT valid\n";
    } else {
        out << "VERDICT invalid " << c.verdict.side << ' ' << c.verdict.edge;
        if (!c.verdict.reason.empty()) out << ' ' << c.verdict.reason;
        out << '\n';
    }
    return out.str();
}

CertificateFile load_certificate(const std::string& text) {
    LineReader r(text);
    CertificateFile file;

    if (r.expect() != kMagic) throw ParseError(r.lineno, "not a certificate file");
    {
        auto t = tokens(r.expect());
        if (t.size() != 2 || t[0] != "MODE") throw ParseError(r.lineno, "expected MODE");
        file.mode = t[1];
        if (file.mode != "full" && file.mode != "chromatic" && file.mode != "knsq" &&
            file.mode != "euler")
            throw ParseError(r.lineno, "unknown mode '" + file.mode + "'");
    }
    {
        auto t = tokens(r.expect());
        if (t.size() != 3 || t[0] != "GRAPH") throw ParseError(r.lineno, "expected GRAPH");
        file.n = static_cast<int>(to_int(t[1], r.lineno));
        file.m = static_cast<int>(to_int(t[2], r.lineno));
    }

    if (file.mode == "full") {
        auto t = tokens(r.expect());
        if (t.size() != 2 || t[0] != "Q") throw ParseError(r.lineno, "expected Q");
        file.q = parse_ratio(t[1]);
        t = tokens(r.expect());
        if (t.size() != 2 || t[0] != "T") throw ParseError(r.lineno, "expected T");
        file.t = static_cast<int>(to_int(t[1], r.lineno));
        t = tokens(r.expect());
        if (t.size() != 2 || t[0] != "SEED") throw ParseError(r.lineno, "expected SEED");
        file.seed = static_cast<uint64_t>(to_int(t[1], r.lineno));
    }
    if (file.mode == "chromatic") {
        auto t = tokens(r.expect());
        if (t.size() != 2 || t[0] != "CHI") throw ParseError(r.lineno, "expected CHI");
        file.chi = static_cast<int>(to_int(t[1], r.lineno));
        t = tokens(r.expect());
        if (t.size() != 2 || t[0] != "COLOURS") throw ParseError(r.lineno, "expected COLOURS");
        int count = static_cast<int>(to_int(t[1], r.lineno));
        file.colour.assign(count, 0);
        for (int i = 0; i < count; ++i) {
            auto line = tokens(r.expect());
            if (line.size() != 2) throw ParseError(r.lineno, "expected 'v colour'");
            int v = static_cast<int>(to_int(line[0], r.lineno));
            if (v < 0 || v >= count) throw ParseError(r.lineno, "vertex out of range");
            file.colour[v] = static_cast<int>(to_int(line[1], r.lineno));
        }
    }
    if (file.mode == "knsq") {
        auto t = tokens(r.expect());
        if (t.size() != 2 || t[0] != "GRID") throw ParseError(r.lineno, "expected GRID");
        file.grid_n = static_cast<int>(to_int(t[1], r.lineno));
    }

    Certificate& c = file.cert;
    {
        auto t = tokens(r.expect());
        if (t.size() != 2 || t[0] != "BIPARTITION")
            throw ParseError(r.lineno, "expected BIPARTITION");
        int count = static_cast<int>(to_int(t[1], r.lineno));
        if (count != file.m) throw ParseError(r.lineno, "bipartition size mismatch");
        c.bipartition = EdgeBipartition(count);
        for (int i = 0; i < count; ++i) {
            auto line = tokens(r.expect());
            if (line.size() != 3) throw ParseError(r.lineno, "expected 'e side tag'");
            int e = static_cast<int>(to_int(line[0], r.lineno));
            int s = static_cast<int>(to_int(line[1], r.lineno));
            if (e < 0 || e >= count) throw ParseError(r.lineno, "edge id out of range");
            if (s != 1 && s != 2) throw ParseError(r.lineno, "side must be 1 or 2");
            c.bipartition.side[e] = s == 1 ? Side::one : Side::two;
            try {
                c.bipartition.placed_by[e] = placement_from_tag(line[2]);
            } catch (const std::invalid_argument& err) {
                throw ParseError(r.lineno, err.what());
            }
        }
    }

    if (file.mode == "full" || file.mode == "chromatic") {
        c.weight.assign(file.m, 0);
        for (int i = 0; i < 2; ++i) {
            auto t = tokens(r.expect());
            std::string want = "WEIGHTS-" + std::to_string(i + 1);
            if (t.size() != 2 || t[0] != want) throw ParseError(r.lineno, "expected " + want);
            int count = static_cast<int>(to_int(t[1], r.lineno));
            for (int j = 0; j < count; ++j) {
                auto line = tokens(r.expect());
                if (line.size() != 2) throw ParseError(r.lineno, "expected 'e w'");
                int e = static_cast<int>(to_int(line[0], r.lineno));
                if (e < 0 || e >= file.m) throw ParseError(r.lineno, "edge id out of range");
                if (side_index(c.bipartition.side[e]) != i)
                    throw ParseError(r.lineno, "edge listed under the wrong side");
                c.weight[e] = static_cast<uint8_t>(to_int(line[1], r.lineno));
            }
        }
        for (int e = 0; e < file.m; ++e)
            if (c.weight[e] == 0) throw ParseError(r.lineno, "edge " + std::to_string(e) +
                                                                 " has no weight");
        for (int i = 0; i < 2; ++i) {
            auto t = tokens(r.expect());
            std::string want = "SUMS-" + std::to_string(i + 1);
            if (t.size() != 2 || t[0] != want) throw ParseError(r.lineno, "expected " + want);
            int count = static_cast<int>(to_int(t[1], r.lineno));
            if (count != file.n) throw ParseError(r.lineno, "sums size mismatch");
            c.sums[i].assign(count, 0);
            for (int j = 0; j < count; ++j) {
                auto line = tokens(r.expect());
                if (line.size() != 2) throw ParseError(r.lineno, "expected 'v s'");
                int v = static_cast<int>(to_int(line[0], r.lineno));
                if (v < 0 || v >= count) throw ParseError(r.lineno, "vertex out of range");
                c.sums[i][v] = to_int(line[1], r.lineno);
            }
        }
    }
    if (file.mode == "full") {
        auto t = tokens(r.expect());
        if (t.size() != 3 || t[0] != "BALANCE") throw ParseError(r.lineno, "expected BALANCE");
        c.balance_ok = t[1] == "ok";
        int count = static_cast<int>(to_int(t[2], r.lineno));
        for (int i = 0; i < count; ++i)
            c.balance_violations.push_back(static_cast<int>(to_int(r.expect(), r.lineno)));
    }
    if (file.mode == "euler") {
        auto t = tokens(r.expect());
        if (t.size() != 2 || t[0] != "EXCEPTIONAL")
            throw ParseError(r.lineno, "expected EXCEPTIONAL");
        int count = static_cast<int>(to_int(t[1], r.lineno));
        for (int i = 0; i < count; ++i)
            file.exceptional.push_back(static_cast<int>(to_int(r.expect(), r.lineno)));
    }

    {
        auto t = tokens(r.expect());
        if (t.size() < 2 || t[0] != "VERDICT") throw ParseError(r.lineno, "expected VERDICT");
        if (t[1] == "valid") {
            c.verdict.valid = true;
        } else if (t[1] == "invalid") {
            if (t.size() < 4) throw ParseError(r.lineno, "expected 'invalid side edge ...'");
            c.verdict.valid = false;
            c.verdict.side = static_cast<int>(to_int(t[2], r.lineno));
            c.verdict.edge = static_cast<int>(to_int(t[3], r.lineno));
            std::string reason;
            for (size_t i = 4; i < t.size(); ++i) {
                if (!reason.empty()) reason += ' ';
                reason += t[i];
            }
            c.verdict.reason = reason;
        } else {
            throw ParseError(r.lineno, "verdict must be valid or invalid");
        }
    }
    if (r.next()) throw ParseError(r.lineno, "unexpected content after VERDICT");
    return file;
}

namespace {

CertificateCheck check_knsq(const Graph& g, const CertificateFile& file) {
    int n = file.grid_n;
    if (n < 2 || n % 2 != 0 || g.vertex_count() != n * n)
        return {false, CertStage::structure, "graph is not a grid-labelled complete graph"};
    Graph expect = generate_complete(n * n);
    if (!(g == expect))
        return {false, CertStage::structure, "graph is not K_{n^2} in canonical edge order"};

    long long need = (static_cast<long long>(n) * n - 1) / 2;
    for (int i = 0; i < 2; ++i) {
        Side side = i == 0 ? Side::one : Side::two;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (degree_on_side(g, file.cert.bipartition, v, side) < need)
                return {false, CertStage::bipartition,
                        "vertex " + std::to_string(v) + " has side-" + std::to_string(i + 1) +
                            " degree below " + std::to_string(need)};
    }
    // side one must separate first coordinates, side two second coordinates
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        int iu = ed.u / n, ju = ed.u % n, iv = ed.v / n, jv = ed.v % n;
        if (file.cert.bipartition.side[e] == Side::one && iu == iv)
            return {false, CertStage::bipartition,
                    "side-one edge " + std::to_string(e) + " joins equal first coordinates"};
        if (file.cert.bipartition.side[e] == Side::two && ju == jv)
            return {false, CertStage::bipartition,
                    "side-two edge " + std::to_string(e) + " joins equal second coordinates"};
    }
    return {true, CertStage::ok, ""};
}

CertificateCheck check_euler(const Graph& g, const CertificateFile& file) {
    std::vector<char> exceptional(g.vertex_count(), 0);
    for (int v : file.exceptional) {
        if (v < 0 || v >= g.vertex_count())
            return {false, CertStage::structure, "exceptional vertex out of range"};
        exceptional[v] = 1;
    }
    std::vector<int> comp = g.component_ids();
    std::vector<int> count(g.vertex_count(), 0);
    for (int v : file.exceptional)
        if (++count[comp[v]] > 1)
            return {false, CertStage::bipartition,
                    "two exceptional vertices in one component"};

    for (int v = 0; v < g.vertex_count(); ++v) {
        long long d = g.degree(v);
        long long d1 = degree_on_side(g, file.cert.bipartition, v, Side::one);
        long long d2 = d - d1;
        if (exceptional[v]) {
            if (d1 != (d + 2) / 2 || d2 != (d - 1) / 2)
                return {false, CertStage::bipartition,
                        "exceptional vertex " + std::to_string(v) +
                            " does not have the (d+2)/2, (d-1)/2 split"};
        } else if (std::min(d1, d2) < d / 2) {
            return {false, CertStage::bipartition,
                    "vertex " + std::to_string(v) + " drops below floor(d/2) on one side"};
        }
    }
    return {true, CertStage::ok, ""};
}

} // namespace

CertificateCheck check_certificate_file(const Graph& g, const CertificateFile& file) {
    if (g.vertex_count() != file.n || g.edge_count() != file.m)
        return {false, CertStage::structure, "certificate was made for a different graph"};

    if (!file.cert.verdict.valid)
        return {false, CertStage::structure,
                "certificate declares itself invalid: " + file.cert.verdict.reason};

    if (file.mode == "knsq") return check_knsq(g, file);
    if (file.mode == "euler") return check_euler(g, file);

    CertificateCheck base = verify_certificate(g, file.cert);
    if (!base.ok) return base;

    if (file.mode == "chromatic") {
        if (file.chi < 1 || static_cast<int>(file.colour.size()) != file.n)
            return {false, CertStage::structure, "missing colour data"};
        for (int e = 0; e < g.edge_count(); ++e) {
            if (file.cert.bipartition.side[e] != Side::one)
                return {false, CertStage::bipartition,
                        "chromatic certificates keep every edge on side one"};
            if (file.colour[g.edge(e).u] == file.colour[g.edge(e).v])
                return {false, CertStage::structure,
                        "colouring is not proper at edge " + std::to_string(e)};
        }
        long long mod = 2LL * file.chi;
        for (int v = 0; v < file.n; ++v) {
            long long r = ((file.cert.sums[0][v] % mod) + mod) % mod;
            if (r != 2LL * file.colour[v] && r != 2LL * file.colour[v] + 1)
                return {false, CertStage::sums,
                        "vertex " + std::to_string(v) +
                            " lands outside its colour's residue pair"};
        }
    }
    return {true, CertStage::ok, ""};
}

std::string serialize_weights(const std::vector<int>& w) {
    std::ostringstream out;
    for (size_t e = 0; e < w.size(); ++e) out << e << ' ' << w[e] << '\n';
    return out.str();
}

std::vector<int> load_weights(const std::string& text, const Graph& g) {
    std::vector<int> w(g.edge_count(), 0);
    std::vector<char> filled(g.edge_count(), 0);
    std::istringstream in(text);
    std::string line;
    int lineno = 0, count = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto t = tokens(line);
        if (t.size() != 2) throw ParseError(lineno, "expected 'e w'");
        long long e = to_int(t[0], lineno), val = to_int(t[1], lineno);
        if (e < 0 || e >= g.edge_count()) throw ParseError(lineno, "edge id out of range");
        if (filled[e]) throw ParseError(lineno, "edge repeated");
        filled[e] = 1;
        w[e] = static_cast<int>(val);
        ++count;
    }
    if (count != g.edge_count())
        throw ParseError(lineno, "expected one weight per edge");
    return w;
}

} // namespace nsd
