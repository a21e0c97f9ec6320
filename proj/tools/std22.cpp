// std22 — decompose graphs into two subgraphs, weight each with {1,2} so that
// adjacent vertices get distinct weighted degrees, verify the results, and
// brute-force small instances as ground truth.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "nsd/certificate_io.hpp"
#include "nsd/decompose.hpp"
#include "nsd/errors.hpp"
#include "nsd/euler_split.hpp"
#include "nsd/graph.hpp"
#include "nsd/verify.hpp"
#include "nsd/weighting.hpp"

namespace {

constexpr int kExitFail = 1;  // a requested check did not pass
constexpr int kExitUsage = 2; // bad usage or unreadable input

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

nsd::Graph load_graph(const std::string& path) { return nsd::load_edge_list(read_file(path)); }

struct CommonParams {
    std::string q_text = "9/20";
    int t = 18;
    uint64_t seed = 1;
    long max_rounds = -1;
    long long dcs_budget = 1'000'000;
    int exact_threshold = 30;

    nsd::PipelineParams pipeline() const {
        nsd::PipelineParams p;
        p.q = nsd::parse_ratio(q_text);
        p.t = t;
        p.seed = seed;
        p.max_rounds = max_rounds;
        p.dcs.local_steps = dcs_budget;
        p.dcs.exact_threshold = exact_threshold;
        p.dcs.seed = seed;
        return p;
    }
};

void add_common(CLI::App* cmd, CommonParams& p) {
    cmd->add_option("--q", p.q_text, "balance parameter, a rational like 9/20");
    cmd->add_option("--t", p.t, "list-length parameter");
    cmd->add_option("--seed", p.seed, "seed for all randomness");
    cmd->add_option("--max-rounds", p.max_rounds, "resampling round limit (default 100n)");
    cmd->add_option("--dcs-budget", p.dcs_budget, "local-search step budget per solve");
    cmd->add_option("--exact-threshold", p.exact_threshold,
                    "edge count up to which the subgraph solver searches exactly");
}

int run_decompose(const std::string& graph_path, const std::string& mode,
                  const CommonParams& common, int grid_n, const std::string& out_path,
                  const std::string& dump_assignment, const std::string& use_assignment) {
    nsd::Graph g = load_graph(graph_path);
    nsd::CertificateFile file;
    file.n = g.vertex_count();
    file.m = g.edge_count();
    file.mode = mode;

    if (mode == "euler") {
        nsd::BalancedSplit split = nsd::balanced_split(g);
        file.cert.bipartition = split.bipartition;
        file.exceptional = split.exceptional;
        file.cert.verdict.valid = true;
    } else if (mode == "knsq") {
        if (grid_n < 2) throw std::runtime_error("--n is required for knsq mode");
        auto [expect, pa] = nsd::complete_grid_assignment(grid_n);
        if (!(g == expect))
            throw std::runtime_error("graph is not K_{n^2} in canonical edge order for n = " +
                                     std::to_string(grid_n));
        std::vector<int> ids(g.edge_count());
        for (int e = 0; e < g.edge_count(); ++e) ids[e] = e;
        nsd::PartitionOutcome out = nsd::apply_rules(g, ids, pa);
        file.grid_n = grid_n;
        file.cert.bipartition = nsd::EdgeBipartition(g.edge_count());
        file.cert.bipartition.side = out.side;
        file.cert.bipartition.placed_by = out.placed_by;
        file.cert.verdict.valid = true;
    } else if (mode == "chromatic") {
        nsd::ShortcutResult res = nsd::chromatic_shortcut(g, common.pipeline().dcs);
        file.cert = res.cert;
        file.chi = res.colours_used;
        file.colour = res.colour;
    } else { // full
        nsd::PipelineParams params = common.pipeline();
        nsd::PipelineResult pr;
        if (!use_assignment.empty()) {
            nsd::PairAssignment pa = nsd::load_pair_assignment(read_file(use_assignment), g);
            pr = nsd::full_pipeline_with_assignment(g, pa, params);
        } else {
            pr = nsd::full_pipeline(g, params);
        }
        for (const std::string& w : pr.warnings) std::cerr << "warning: " << w << '\n';
        if (!pr.lll_report.success())
            std::cerr << "sampling failed after " << pr.lll_report.iterations
                      << " rounds (crowding " << pr.lll_report.violated_crowding.size()
                      << ", imbalance " << pr.lll_report.violated_imbalance.size() << ")\n";
        file.cert = pr.cert;
        file.q = params.q;
        file.t = params.t;
        file.seed = params.seed;
        if (!dump_assignment.empty())
            write_output(dump_assignment, nsd::serialize_pair_assignment(pr.assignment));
    }

    // the verdict a structural certificate carries must survive its own recheck
    if (file.cert.verdict.valid && (mode == "knsq" || mode == "euler")) {
        nsd::CertificateCheck check = nsd::check_certificate_file(g, file);
        if (!check.ok) {
            file.cert.verdict.valid = false;
            file.cert.verdict.reason = check.detail;
        }
    }

    write_output(out_path, nsd::serialize_certificate(file));
    return file.cert.verdict.valid ? 0 : kExitFail;
}

int run_verify_nsd(const std::string& graph_path, const std::string& weights_path) {
    nsd::Graph g = load_graph(graph_path);
    std::vector<int> w = nsd::load_weights(read_file(weights_path), g);
    nsd::NsdCheck check = nsd::verify_nsd(g, w);
    if (check.ok) {
        std::cout << "ok: weighting is neighbour-sum distinguishing\n";
        return 0;
    }
    std::cout << "fail: " << check.conflicts.size() << " conflicting edges:";
    for (size_t i = 0; i < check.conflicts.size() && i < 10; ++i)
        std::cout << ' ' << check.conflicts[i];
    std::cout << '\n';
    return kExitFail;
}

int run_verify_cert(const std::string& graph_path, const std::string& cert_path) {
    nsd::Graph g = load_graph(graph_path);
    nsd::CertificateFile file = nsd::load_certificate(read_file(cert_path));
    nsd::CertificateCheck check = nsd::check_certificate_file(g, file);
    if (check.ok) {
        std::cout << "ok: certificate verified (" << file.mode << ")\n";
        return 0;
    }
    std::cout << "fail: " << check.detail << '\n';
    return kExitFail;
}

int run_brute_nsd(const std::string& graph_path, int k, long long limit,
                  const std::string& out_path) {
    nsd::Graph g = load_graph(graph_path);
    auto w = nsd::brute_force_nsd(g, k, limit);
    if (!w) {
        std::cout << "none\n";
        return kExitFail;
    }
    std::cout << "found\n";
    if (!out_path.empty()) write_output(out_path, nsd::serialize_weights(*w));
    else std::cout << nsd::serialize_weights(*w);
    return 0;
}

int run_brute_22(const std::string& graph_path, int max_edges, const std::string& out_path) {
    nsd::Graph g = load_graph(graph_path);
    auto w = nsd::brute_force_22(g, max_edges);
    if (!w) {
        std::cout << "none\n";
        return kExitFail;
    }
    std::cout << "found\n";
    std::ostringstream out; // "e side weight" per line
    for (int e = 0; e < g.edge_count(); ++e)
        out << e << ' ' << static_cast<int>(w->side[e]) << ' ' << w->w[e] << '\n';
    if (!out_path.empty()) write_output(out_path, out.str());
    else std::cout << out.str();
    return 0;
}

int run_dcs_solve(const std::string& instance_path, const CommonParams& common,
                  const std::string& out_path) {
    auto [g, targets] = nsd::load_dcs_instance(read_file(instance_path));
    nsd::DcsOptions opts;
    opts.local_steps = common.dcs_budget;
    opts.exact_threshold = common.exact_threshold;
    opts.seed = common.seed;
    nsd::DcsResult res = nsd::find_dcs(g, targets, opts);
    if (res.status == nsd::DcsStatus::found) {
        std::cout << "found " << res.edges.size() << " edges\n";
        std::ostringstream out;
        for (int e : res.edges) out << e << '\n';
        if (!out_path.empty()) write_output(out_path, out.str());
        else std::cout << out.str();
        return 0;
    }
    std::cout << (res.status == nsd::DcsStatus::proven_infeasible ? "infeasible"
                                                                  : "budget-exhausted")
              << " (best potential " << res.best_potential << ", " << res.violations.size()
              << " violating vertices)\n";
    return kExitFail;
}

int run_dcs_verify(const std::string& instance_path, const std::string& subset_path) {
    auto [g, targets] = nsd::load_dcs_instance(read_file(instance_path));
    std::vector<int> edges;
    std::istringstream in(read_file(subset_path));
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            edges.push_back(std::stoi(line));
        } catch (...) {
            throw nsd::ParseError(lineno, "expected an edge id");
        }
    }
    nsd::DcsCheck check = nsd::verify_dcs(g, edges, targets);
    if (check.ok) {
        std::cout << "ok: subgraph meets every degree window and residue\n";
        return 0;
    }
    std::cout << "fail: " << check.violations.size() << " vertices violate\n";
    for (size_t i = 0; i < check.violations.size() && i < 10; ++i) {
        const auto& v = check.violations[i];
        std::cout << "  vertex " << v.v << ": degree " << v.deg << ", window [" << v.lo << ", "
                  << v.hi << "], residues {" << v.res1 << ", " << v.res2 << "}\n";
    }
    return kExitFail;
}

int run_bench(int n, const std::vector<int>& degrees, const CommonParams& common, int seeds,
              uint64_t seed_base) {
    using clock = std::chrono::steady_clock;
    auto ms_since = [](clock::time_point t0) {
        return std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    };

    std::cout << "instance n d q t seed range_min range_max split_ms sample_ms rounds "
                 "weight_ms total_ms verdict\n";
    int idx = 0;
    for (int d : degrees) {
        for (int s = 0; s < seeds; ++s) {
            uint64_t seed = seed_base + static_cast<uint64_t>(s);
            nsd::PipelineParams params = common.pipeline();
            params.seed = seed;

            auto t0 = clock::now();
            std::string verdict = "error";
            double split_ms = 0, sample_ms = 0, weight_ms = 0;
            int range_min = 0, range_max = 0;
            long rounds = 0;
            try {
                nsd::Graph g = nsd::generate_circulant(n, d, seed);

                auto t_split = clock::now();
                nsd::FarSplit fs = nsd::split_far_edges(g);
                std::vector<nsd::Side> far_side(g.edge_count(), nsd::Side::one);
                nsd::split_edges_balanced(g, fs.far_edges, far_side);
                split_ms = ms_since(t_split);

                std::vector<int> ranges = nsd::compute_pair_ranges(g, params.q, params.t);
                range_min = *std::min_element(ranges.begin(), ranges.end());
                range_max = *std::max_element(ranges.begin(), ranges.end());

                long max_rounds = params.max_rounds >= 1 ? params.max_rounds
                                                         : std::max(1L, 100L * n);
                auto t_sample = clock::now();
                nsd::ResampleResult rr = nsd::resample_until_good(
                    g, fs.close_edges, ranges, params.q, params.t, seed, max_rounds);
                sample_ms = ms_since(t_sample);
                rounds = rr.report.iterations;

                auto t_weight = clock::now();
                nsd::PipelineResult pr = nsd::full_pipeline(g, params);
                weight_ms = ms_since(t_weight) - sample_ms; // pipeline repeats the sampling
                if (weight_ms < 0) weight_ms = 0;
                verdict = pr.cert.verdict.valid ? "valid" : "invalid";
            } catch (const std::exception&) {
                verdict = "error";
            }
            std::cout << "circulant-" << idx++ << ' ' << n << ' ' << d << ' ' << common.q_text
                      << ' ' << common.t << ' ' << seed << ' ' << range_min << ' ' << range_max
                      << ' ' << split_ms << ' ' << sample_ms << ' ' << rounds << ' '
                      << weight_ms << ' ' << ms_since(t0) << ' ' << verdict << '\n';
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"decompositions of graphs into two {1,2}-weight-colourable subgraphs"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate graphs as edge-list files");
    gen->require_subcommand(1);
    struct {
        int k = 4, n = 10, d = 3;
        double p = 0.5;
        uint64_t seed = 1;
        std::string out;
    } g;
    auto* gen_complete = gen->add_subcommand("complete", "complete graph K_k");
    gen_complete->add_option("--k", g.k, "vertex count")->required();
    auto* gen_gnp = gen->add_subcommand("gnp", "binomial random graph");
    gen_gnp->add_option("--n", g.n)->required();
    gen_gnp->add_option("--p", g.p)->required();
    gen_gnp->add_option("--seed", g.seed);
    auto* gen_regular = gen->add_subcommand("regular", "random regular graph (small degree)");
    gen_regular->add_option("--n", g.n)->required();
    gen_regular->add_option("--d", g.d)->required();
    gen_regular->add_option("--seed", g.seed);
    auto* gen_circ = gen->add_subcommand("circulant", "random circulant regular graph");
    gen_circ->add_option("--n", g.n)->required();
    gen_circ->add_option("--d", g.d)->required();
    gen_circ->add_option("--seed", g.seed);
    for (auto* c : {gen_complete, gen_gnp, gen_regular, gen_circ})
        c->add_option("-o,--out", g.out, "output file (stdout by default)");

    // decompose
    auto* dec = app.add_subcommand("decompose", "run a decomposition and write a certificate");
    std::string dec_graph, dec_mode = "full", dec_out, dec_dump, dec_use;
    int dec_grid_n = 0;
    CommonParams dec_common;
    dec->add_option("graph", dec_graph, "edge-list file")->required();
    dec->add_option("--mode", dec_mode, "full | chromatic | knsq | euler")
        ->check(CLI::IsMember({"full", "chromatic", "knsq", "euler"}));
    dec->add_option("--n", dec_grid_n, "grid width for knsq mode");
    dec->add_option("-o,--out", dec_out, "certificate file (stdout by default)");
    dec->add_option("--dump-assignment", dec_dump, "write the sampled pair assignment");
    dec->add_option("--use-assignment", dec_use, "skip sampling, use this assignment file");
    add_common(dec, dec_common);

    // verify
    auto* ver = app.add_subcommand("verify", "re-check weightings and certificates");
    ver->require_subcommand(1);
    std::string vn_graph, vn_weights, vc_graph, vc_cert;
    auto* ver_nsd = ver->add_subcommand("nsd", "check a plain weighting");
    ver_nsd->add_option("graph", vn_graph)->required();
    ver_nsd->add_option("weights", vn_weights)->required();
    auto* ver_cert = ver->add_subcommand("cert", "check a certificate file");
    ver_cert->add_option("graph", vc_graph)->required();
    ver_cert->add_option("cert", vc_cert)->required();

    // brute
    auto* brute = app.add_subcommand("brute", "exhaustive oracles for small graphs");
    brute->require_subcommand(1);
    std::string bn_graph, bn_out, b22_graph, b22_out;
    int bn_k = 3, b22_max = 20;
    long long bn_limit = 100'000'000;
    auto* brute_nsd = brute->add_subcommand("nsd", "first distinguishing k-weighting, if any");
    brute_nsd->add_option("graph", bn_graph)->required();
    brute_nsd->add_option("--k", bn_k, "largest weight")->required();
    brute_nsd->add_option("--brute-threshold", bn_limit, "largest k^m to enumerate");
    brute_nsd->add_option("-o,--out", bn_out, "write the witness weights");
    auto* brute_22 = brute->add_subcommand(
        "std22", "first decomposition into two {1,2}-distinguishable subgraphs");
    brute_22->add_option("graph", b22_graph)->required();
    brute_22->add_option("--max-edges", b22_max, "largest edge count to enumerate");
    brute_22->add_option("-o,--out", b22_out, "write the witness");

    // dcs
    auto* dcs = app.add_subcommand("dcs", "degree-constrained subgraph instances");
    dcs->require_subcommand(1);
    std::string ds_instance, ds_out, dv_instance, dv_subset;
    CommonParams dcs_common;
    auto* dcs_solve = dcs->add_subcommand("solve", "find a witness subgraph");
    dcs_solve->add_option("instance", ds_instance)->required();
    dcs_solve->add_option("-o,--out", ds_out, "write witness edge ids");
    dcs_solve->add_option("--dcs-budget", dcs_common.dcs_budget);
    dcs_solve->add_option("--exact-threshold", dcs_common.exact_threshold);
    dcs_solve->add_option("--seed", dcs_common.seed);
    auto* dcs_verify = dcs->add_subcommand("verify", "check a witness subgraph");
    dcs_verify->add_option("instance", dv_instance)->required();
    dcs_verify->add_option("subset", dv_subset)->required();

    // bench
    auto* bench = app.add_subcommand("bench", "sweep the pipeline over circulant instances");
    int bench_n = 200, bench_seeds = 5;
    uint64_t bench_base = 1000;
    std::vector<int> bench_degrees{96, 192};
    CommonParams bench_common;
    bench->add_option("--n", bench_n, "vertex count");
    bench->add_option("--d", bench_degrees, "degrees to sweep")->delimiter(',');
    bench->add_option("--seeds", bench_seeds, "seeds per degree");
    bench->add_option("--seed-base", bench_base, "first seed");
    add_common(bench, bench_common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (gen_complete->parsed()) return (write_output(g.out, nsd::serialize_edge_list(nsd::generate_complete(g.k))), 0);
        if (gen_gnp->parsed()) return (write_output(g.out, nsd::serialize_edge_list(nsd::generate_gnp(g.n, g.p, g.seed))), 0);
        if (gen_regular->parsed()) return (write_output(g.out, nsd::serialize_edge_list(nsd::generate_regular(g.n, g.d, g.seed))), 0);
        if (gen_circ->parsed()) return (write_output(g.out, nsd::serialize_edge_list(nsd::generate_circulant(g.n, g.d, g.seed))), 0);
        if (dec->parsed())
            return run_decompose(dec_graph, dec_mode, dec_common, dec_grid_n, dec_out, dec_dump,
                                 dec_use);
        if (ver_nsd->parsed()) return run_verify_nsd(vn_graph, vn_weights);
        if (ver_cert->parsed()) return run_verify_cert(vc_graph, vc_cert);
        if (brute_nsd->parsed()) return run_brute_nsd(bn_graph, bn_k, bn_limit, bn_out);
        if (brute_22->parsed()) return run_brute_22(b22_graph, b22_max, b22_out);
        if (dcs_solve->parsed()) return run_dcs_solve(ds_instance, dcs_common, ds_out);
        if (dcs_verify->parsed()) return run_dcs_verify(dv_instance, dv_subset);
        if (bench->parsed())
            return run_bench(bench_n, bench_degrees, bench_common, bench_seeds, bench_base);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
