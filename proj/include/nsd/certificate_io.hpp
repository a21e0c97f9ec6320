#pragma once

#include <string>
#include <vector>

#include "nsd/rational.hpp"
#include "nsd/verify.hpp"
#include "nsd/weighting.hpp"

namespace nsd {

// On-disk certificate. The mode determines which sections are present:
//   full       BIPARTITION WEIGHTS SUMS BALANCE VERDICT, plus Q/T/SEED
//   chromatic  BIPARTITION (all side one) WEIGHTS SUMS CHI COLOURS VERDICT
//   knsq       BIPARTITION GRID VERDICT (structural: degree and colour bounds)
//   euler      BIPARTITION EXCEPTIONAL VERDICT (balanced-split bounds)
struct CertificateFile {
    std::string mode;
    int n = 0, m = 0;
    Certificate cert;

    // full
    Ratio q{0, 1};
    int t = 0;
    uint64_t seed = 0;

    // chromatic
    int chi = 0;
    std::vector<int> colour;

    // knsq
    int grid_n = 0;

    // euler
    std::vector<int> exceptional;
};

std::string serialize_certificate(const CertificateFile& file);
CertificateFile load_certificate(const std::string& text);

// Re-verifies a certificate file against its graph, by mode: full and
// chromatic run the full weighting check (chromatic additionally checks that
// every weighted degree lands in its colour's residue pair), knsq rechecks the
// grid decomposition bounds, euler rechecks the balanced-split bounds.
CertificateCheck check_certificate_file(const Graph& g, const CertificateFile& file);

// Plain per-edge weights, m lines "e w".
std::string serialize_weights(const std::vector<int>& w);
std::vector<int> load_weights(const std::string& text, const Graph& g);

} // namespace nsd
