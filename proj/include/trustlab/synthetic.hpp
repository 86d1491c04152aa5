// Synthetic Epinions-like rating graph for the pairwise-similarity study:
// regular nodes rate each other with Zipf-skewed weights, camouflage nodes
// are rated high and rate back around their honesty level eta.

#pragma once

#include <cstdint>
#include <vector>

#include "trustlab/ledger.hpp"

namespace trustlab {

struct SyntheticGraphSpec {
    std::uint32_t n_regular = 100;
    std::uint32_t n_malicious = 30;
    double eta = 0.5;
    double zipf_exponent = 1.0;
    double regular_to_malicious_low = 0.85;
    double regular_to_malicious_high = 1.0;
    double malicious_halfwidth = 0.05;  // ratings drawn in [eta +- halfwidth]

    std::uint32_t population() const { return n_regular + n_malicious; }
};

// Complete rating graph: regular-regular edges carry Zipf-rank values
// ((R+1-r)/R with rank probability proportional to r^-s, so most mass sits
// at high trust), regular->malicious values are uniform in [0.85, 1.0],
// malicious->regular uniform in [eta-0.05, eta+0.05] clipped to [0,1], and
// the malicious ring rates its chain successors 1.0.
InteractionLedger build_synthetic_ledger(const SyntheticGraphSpec& spec, std::uint64_t seed);

// Full pairwise feedback-similarity matrix of the synthetic graph.
std::vector<std::vector<double>> similarity_matrix(const InteractionLedger& ledger,
                                                   std::size_t n);

struct SimilaritySummary {
    double good_good = 0.0;
    double cross_group = 0.0;   // camouflage vs regular
    double malicious_malicious = 0.0;
};

SimilaritySummary summarize_similarity(const std::vector<std::vector<double>>& sim,
                                       std::uint32_t n_regular);

}  // namespace trustlab
