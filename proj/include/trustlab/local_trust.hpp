// Pairwise direct trust (raw, time-decayed, credibility-weighted) and
// the feedback-similarity machinery behind it.

#pragma once

#include <map>
#include <optional>
#include <vector>

#include "trustlab/ledger.hpp"

namespace trustlab {

enum class MatrixVariant : std::uint8_t { Raw, Decayed, Fcw };

// Sparse n x n matrix of direct trust values in [0,1]; absent entries are 0
// and the diagonal stays empty (no self-trust edge).
struct DirectTrustMatrix {
    std::size_t n = 0;
    std::map<std::pair<ParticipantId, ParticipantId>, double> s;
    MatrixVariant variant = MatrixVariant::Raw;

    double at(ParticipantId i, ParticipantId j) const {
        auto it = s.find({i, j});
        return it == s.end() ? 0.0 : it->second;
    }
    void set(ParticipantId i, ParticipantId j, double value);

    // CSV triples i,j,s.
    void export_csv(std::ostream& out) const;
};

enum class CredibilityMode : std::uint8_t {
    RaterLevel,            // per-rater weight (self-trust share)
    PairwiseScoreLevel,    // per-edge weight from rater/ratee similarity
    ThirdPartyScoreLevel,  // per-edge estimate through third-party raters
};

struct CredibilityWeights {
    CredibilityMode mode = CredibilityMode::RaterLevel;
    std::map<ParticipantId, double> by_rater;                          // RaterLevel
    std::map<std::pair<ParticipantId, ParticipantId>, double> by_pair; // score-level
};

// Success-ratio direct trust: delta/(delta+sigma+1) while the failure share
// sigma/(delta+sigma+1) stays within the tolerance theta, 1/2 otherwise.
double success_ratio_trust(std::uint64_t delta, std::uint64_t sigma, double theta = 0.05);

// Matrix edge form of the success ratio: failure-dominated pairs carry no
// trust edge at all instead of the neutral 1/2, so participants that only
// ever disappointed their raters keep zero incoming trust.
double success_ratio_edge(std::uint64_t delta, std::uint64_t sigma, double theta = 0.05);

// Expectation of the Beta posterior over the success probability,
// (delta+1)/(delta+sigma+2); the base-rate form uses (delta+2a)/(delta+sigma+2).
double beta_expectation_trust(std::uint64_t delta, std::uint64_t sigma);
double beta_expectation_trust(std::uint64_t delta, std::uint64_t sigma, double base_rate);

// Decay-weighted mean of i's rating values for j; weights a^(now - t).
// Empty history yields nullopt.
std::optional<double> decayed_direct_trust(const InteractionLedger& ledger,
                                           ParticipantId i, ParticipantId j, double a);

// One minus the root-mean-square difference of the two raters' average
// ratings over commonly rated targets; 0 when they share no target.
double feedback_similarity(const InteractionLedger& ledger, ParticipantId v, ParticipantId w);

// Precomputed per-rater target means, for similarity over dense ledgers.
class SimilarityCache {
public:
    explicit SimilarityCache(const InteractionLedger& ledger);
    double similarity(ParticipantId v, ParticipantId w) const;

    // Number of commonly rated targets backing that similarity.
    std::size_t common_targets(ParticipantId v, ParticipantId w) const;

private:
    std::map<ParticipantId, std::map<ParticipantId, double>> mean_rating_;
};

// Self-trust-share credibility over the raters of one target: weight
// T(i)/sum T, uniform when the total trust is zero. Throws on an empty set.
CredibilityWeights rater_level_credibility(const std::vector<double>& trust,
                                           const std::vector<ParticipantId>& raters_of_j);

// Similarity share of third party k among j's raters from i's viewpoint.
// Third parties exclude i itself; a zero denominator yields 0.
double third_party_similarity_credibility(const InteractionLedger& ledger,
                                          ParticipantId i, ParticipantId k,
                                          const std::vector<ParticipantId>& raters_of_j);

// exp(1 - 1/sim) on (0,1], continuously extended to 0 at sim = 0.
double exp_credibility(double sim);

// Applies credibility weights to a raw or decayed matrix. RaterLevel and
// PairwiseScoreLevel scale each edge by its weight; ThirdPartyScoreLevel
// rebuilds each edge (i,j) as the credibility-weighted average of third-party
// direct trust placed on j. Throws when the weights do not cover the edges.
DirectTrustMatrix fcw_direct_trust(const DirectTrustMatrix& raw, const CredibilityWeights& cred);

}  // namespace trustlab
