// Row normalization of direct trust and the global-trust kernels:
// non-propagation, uniformly distributed propagation (power iteration with a
// pre-trust blend) and threshold-controlled propagation.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "trustlab/local_trust.hpp"

namespace trustlab {

// Row-stochastic form of a direct trust matrix; rows with no outgoing trust
// stay all-zero (dangling).
struct NormalizedTrustMatrix {
    std::size_t n = 0;
    std::map<std::pair<ParticipantId, ParticipantId>, double> m;

    double at(ParticipantId i, ParticipantId j) const {
        auto it = m.find({i, j});
        return it == m.end() ? 0.0 : it->second;
    }
};

struct GlobalTrustVector {
    std::vector<double> t;
    std::uint64_t iteration = 0;
    bool converged = true;
    double residual = 0.0;

    double at(ParticipantId id) const { return t.at(id); }

    // CSV rows id,score,iteration.
    void export_csv(std::ostream& out) const;
};

// 1/|P| on the pre-trusted members, 0 elsewhere; blended into every
// iteration with weight epsilon.
struct PreTrustVector {
    std::vector<double> p;
    double epsilon = 0.15;

    static PreTrustVector make(std::size_t n, const std::vector<ParticipantId>& pretrusted,
                               double epsilon = 0.15);
};

enum class KernelKind : std::uint8_t { NP, UDTP, TCTP };

enum class ThresholdPolicyKind : std::uint8_t { Fixed, Percentile, MeanNonzero };

struct ThresholdPolicy {
    ThresholdPolicyKind kind = ThresholdPolicyKind::Fixed;
    double value = 0.0;  // Fixed: the threshold; Percentile: the quantile q

    static ThresholdPolicy fixed(double v) { return {ThresholdPolicyKind::Fixed, v}; }
    static ThresholdPolicy percentile(double q) { return {ThresholdPolicyKind::Percentile, q}; }
    static ThresholdPolicy mean_nonzero() { return {ThresholdPolicyKind::MeanNonzero, 0.0}; }
};

struct KernelConfig {
    KernelKind kind = KernelKind::UDTP;
    ThresholdPolicy threshold;  // TCTP only
    double tol = 1e-9;
    std::uint64_t max_iter = 200;
};

NormalizedTrustMatrix normalize(const DirectTrustMatrix& s);

// Iterates T <- (1-eps) * (M^T T + dangling_mass * P) + eps * P from T = P
// until the L1 change drops below tol; the dangling redistribution keeps the
// output summing to 1 for eps > 0. A run that hits max_iter comes back with
// converged = false and the final residual.
GlobalTrustVector power_iterate(const NormalizedTrustMatrix& m, const PreTrustVector& pre,
                                const KernelConfig& cfg);

// Threshold for TCTP filtering: the fixed constant, the q-quantile of the
// nonzero entries, or their mean. Data-driven policies throw on an edgeless
// matrix.
double resolve_threshold(const DirectTrustMatrix& s, const ThresholdPolicy& policy);

// Keeps entries strictly above tau, drops the rest.
DirectTrustMatrix tctp_filter(const DirectTrustMatrix& s, double tau);

// Credibility-weighted mean of the direct trust placed on j by its raters;
// plain mean under uniform weights, cold-start 0.5 when j has no raters.
double one_hop_aggregate(const DirectTrustMatrix& s, const CredibilityWeights& recommendations,
                         ParticipantId j);

}  // namespace trustlab
