// Assembles local trust rules, credibility modes and propagation kernels
// into the six aggregation-model classes and the eight reference metrics.

#pragma once

#include <set>
#include <string>
#include <vector>

#include "trustlab/propagation.hpp"

namespace trustlab {

enum class Taxonomy : std::uint8_t { RNP, CNP, RUDP, CUDP, RTCP, CTCP, Random };

enum class LocalRule : std::uint8_t { SuccessRatio, BetaExpectation, Decayed };

enum class Credibility : std::uint8_t { None, RaterLevel, PairwiseSim, ThirdPartySim };

const char* to_string(Taxonomy t);
const char* to_string(LocalRule r);
const char* to_string(Credibility c);

enum class InitialTrust : std::uint8_t { PreTrust, Constant };

struct MetricExtras {
    double theta = 0.05;        // success-ratio failure tolerance
    double base_rate = 0.5;     // beta-expectation prior weight
    double decay_a = 1.0;       // decayed-rule base
    bool amend_on_bad_service = false;
    InitialTrust initial = InitialTrust::PreTrust;
    double initial_score = 0.5;  // Constant mode
};

struct TrustMetricSpec {
    std::string name;
    Taxonomy taxonomy = Taxonomy::Random;
    LocalRule local_rule = LocalRule::SuccessRatio;
    Credibility credibility = Credibility::None;
    KernelConfig kernel;
    MetricExtras extras;

    // Enforces taxonomy consistency: R* <=> credibility None, C* <=> weighted;
    // *NP/*UDP/*TCP <=> NP/UDTP/TCTP kernel. Throws on violation.
    void validate() const;
};

struct MetricState {
    TrustMetricSpec spec;
    PreTrustVector pre;
    GlobalTrustVector trust;
    std::set<ParticipantId> amended;  // pinned to zero for the rest of the run
};

// The eight reference configurations used by the experiment suites.
std::vector<TrustMetricSpec> builtin_metrics();
TrustMetricSpec find_metric(const std::string& name);

MetricState initial_state(const TrustMetricSpec& spec, std::size_t n,
                          const std::vector<ParticipantId>& pretrusted, double epsilon = 0.15);

// Recomputes the global trust vector from the ledger along the spec's
// pipeline (local rule -> credibility weighting -> kernel), then applies the
// amended pins. Credibility that depends on global trust reads the incoming
// state's vector.
MetricState evaluate(const MetricState& state, const InteractionLedger& ledger);

// Pins the offender's trust to zero for the rest of the run. Only metrics
// with the amend flag support this.
MetricState amend_on_bad_service(const MetricState& state, ParticipantId offender);

// Raw direct-trust matrix under the given local rule. Failure-dominated
// pairs carry no edge under the success-ratio rule.
DirectTrustMatrix build_direct_matrix(const InteractionLedger& ledger, std::size_t n,
                                      LocalRule rule, const MetricExtras& extras);

// Internal pipeline entry, exposed for the degeneracy checks in tests
// (credibility None through the UDTP path equals the RUDP path bit for bit).
GlobalTrustVector evaluate_pipeline(const TrustMetricSpec& spec, const InteractionLedger& ledger,
                                    const PreTrustVector& pre, const std::vector<double>& prev_trust);

}  // namespace trustlab
