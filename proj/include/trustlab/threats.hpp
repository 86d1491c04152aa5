// Behavioral policies of the six adversary models and the good-participant
// baseline, as pure decision functions over explicit random draws.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trustlab/ledger.hpp"

namespace trustlab {

enum class ThreatModel : std::uint8_t { A, B, C, D, E, F };

const char* to_string(ThreatModel m);
ThreatModel threat_model_from_string(const std::string& s);

struct ThreatModelConfig {
    ThreatModel model = ThreatModel::A;
    double f = 0.0;      // camouflage service probability (C, E)
    double eta = 0.0;    // honest-rating probability (E)
    double gamma = 0.0;  // honest-rating probability (F)
    std::uint32_t n_type_b = 0;  // D, F split
    std::uint32_t n_type_d = 0;
    std::vector<ParticipantId> chain;  // malicious ids in chain order (B, C, E)

    void validate(std::uint32_t n_malicious) const;
};

enum class Role : std::uint8_t {
    Good,
    IndependentMalicious,  // model A
    Colluder,              // model B
    Camouflage,            // models C, E
    TypeB,                 // models D, F
    TypeD,                 // models D, F
};

struct BehaviorProfile {
    Role role = Role::Good;
    double noise = 0.05;  // accidental dishonest-rating probability for Good
};

// Assigns a role to every participant for the configured threat model.
// Good ids come first, malicious ids fill [n_good, n_good + n_malicious).
std::vector<BehaviorProfile> assign_profiles(std::uint32_t n_good, std::uint32_t n_malicious,
                                             const ThreatModelConfig& cfg, double good_noise);

// Service decision of a selected server. Camouflage serves authentically
// iff rng_draw < f; Type-D always serves authentically.
ServiceOutcome decide_service(const BehaviorProfile& profile, const ThreatModelConfig& cfg,
                              double rng_draw);

struct RatingDecision {
    double value = 0.0;
    HonestyTag tag = HonestyTag::Honest;
};

// Rating decision of the client after a transaction with true outcome
// `outcome`. Good raters rate honestly and flip the value with probability
// noise; model-A raters give non-creditable zeros; models B-D rate good
// ratees 0 and fellow malicious 1; models E/F first toss the honesty coin
// (eta resp. gamma) and fall back to the B/D wiring.
RatingDecision decide_rating(const BehaviorProfile& rater, const BehaviorProfile& ratee,
                             ServiceOutcome outcome, const ThreatModelConfig& cfg,
                             double coin_draw, double noise_draw);

// Ring over the malicious population: each id rates exactly its successor,
// the last wraps to the first. Throws for fewer than two ids.
std::vector<std::pair<ParticipantId, ParticipantId>> build_chain(
    const std::vector<ParticipantId>& malicious_ids);

}  // namespace trustlab
