#include "trustlab/threats.hpp"

#include <stdexcept>

namespace trustlab {

const char* to_string(ThreatModel m) {
    switch (m) {
        case ThreatModel::A: return "A";
        case ThreatModel::B: return "B";
        case ThreatModel::C: return "C";
        case ThreatModel::D: return "D";
        case ThreatModel::E: return "E";
        case ThreatModel::F: return "F";
    }
    return "?";
}

ThreatModel threat_model_from_string(const std::string& s) {
    if (s.size() == 1) {
        switch (s[0]) {
            case 'A': case 'a': return ThreatModel::A;
            case 'B': case 'b': return ThreatModel::B;
            case 'C': case 'c': return ThreatModel::C;
            case 'D': case 'd': return ThreatModel::D;
            case 'E': case 'e': return ThreatModel::E;
            case 'F': case 'f': return ThreatModel::F;
        }
    }
    throw std::invalid_argument("unknown threat model: " + s);
}

void ThreatModelConfig::validate(std::uint32_t n_malicious) const {
    auto probability = [](double p, const char* name) {
        if (p < 0.0 || p > 1.0)
            throw std::invalid_argument(std::string(name) + " outside [0,1]");
    };
    probability(f, "f");
    probability(eta, "eta");
    probability(gamma, "gamma");
    if (model == ThreatModel::D || model == ThreatModel::F) {
        if (n_type_b + n_type_d != n_malicious)
            throw std::invalid_argument("type split does not cover the malicious population");
    }
    // an empty chain is legal here; the simulation engine fills it with the
    // malicious population before running
    if (model == ThreatModel::B || model == ThreatModel::C || model == ThreatModel::E) {
        if (!chain.empty() && chain.size() != n_malicious)
            throw std::invalid_argument("chain does not cover the malicious population");
    }
}

std::vector<BehaviorProfile> assign_profiles(std::uint32_t n_good, std::uint32_t n_malicious,
                                             const ThreatModelConfig& cfg, double good_noise) {
    if (good_noise < 0.0 || good_noise > 1.0)
        throw std::invalid_argument("noise outside [0,1]");
    std::vector<BehaviorProfile> profiles(n_good + n_malicious);
    for (std::uint32_t i = 0; i < n_good; ++i) profiles[i] = {Role::Good, good_noise};
    for (std::uint32_t k = 0; k < n_malicious; ++k) {
        Role role = Role::IndependentMalicious;
        switch (cfg.model) {
            case ThreatModel::A: role = Role::IndependentMalicious; break;
            case ThreatModel::B: role = Role::Colluder; break;
            case ThreatModel::C:
            case ThreatModel::E: role = Role::Camouflage; break;
            case ThreatModel::D:
            case ThreatModel::F: role = k < cfg.n_type_b ? Role::TypeB : Role::TypeD; break;
        }
        profiles[n_good + k] = {role, 0.0};
    }
    return profiles;
}

ServiceOutcome decide_service(const BehaviorProfile& profile, const ThreatModelConfig& cfg,
                              double rng_draw) {
    switch (profile.role) {
        case Role::Good:
        case Role::TypeD:
            return ServiceOutcome::Authentic;
        case Role::IndependentMalicious:
        case Role::Colluder:
        case Role::TypeB:
            return ServiceOutcome::Inauthentic;
        case Role::Camouflage:
            return rng_draw < cfg.f ? ServiceOutcome::Authentic : ServiceOutcome::Inauthentic;
    }
    return ServiceOutcome::Inauthentic;
}

namespace {

RatingDecision honest_rating(ServiceOutcome outcome) {
    const double value = outcome == ServiceOutcome::Authentic ? 1.0 : 0.0;
    return {value, HonestyTag::Honest};
}

}  // namespace

RatingDecision decide_rating(const BehaviorProfile& rater, const BehaviorProfile& ratee,
                             ServiceOutcome outcome, const ThreatModelConfig& cfg,
                             double coin_draw, double noise_draw) {
    if (rater.role == Role::Good) {
        RatingDecision r = honest_rating(outcome);
        if (noise_draw < rater.noise) {
            r.value = 1.0 - r.value;  // accidental flip of the value only
            r.tag = HonestyTag::Dishonest;
        }
        return r;
    }
    if (rater.role == Role::IndependentMalicious)
        return {0.0, HonestyTag::NonCreditable};

    // Models E/F toss the honesty coin before the collusive wiring.
    if (cfg.model == ThreatModel::E && coin_draw < cfg.eta) return honest_rating(outcome);
    if (cfg.model == ThreatModel::F && coin_draw < cfg.gamma) return honest_rating(outcome);

    const bool fellow_malicious = ratee.role != Role::Good;
    return {fellow_malicious ? 1.0 : 0.0, HonestyTag::Dishonest};
}

std::vector<std::pair<ParticipantId, ParticipantId>> build_chain(
    const std::vector<ParticipantId>& malicious_ids) {
    if (malicious_ids.size() < 2)
        throw std::invalid_argument("chain needs at least two members");
    std::vector<std::pair<ParticipantId, ParticipantId>> edges;
    edges.reserve(malicious_ids.size());
    for (std::size_t i = 0; i < malicious_ids.size(); ++i)
        edges.emplace_back(malicious_ids[i], malicious_ids[(i + 1) % malicious_ids.size()]);
    return edges;
}

}  // namespace trustlab
