// Trust/distrust ingredients, the attack success ratio, the closed-form
// attack costs of the six threat models, and an independent scenario
// verifier for the closed forms.

#pragma once

#include <cstdint>
#include <string>

#include "trustlab/propagation.hpp"
#include "trustlab/threats.hpp"

namespace trustlab {

struct IngredientBreakdown {
    ParticipantId target = 0;
    double trust_ingredient = 0.0;
    double distrust_ingredient = 0.0;
};

// Sum of m(w,target) * T(w) over the honest-tagged rating events the target
// received. Each event contributes once.
double trust_ingredient(const InteractionLedger& ledger, const GlobalTrustVector& trust,
                        const NormalizedTrustMatrix& m, ParticipantId target);

// Same sum over the dishonest and non-creditable events.
double distrust_ingredient(const InteractionLedger& ledger, const GlobalTrustVector& trust,
                           const NormalizedTrustMatrix& m, ParticipantId target);

IngredientBreakdown ingredient_breakdown(const InteractionLedger& ledger,
                                         const GlobalTrustVector& trust,
                                         const NormalizedTrustMatrix& m, ParticipantId target);

struct AttackSuccess {
    enum class Kind : std::uint8_t { Finite, Infinite, Undefined };
    Kind kind = Kind::Undefined;
    double ratio = 0.0;  // valid for Finite

    bool successful() const { return kind == Kind::Infinite || ratio > 1.0; }
};

// Distrust over trust ingredient; Infinite when only distrust exists,
// Undefined when the target received nothing at all.
AttackSuccess attack_success_ratio(const IngredientBreakdown& b);

struct CostParams {
    double n_honest = 0.0;       // honest raters of the target
    double services = 0.0;       // authentic services per camouflage/Type-D member
    double t_good = 0.0;         // network-level average trust of good participants
    double t_malicious = 0.0;    // network-level average trust of mischievous participants
    double eta = 0.0;
    double gamma = 0.0;
    std::uint64_t n_type_b = 0;
};

struct AttackCostReport {
    ThreatModel model = ThreatModel::A;
    std::uint64_t n_malicious = 0;  // minimal attackers (N_nH/N_dH/N_C/N_D)
    std::uint64_t n_type_b = 0;
    std::uint64_t dishonest_ratings = 0;
    std::uint64_t honest_ratings = 0;
    std::uint64_t authentic_services = 0;
    std::uint64_t total_ratings = 0;
    double raw_total_ratings = 0.0;   // pre-floor values of the rating counts
    double raw_honest_ratings = 0.0;
    CostParams params;
};

// Minimal attacker population and rating/service counts for a successful
// attack, floor-plus-one integer forms. Throws std::invalid_argument naming
// the violated precondition (for example Model E feasibility
// services > 3 * n_honest * eta).
AttackCostReport closed_form_cost(ThreatModel model, const CostParams& params);

struct OracleResult {
    bool confirmed = false;
    double as_at_count = 0.0;
    double as_below_count = 0.0;
    std::string detail;
};

// Rebuilds the idealized one-shot scenario behind each closed form (single
// transactions, binary ratings, beta-expectation direct trust, chain
// transitivity) through the ingredient machinery and checks that the attack
// succeeds at the closed-form count but not at count - 1.
OracleResult verify_cost_oracle(ThreatModel model, const CostParams& params);

}  // namespace trustlab
