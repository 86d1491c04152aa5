#include "trustlab/attack_analysis.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "trustlab/local_trust.hpp"

namespace trustlab {

namespace {

double ingredient_sum(const InteractionLedger& ledger, const GlobalTrustVector& trust,
                      const NormalizedTrustMatrix& m, ParticipantId target, bool honest) {
    double sum = 0.0;
    for (const auto& e : ledger.events()) {
        if (e.ratee != target) continue;
        const bool is_honest = e.tag == HonestyTag::Honest;
        if (is_honest != honest) continue;
        sum += m.at(e.rater, target) * trust.at(e.rater);
    }
    return sum;
}

}  // namespace

double trust_ingredient(const InteractionLedger& ledger, const GlobalTrustVector& trust,
                        const NormalizedTrustMatrix& m, ParticipantId target) {
    return ingredient_sum(ledger, trust, m, target, true);
}

double distrust_ingredient(const InteractionLedger& ledger, const GlobalTrustVector& trust,
                           const NormalizedTrustMatrix& m, ParticipantId target) {
    return ingredient_sum(ledger, trust, m, target, false);
}

IngredientBreakdown ingredient_breakdown(const InteractionLedger& ledger,
                                         const GlobalTrustVector& trust,
                                         const NormalizedTrustMatrix& m, ParticipantId target) {
    return {target, trust_ingredient(ledger, trust, m, target),
            distrust_ingredient(ledger, trust, m, target)};
}

AttackSuccess attack_success_ratio(const IngredientBreakdown& b) {
    AttackSuccess result;
    if (b.trust_ingredient > 0.0) {
        result.kind = AttackSuccess::Kind::Finite;
        result.ratio = b.distrust_ingredient / b.trust_ingredient;
    } else if (b.distrust_ingredient > 0.0) {
        result.kind = AttackSuccess::Kind::Infinite;
    } else {
        result.kind = AttackSuccess::Kind::Undefined;
    }
    return result;
}

namespace {

std::uint64_t floor_plus_one(double x) {
    if (!(x >= 0.0) || !std::isfinite(x))
        throw std::invalid_argument("closed form produced a non-finite count");
    return static_cast<std::uint64_t>(std::floor(x)) + 1;
}

void require(bool ok, const std::string& inequality) {
    if (!ok) throw std::invalid_argument("precondition violated: " + inequality);
}

}  // namespace

AttackCostReport closed_form_cost(ThreatModel model, const CostParams& p) {
    AttackCostReport report;
    report.model = model;
    report.params = p;
    require(p.n_honest > 0.0, "n_honest > 0");

    switch (model) {
        case ThreatModel::A:
        case ThreatModel::B: {
            require(p.t_malicious > 0.0, "t_malicious > 0");
            require(p.t_good > 0.0, "t_good > 0");
            const std::uint64_t n =
                floor_plus_one(2.0 * p.n_honest * p.t_good / p.t_malicious);
            report.n_malicious = n;
            if (model == ThreatModel::A) {
                // one non-creditable rating each, straight at the target
                report.dishonest_ratings = n;
            } else {
                // plus one positive rating to each chain partner
                report.dishonest_ratings = 2 * n;
            }
            report.total_ratings = report.dishonest_ratings;
            report.raw_total_ratings = static_cast<double>(report.total_ratings);
            break;
        }
        case ThreatModel::C: {
            require(p.services > 0.0, "services > 0");
            const std::uint64_t n = floor_plus_one(3.0 * p.n_honest / p.services);
            report.n_malicious = n;
            report.authentic_services = static_cast<std::uint64_t>(p.services);
            report.dishonest_ratings = 2 * n;  // target plus chain partner
            report.total_ratings = report.dishonest_ratings;
            report.raw_total_ratings = static_cast<double>(report.total_ratings);
            break;
        }
        case ThreatModel::D: {
            require(p.services > 0.0, "services > 0");
            require(p.n_type_b > 0, "n_type_b > 0");
            const std::uint64_t n = floor_plus_one(3.0 * p.n_honest / (2.0 * p.services));
            report.n_malicious = n;
            report.n_type_b = p.n_type_b;
            report.authentic_services = n * static_cast<std::uint64_t>(p.services);
            report.dishonest_ratings = n * p.n_type_b + n + p.n_type_b;
            report.total_ratings = report.dishonest_ratings;
            report.raw_total_ratings = static_cast<double>(report.total_ratings);
            break;
        }
        case ThreatModel::E: {
            require(p.services > 0.0, "services > 0");
            require(p.eta > 0.0 && p.eta < 1.0, "0 < eta < 1");
            require(p.services > 3.0 * p.n_honest * p.eta, "services > 3 * n_honest * eta");
            const double inner = 1.0 - 3.0 * p.n_honest * p.eta / p.services;
            const double exponent = std::log(inner) / std::log(1.0 - p.eta);
            const std::uint64_t n = floor_plus_one(exponent);
            report.n_malicious = n;
            report.authentic_services = static_cast<std::uint64_t>(p.services);
            report.dishonest_ratings = 2 * n;  // target plus chain partner
            report.raw_total_ratings = 2.0 * static_cast<double>(n) / (1.0 - p.eta);
            report.raw_honest_ratings =
                2.0 * p.eta * static_cast<double>(n) / (1.0 - p.eta);
            report.total_ratings = floor_plus_one(report.raw_total_ratings);
            report.honest_ratings = floor_plus_one(report.raw_honest_ratings);
            break;
        }
        case ThreatModel::F: {
            require(p.services > 0.0, "services > 0");
            require(p.n_type_b > 0, "n_type_b > 0");
            require(p.gamma > 0.0 && p.gamma < 1.0, "0 < gamma < 1");
            const std::uint64_t n =
                floor_plus_one(3.0 * p.n_honest / ((2.0 - p.gamma) * p.services));
            report.n_malicious = n;
            report.n_type_b = p.n_type_b;
            report.authentic_services = n * static_cast<std::uint64_t>(p.services);
            report.dishonest_ratings = n * p.n_type_b + n + p.n_type_b;
            const double n_real = static_cast<double>(n);
            report.raw_total_ratings =
                n_real * (1.0 + static_cast<double>(p.n_type_b)) / (1.0 - p.gamma);
            report.raw_honest_ratings =
                n_real * (1.0 + static_cast<double>(p.n_type_b)) * p.gamma / (1.0 - p.gamma);
            report.total_ratings = floor_plus_one(report.raw_total_ratings);
            report.honest_ratings = floor_plus_one(report.raw_honest_ratings);
            break;
        }
    }
    return report;
}

namespace {

// Idealized one-shot scenario: the target is id 0, honest raters follow,
// attackers last. Every rater rates the target exactly once; direct trust is
// the beta expectation of that single transaction, substituted for the
// normalized entry the way the derivations do.
struct Scenario {
    InteractionLedger ledger;
    GlobalTrustVector trust;
    NormalizedTrustMatrix m;
};

Scenario build_scenario(const CostParams& p, const std::vector<double>& attacker_trust,
                        HonestyTag attacker_tag) {
    Scenario sc;
    const auto n_honest = static_cast<std::uint64_t>(p.n_honest);
    const std::size_t n_total = 1 + n_honest + attacker_trust.size();
    sc.trust.t.assign(n_total, 0.0);
    sc.m.n = n_total;

    const double honest_edge = beta_expectation_trust(1, 0);
    const double attack_edge = beta_expectation_trust(0, 1);

    ParticipantId next = 1;
    for (std::uint64_t i = 0; i < n_honest; ++i, ++next) {
        sc.ledger.record_transaction(
            {next, 0, 0, 1.0, ServiceOutcome::Authentic, HonestyTag::Honest});
        sc.trust.t[next] = p.t_good;
        sc.m.m[{next, 0}] = honest_edge;
    }
    for (double t : attacker_trust) {
        sc.ledger.record_transaction(
            {next, 0, 0, 0.0, ServiceOutcome::Authentic, attacker_tag});
        sc.trust.t[next] = t;
        sc.m.m[{next, 0}] = attack_edge;
        ++next;
    }
    return sc;
}

// Per-attacker trust in the idealized setting, for a population of size n.
std::vector<double> attacker_trusts(ThreatModel model, const CostParams& p, std::uint64_t n) {
    std::vector<double> trusts;
    const double earned = p.services * beta_expectation_trust(1, 0) * p.t_good;
    switch (model) {
        case ThreatModel::A:
        case ThreatModel::B:
            trusts.assign(n, p.t_malicious);
            break;
        case ThreatModel::C:
            // the chain replicates the one earner's ingredient to everyone
            trusts.assign(n, earned);
            break;
        case ThreatModel::E: {
            // honest ratings leak a share eta of the ingredient at each hop
            double value = earned;
            for (std::uint64_t i = 0; i < n; ++i) {
                trusts.push_back(value);
                value *= 1.0 - p.eta;
            }
            break;
        }
        case ThreatModel::D:
        case ThreatModel::F: {
            // n Type-D earners plus n_type_b bridges sharing the leaked trust
            const double keep = model == ThreatModel::F ? 1.0 - p.gamma : 1.0;
            trusts.assign(n, earned);
            const double bridge =
                static_cast<double>(n) / static_cast<double>(p.n_type_b) * keep * earned;
            trusts.insert(trusts.end(), p.n_type_b, bridge);
            break;
        }
    }
    return trusts;
}

double scenario_ratio(ThreatModel model, const CostParams& p, std::uint64_t n) {
    if (n == 0) return 0.0;
    const HonestyTag tag =
        model == ThreatModel::A ? HonestyTag::NonCreditable : HonestyTag::Dishonest;
    const Scenario sc = build_scenario(p, attacker_trusts(model, p, n), tag);
    const auto breakdown = ingredient_breakdown(sc.ledger, sc.trust, sc.m, 0);
    const auto as = attack_success_ratio(breakdown);
    if (as.kind == AttackSuccess::Kind::Infinite)
        throw std::logic_error("idealized scenario lost its trust ingredient");
    return as.kind == AttackSuccess::Kind::Finite ? as.ratio : 0.0;
}

}  // namespace

OracleResult verify_cost_oracle(ThreatModel model, const CostParams& params) {
    const AttackCostReport cost = closed_form_cost(model, params);
    OracleResult result;
    result.as_at_count = scenario_ratio(model, params, cost.n_malicious);
    result.as_below_count = scenario_ratio(model, params, cost.n_malicious - 1);
    // count-1 can sit exactly on the As = 1 boundary; allow only for summation
    // rounding there (the margin at the count itself is always macroscopic)
    result.confirmed =
        result.as_at_count > 1.0 && result.as_below_count <= 1.0 + 1e-9;
    if (!result.confirmed) {
        std::ostringstream detail;
        detail << "model " << to_string(model) << ": As(" << cost.n_malicious
               << ") = " << result.as_at_count << ", As(" << cost.n_malicious - 1
               << ") = " << result.as_below_count;
        result.detail = detail.str();
    }
    return result;
}

}  // namespace trustlab
