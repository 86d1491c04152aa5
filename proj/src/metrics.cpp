#include "trustlab/metrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace trustlab {

const char* to_string(Taxonomy t) {
    switch (t) {
        case Taxonomy::RNP: return "RNP";
        case Taxonomy::CNP: return "CNP";
        case Taxonomy::RUDP: return "RUDP";
        case Taxonomy::CUDP: return "CUDP";
        case Taxonomy::RTCP: return "RTCP";
        case Taxonomy::CTCP: return "CTCP";
        case Taxonomy::Random: return "Random";
    }
    return "?";
}

const char* to_string(LocalRule r) {
    switch (r) {
        case LocalRule::SuccessRatio: return "success_ratio";
        case LocalRule::BetaExpectation: return "beta_expectation";
        case LocalRule::Decayed: return "decayed";
    }
    return "?";
}

const char* to_string(Credibility c) {
    switch (c) {
        case Credibility::None: return "none";
        case Credibility::RaterLevel: return "rater_level";
        case Credibility::PairwiseSim: return "pairwise_sim";
        case Credibility::ThirdPartySim: return "third_party_sim";
    }
    return "?";
}

void TrustMetricSpec::validate() const {
    if (taxonomy == Taxonomy::Random) {
        if (credibility != Credibility::None)
            throw std::invalid_argument(name + ": random metric takes no credibility");
        return;
    }
    const bool weighted = credibility != Credibility::None;
    const bool c_class = taxonomy == Taxonomy::CNP || taxonomy == Taxonomy::CUDP ||
                         taxonomy == Taxonomy::CTCP;
    if (weighted != c_class)
        throw std::invalid_argument(name + ": credibility inconsistent with taxonomy class");
    KernelKind expected = KernelKind::NP;
    switch (taxonomy) {
        case Taxonomy::RNP:
        case Taxonomy::CNP: expected = KernelKind::NP; break;
        case Taxonomy::RUDP:
        case Taxonomy::CUDP: expected = KernelKind::UDTP; break;
        case Taxonomy::RTCP:
        case Taxonomy::CTCP: expected = KernelKind::TCTP; break;
        case Taxonomy::Random: break;
    }
    if (kernel.kind != expected)
        throw std::invalid_argument(name + ": kernel inconsistent with taxonomy class");
}

std::vector<TrustMetricSpec> builtin_metrics() {
    std::vector<TrustMetricSpec> roster;

    TrustMetricSpec none;
    none.name = "NoneTrust";
    none.taxonomy = Taxonomy::Random;
    roster.push_back(none);

    TrustMetricSpec beta;
    beta.name = "BetaTrust";
    beta.taxonomy = Taxonomy::RNP;
    beta.local_rule = LocalRule::BetaExpectation;
    beta.kernel.kind = KernelKind::NP;
    beta.extras.base_rate = 0.5;
    beta.extras.initial = InitialTrust::Constant;
    roster.push_back(beta);

    TrustMetricSpec adaptive;
    adaptive.name = "AdaptiveTrust";
    adaptive.taxonomy = Taxonomy::RTCP;
    adaptive.local_rule = LocalRule::SuccessRatio;
    adaptive.kernel.kind = KernelKind::TCTP;
    adaptive.kernel.threshold = ThresholdPolicy::fixed(0.5);  // minimal honesty trust
    adaptive.extras.amend_on_bad_service = true;
    adaptive.extras.initial = InitialTrust::Constant;
    adaptive.extras.initial_score = 0.5;
    roster.push_back(adaptive);

    TrustMetricSpec eigen;
    eigen.name = "EigenTrust";
    eigen.taxonomy = Taxonomy::RUDP;
    eigen.local_rule = LocalRule::SuccessRatio;
    eigen.kernel.kind = KernelKind::UDTP;
    roster.push_back(eigen);

    TrustMetricSpec tvm;
    tvm.name = "PeerTrustTVM";
    tvm.taxonomy = Taxonomy::CUDP;
    tvm.local_rule = LocalRule::SuccessRatio;
    tvm.credibility = Credibility::RaterLevel;
    tvm.kernel.kind = KernelKind::UDTP;
    roster.push_back(tvm);

    TrustMetricSpec psm;
    psm.name = "PeerTrustPSM";
    psm.taxonomy = Taxonomy::CNP;
    psm.local_rule = LocalRule::SuccessRatio;
    psm.credibility = Credibility::ThirdPartySim;
    psm.kernel.kind = KernelKind::NP;
    roster.push_back(psm);

    TrustMetricSpec service;
    service.name = "ServiceTrust";
    service.taxonomy = Taxonomy::CUDP;
    service.local_rule = LocalRule::SuccessRatio;
    service.credibility = Credibility::PairwiseSim;
    service.kernel.kind = KernelKind::UDTP;
    roster.push_back(service);

    TrustMetricSpec service_pp;
    service_pp.name = "ServiceTrust++";
    service_pp.taxonomy = Taxonomy::CTCP;
    service_pp.local_rule = LocalRule::SuccessRatio;
    service_pp.credibility = Credibility::PairwiseSim;
    service_pp.kernel.kind = KernelKind::TCTP;
    // sits above the stranger-credibility band, so only edges backed by
    // genuine similarity evidence may carry propagation
    service_pp.kernel.threshold = ThresholdPolicy::fixed(0.25);
    roster.push_back(service_pp);

    for (const auto& spec : roster) spec.validate();
    return roster;
}

TrustMetricSpec find_metric(const std::string& name) {
    for (auto& spec : builtin_metrics())
        if (spec.name == name) return spec;
    throw std::invalid_argument("unknown metric: " + name);
}

MetricState initial_state(const TrustMetricSpec& spec, std::size_t n,
                          const std::vector<ParticipantId>& pretrusted, double epsilon) {
    spec.validate();
    MetricState state;
    state.spec = spec;
    state.pre = PreTrustVector::make(n, pretrusted, epsilon);
    state.trust.iteration = 0;
    if (spec.taxonomy == Taxonomy::Random) {
        state.trust.t.assign(n, 1.0 / static_cast<double>(n));
    } else if (spec.extras.initial == InitialTrust::Constant) {
        state.trust.t.assign(n, spec.extras.initial_score);
    } else {
        state.trust.t = state.pre.p;
    }
    return state;
}

DirectTrustMatrix build_direct_matrix(const InteractionLedger& ledger, std::size_t n,
                                      LocalRule rule, const MetricExtras& extras) {
    DirectTrustMatrix raw;
    raw.n = n;
    raw.variant = rule == LocalRule::Decayed ? MatrixVariant::Decayed : MatrixVariant::Raw;
    for (const auto& [pair, counts] : ledger.counts()) {
        double value = 0.0;
        switch (rule) {
            case LocalRule::SuccessRatio:
                value = success_ratio_edge(counts.satisfied, counts.unsatisfied, extras.theta);
                break;
            case LocalRule::BetaExpectation:
                value = beta_expectation_trust(counts.satisfied, counts.unsatisfied,
                                               extras.base_rate);
                break;
            case LocalRule::Decayed:
                value = decayed_direct_trust(ledger, pair.first, pair.second, extras.decay_a)
                            .value_or(0.0);
                break;
        }
        if (value > 0.0) raw.set(pair.first, pair.second, value);
    }
    return raw;
}

namespace {

// Stranger prior for the pairwise-credibility pipeline: pairs with fewer
// than two commonly rated targets have no usable similarity evidence and
// get a flat low credibility instead of the computed one. Keeping the prior
// below any threshold the TCTP metrics resolve lets the threshold kernel
// cut every evidence-free edge while the plain UDTP metrics still bootstrap
// through them.
constexpr std::size_t kMinCommonTargets = 2;
const double kStrangerCredibility = exp_credibility(0.4);

double pairwise_credibility(const SimilarityCache& sims, ParticipantId rater,
                            ParticipantId ratee) {
    if (sims.common_targets(rater, ratee) < kMinCommonTargets) return kStrangerCredibility;
    return exp_credibility(sims.similarity(rater, ratee));
}

// Raters of every target, taken from the ledger (transacted pairs), not
// from the nonzero edge set.
std::vector<std::vector<ParticipantId>> raters_by_target(const InteractionLedger& ledger,
                                                         std::size_t n) {
    std::vector<std::vector<ParticipantId>> raters(n);
    for (const auto& [pair, counts] : ledger.counts()) {
        (void)counts;
        if (pair.second < n) raters[pair.second].push_back(pair.first);
    }
    return raters;
}

DirectTrustMatrix apply_credibility(const TrustMetricSpec& spec, const InteractionLedger& ledger,
                                    const DirectTrustMatrix& raw,
                                    const std::vector<double>& prev_trust) {
    if (spec.credibility == Credibility::None) return raw;
    DirectTrustMatrix out;
    out.n = raw.n;
    out.variant = MatrixVariant::Fcw;
    switch (spec.credibility) {
        case Credibility::RaterLevel: {
            // Self-trust share among each target's raters.
            const auto raters = raters_by_target(ledger, raw.n);
            std::map<ParticipantId, CredibilityWeights> per_target;
            for (const auto& [pair, value] : raw.s) {
                const ParticipantId j = pair.second;
                auto it = per_target.find(j);
                if (it == per_target.end())
                    it = per_target.emplace(j, rater_level_credibility(prev_trust, raters[j]))
                             .first;
                const auto& weights = it->second.by_rater;
                auto w = weights.find(pair.first);
                const double weighted = (w == weights.end() ? 0.0 : w->second) * value;
                if (weighted > 0.0) out.s[pair] = weighted;
            }
            break;
        }
        case Credibility::PairwiseSim: {
            SimilarityCache sims(ledger);
            for (const auto& [pair, value] : raw.s) {
                const double weighted =
                    pairwise_credibility(sims, pair.first, pair.second) * value;
                if (weighted > 0.0) out.s[pair] = weighted;
            }
            break;
        }
        case Credibility::ThirdPartySim: {
            // Each edge becomes the similarity-credibility-weighted average of
            // third-party direct trust in the target.
            SimilarityCache sims(ledger);
            const auto raters = raters_by_target(ledger, raw.n);
            for (const auto& [pair, value] : raw.s) {
                (void)value;
                const ParticipantId i = pair.first;
                const ParticipantId j = pair.second;
                double denom = 0.0;
                for (ParticipantId m : raters[j])
                    if (m != i) denom += sims.similarity(i, m);
                double estimate = 0.0;
                if (denom > 0.0) {
                    for (ParticipantId k : raters[j]) {
                        if (k == i) continue;
                        estimate += sims.similarity(i, k) / denom * raw.at(k, j);
                    }
                }
                if (estimate > 0.0) out.s[pair] = std::min(estimate, 1.0);
            }
            break;
        }
        case Credibility::None:
            break;
    }
    return out;
}

// Non-propagation score for one target: the credibility-weighted mean of
// the direct trust placed on it.
std::vector<double> np_scores(const TrustMetricSpec& spec, const InteractionLedger& ledger,
                              const DirectTrustMatrix& raw,
                              const std::vector<double>& prev_trust) {
    const std::size_t n = raw.n;
    const auto raters = raters_by_target(ledger, n);
    std::vector<double> scores(n, 0.0);

    if (spec.credibility == Credibility::ThirdPartySim) {
        // Viewpoint estimates through third-party raters, averaged with the
        // viewpoints' current trust as weights. A viewpoint set with no trust
        // contributes nothing.
        SimilarityCache sims(ledger);
        for (ParticipantId j = 0; j < n; ++j) {
            // no raters means an empty aggregation sum, not the beta prior
            if (raters[j].empty()) continue;
            double trust_sum = 0.0;
            double blended = 0.0;
            for (ParticipantId i : raters[j]) {
                const double weight = prev_trust[i];
                if (weight <= 0.0) continue;
                double denom = 0.0;
                for (ParticipantId m : raters[j])
                    if (m != i) denom += sims.similarity(i, m);
                double estimate = 0.0;
                if (denom > 0.0) {
                    for (ParticipantId k : raters[j]) {
                        if (k == i) continue;
                        estimate += sims.similarity(i, k) / denom * raw.at(k, j);
                    }
                }
                blended += weight * estimate;
                trust_sum += weight;
            }
            scores[j] = trust_sum > 0.0 ? blended / trust_sum : 0.0;
        }
        return scores;
    }

    for (ParticipantId j = 0; j < n; ++j) {
        if (raters[j].empty()) {
            scores[j] = 0.5;
            continue;
        }
        CredibilityWeights weights;
        if (spec.credibility == Credibility::RaterLevel)
            weights = rater_level_credibility(prev_trust, raters[j]);
        double weighted = 0.0;
        double weight_sum = 0.0;
        for (ParticipantId i : raters[j]) {
            const double w = spec.credibility == Credibility::RaterLevel
                                 ? weights.by_rater.at(i)
                                 : 1.0;
            weighted += w * raw.at(i, j);
            weight_sum += w;
        }
        scores[j] = weight_sum > 0.0 ? weighted / weight_sum : 0.0;
    }
    return scores;
}

}  // namespace

GlobalTrustVector evaluate_pipeline(const TrustMetricSpec& spec, const InteractionLedger& ledger,
                                    const PreTrustVector& pre,
                                    const std::vector<double>& prev_trust) {
    const std::size_t n = pre.p.size();
    GlobalTrustVector result;

    if (spec.taxonomy == Taxonomy::Random) {
        result.t.assign(n, 1.0 / static_cast<double>(n));
        return result;
    }

    const DirectTrustMatrix raw = build_direct_matrix(ledger, n, spec.local_rule, spec.extras);

    if (spec.kernel.kind == KernelKind::NP) {
        result.t = np_scores(spec, ledger, raw, prev_trust);
        result.iteration = 1;
        return result;
    }

    DirectTrustMatrix weighted = apply_credibility(spec, ledger, raw, prev_trust);
    if (spec.kernel.kind == KernelKind::TCTP && !weighted.s.empty()) {
        const double tau = resolve_threshold(weighted, spec.kernel.threshold);
        weighted = tctp_filter(weighted, tau);
    }
    return power_iterate(normalize(weighted), pre, spec.kernel);
}

MetricState evaluate(const MetricState& state, const InteractionLedger& ledger) {
    MetricState next = state;
    next.trust = evaluate_pipeline(state.spec, ledger, state.pre, state.trust.t);
    for (ParticipantId id : next.amended)
        if (id < next.trust.t.size()) next.trust.t[id] = 0.0;
    return next;
}

MetricState amend_on_bad_service(const MetricState& state, ParticipantId offender) {
    if (!state.spec.extras.amend_on_bad_service)
        throw std::logic_error(state.spec.name + " does not support amending");
    MetricState next = state;
    next.amended.insert(offender);
    if (offender < next.trust.t.size()) next.trust.t[offender] = 0.0;
    return next;
}

}  // namespace trustlab
