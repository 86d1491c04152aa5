#include "trustlab/simulation.hpp"

#include <algorithm>
#include <stdexcept>

namespace trustlab {

void SimulationConfig::validate() const {
    if (n_pretrusted > n_good)
        throw std::invalid_argument("more pre-trusted than good participants");
    if (transactions < 1) throw std::invalid_argument("transactions must be >= 1");
    if (explore_p < 0.0 || explore_p > 1.0)
        throw std::invalid_argument("explore_p outside [0,1]");
    if (responders_k < 1) throw std::invalid_argument("responders_k must be >= 1");
    if (reeval_every < 1) throw std::invalid_argument("reeval_every must be >= 1");
    if (population() < 2) throw std::invalid_argument("need at least two participants");
    threat.validate(n_malicious);
}

const std::vector<double>& ExperimentReport::final_trust() const {
    if (trust_rounds.empty())
        throw std::logic_error("no evaluation round was run");
    return trust_rounds.back();
}

std::uint64_t fnv1a64(const std::string& text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

double draw_u01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

namespace {

std::size_t draw_index(std::mt19937_64& rng, std::size_t n) {
    auto idx = static_cast<std::size_t>(draw_u01(rng) * static_cast<double>(n));
    return idx >= n ? n - 1 : idx;
}

std::vector<ParticipantId> draw_candidates(std::mt19937_64& rng, std::uint32_t n,
                                           ParticipantId client, std::uint32_t k) {
    std::vector<ParticipantId> out;
    if (n <= 1) return out;
    if (k >= n - 1) {
        for (ParticipantId id = 0; id < n; ++id)
            if (id != client) out.push_back(id);
        return out;
    }
    out.reserve(k);
    while (out.size() < k) {
        auto id = static_cast<ParticipantId>(draw_index(rng, n));
        if (id == client) continue;
        if (std::find(out.begin(), out.end(), id) != out.end()) continue;
        out.push_back(id);
    }
    return out;
}

}  // namespace

ParticipantId select_server(const std::vector<ParticipantId>& candidates,
                            const std::vector<double>& trust, double explore_p,
                            double explore_draw, double pick_draw) {
    if (candidates.empty()) throw std::invalid_argument("no candidates to select from");
    if (explore_draw < explore_p) {
        auto idx = static_cast<std::size_t>(pick_draw * static_cast<double>(candidates.size()));
        if (idx >= candidates.size()) idx = candidates.size() - 1;
        return candidates[idx];
    }
    double total = 0.0;
    for (ParticipantId c : candidates) total += trust.at(c);
    if (total <= 0.0) {
        auto idx = static_cast<std::size_t>(pick_draw * static_cast<double>(candidates.size()));
        if (idx >= candidates.size()) idx = candidates.size() - 1;
        return candidates[idx];
    }
    double mark = pick_draw * total;
    for (ParticipantId c : candidates) {
        mark -= trust.at(c);
        if (mark < 0.0) return c;
    }
    return candidates.back();
}

ExperimentReport run_experiment(const SimulationConfig& cfg) {
    cfg.validate();
    const std::uint32_t n = cfg.population();

    TrustMetricSpec spec = find_metric(cfg.metric);

    ThreatModelConfig threat = cfg.threat;
    if ((threat.model == ThreatModel::B || threat.model == ThreatModel::C ||
         threat.model == ThreatModel::E) &&
        threat.chain.empty()) {
        for (std::uint32_t k = 0; k < cfg.n_malicious; ++k)
            threat.chain.push_back(cfg.n_good + k);
    }
    threat.validate(cfg.n_malicious);

    const auto profiles = assign_profiles(cfg.n_good, cfg.n_malicious, threat, cfg.good_noise);

    std::vector<ParticipantId> pretrusted;
    for (std::uint32_t i = 0; i < cfg.n_pretrusted; ++i) pretrusted.push_back(i);

    MetricState state = initial_state(spec, n, pretrusted, cfg.epsilon);

    ExperimentReport report;
    report.config = cfg;

    std::mt19937_64 schedule_rng(cfg.seed);
    std::mt19937_64 decision_rng(cfg.seed ^ fnv1a64(cfg.metric));

    std::uint64_t failed_total = 0;
    std::uint64_t failed_window = 0;
    std::uint64_t window_size = 0;

    for (std::uint64_t t = 0; t < cfg.transactions; ++t) {
        const auto client = static_cast<ParticipantId>(draw_index(schedule_rng, n));
        const auto candidates = draw_candidates(schedule_rng, n, client, cfg.responders_k);

        const double explore_draw = draw_u01(decision_rng);
        const double pick_draw = draw_u01(decision_rng);
        const ParticipantId server =
            select_server(candidates, state.trust.t, cfg.explore_p, explore_draw, pick_draw);

        const double service_draw = draw_u01(decision_rng);
        const ServiceOutcome outcome = decide_service(profiles[server], threat, service_draw);

        const double coin_draw = draw_u01(decision_rng);
        const double noise_draw = draw_u01(decision_rng);
        const RatingDecision rating =
            decide_rating(profiles[client], profiles[server], outcome, threat, coin_draw,
                          noise_draw);

        report.ledger.record_transaction(
            {client, server, t, rating.value, outcome, rating.tag});

        auto& group = server < cfg.n_good ? report.good_services : report.malicious_services;
        if (outcome == ServiceOutcome::Authentic) {
            ++group.authentic;
        } else {
            ++group.inauthentic;
            ++failed_total;
            ++failed_window;
        }
        ++window_size;

        if (spec.extras.amend_on_bad_service && outcome == ServiceOutcome::Inauthentic)
            state = amend_on_bad_service(state, server);

        if ((t + 1) % cfg.reeval_every == 0) {
            state = evaluate(state, report.ledger);
            report.trust_rounds.push_back(state.trust.t);
            report.round_converged.push_back(state.trust.converged);
            report.round_failed.push_back(static_cast<double>(failed_window) /
                                          static_cast<double>(window_size));
            failed_window = 0;
            window_size = 0;
        }
    }

    report.failed_fraction =
        static_cast<double>(failed_total) / static_cast<double>(cfg.transactions);
    return report;
}

std::vector<double> trust_trajectory(const ExperimentReport& report, ParticipantId id) {
    if (id >= report.config.population())
        throw std::invalid_argument("unknown participant " + std::to_string(id));
    std::vector<double> series;
    series.reserve(report.trust_rounds.size());
    for (const auto& round : report.trust_rounds) series.push_back(round[id]);
    return series;
}

std::vector<double> mean_trajectory(const ExperimentReport& report,
                                    const std::vector<ParticipantId>& ids) {
    if (ids.empty()) throw std::invalid_argument("empty participant set");
    std::vector<double> series(report.trust_rounds.size(), 0.0);
    for (std::size_t r = 0; r < report.trust_rounds.size(); ++r) {
        double sum = 0.0;
        for (ParticipantId id : ids) {
            if (id >= report.config.population())
                throw std::invalid_argument("unknown participant " + std::to_string(id));
            sum += report.trust_rounds[r][id];
        }
        series[r] = sum / static_cast<double>(ids.size());
    }
    return series;
}

}  // namespace trustlab
