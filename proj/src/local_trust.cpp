#include "trustlab/local_trust.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace trustlab {

void DirectTrustMatrix::set(ParticipantId i, ParticipantId j, double value) {
    if (i == j) throw std::invalid_argument("no self-trust edge");
    if (!(value >= 0.0 && value <= 1.0))
        throw std::invalid_argument("direct trust outside [0,1]");
    s[{i, j}] = value;
}

void DirectTrustMatrix::export_csv(std::ostream& out) const {
    out << "i,j,s\n";
    for (const auto& [pair, value] : s)
        out << pair.first << ',' << pair.second << ',' << value << '\n';
}

double success_ratio_trust(std::uint64_t delta, std::uint64_t sigma, double theta) {
    const double total = static_cast<double>(delta + sigma) + 1.0;
    if (static_cast<double>(sigma) / total <= theta)
        return static_cast<double>(delta) / total;
    return 0.5;
}

double success_ratio_edge(std::uint64_t delta, std::uint64_t sigma, double theta) {
    const double total = static_cast<double>(delta + sigma) + 1.0;
    if (static_cast<double>(sigma) / total <= theta)
        return static_cast<double>(delta) / total;
    return 0.0;
}

double beta_expectation_trust(std::uint64_t delta, std::uint64_t sigma) {
    return beta_expectation_trust(delta, sigma, 0.5);
}

double beta_expectation_trust(std::uint64_t delta, std::uint64_t sigma, double base_rate) {
    return (static_cast<double>(delta) + 2.0 * base_rate) /
           (static_cast<double>(delta + sigma) + 2.0);
}

std::optional<double> decayed_direct_trust(const InteractionLedger& ledger,
                                           ParticipantId i, ParticipantId j, double a) {
    if (a <= 0.0 || a > 1.0)
        throw std::invalid_argument("decay base must lie in (0,1]");
    double weighted = 0.0;
    double weight_sum = 0.0;
    for (const auto& e : ledger.events()) {
        if (e.rater != i || e.ratee != j) continue;
        const double w = decay_weight(e.time, ledger.now(), a);
        weighted += w * e.value;
        weight_sum += w;
    }
    if (weight_sum == 0.0) return std::nullopt;
    return weighted / weight_sum;
}

namespace {

std::map<ParticipantId, double> target_means(const InteractionLedger& ledger, ParticipantId v) {
    std::map<ParticipantId, std::pair<double, std::uint64_t>> acc;
    for (const auto& e : ledger.events()) {
        if (e.rater != v) continue;
        auto& slot = acc[e.ratee];
        slot.first += e.value;
        slot.second += 1;
    }
    std::map<ParticipantId, double> means;
    for (const auto& [target, slot] : acc)
        means[target] = slot.first / static_cast<double>(slot.second);
    return means;
}

double similarity_from_means(const std::map<ParticipantId, double>& mv,
                             const std::map<ParticipantId, double>& mw) {
    double sq = 0.0;
    std::size_t common = 0;
    for (const auto& [target, mean_v] : mv) {
        auto it = mw.find(target);
        if (it == mw.end()) continue;
        const double d = mean_v - it->second;
        sq += d * d;
        ++common;
    }
    if (common == 0) return 0.0;  // no shared evidence, no credibility
    return 1.0 - std::sqrt(sq / static_cast<double>(common));
}

}  // namespace

double feedback_similarity(const InteractionLedger& ledger, ParticipantId v, ParticipantId w) {
    return similarity_from_means(target_means(ledger, v), target_means(ledger, w));
}

SimilarityCache::SimilarityCache(const InteractionLedger& ledger) {
    std::map<ParticipantId, std::map<ParticipantId, std::pair<double, std::uint64_t>>> acc;
    for (const auto& e : ledger.events()) {
        auto& slot = acc[e.rater][e.ratee];
        slot.first += e.value;
        slot.second += 1;
    }
    for (const auto& [rater, targets] : acc) {
        auto& means = mean_rating_[rater];
        for (const auto& [target, slot] : targets)
            means[target] = slot.first / static_cast<double>(slot.second);
    }
}

double SimilarityCache::similarity(ParticipantId v, ParticipantId w) const {
    auto iv = mean_rating_.find(v);
    auto iw = mean_rating_.find(w);
    if (iv == mean_rating_.end() || iw == mean_rating_.end()) return 0.0;
    return similarity_from_means(iv->second, iw->second);
}

std::size_t SimilarityCache::common_targets(ParticipantId v, ParticipantId w) const {
    auto iv = mean_rating_.find(v);
    auto iw = mean_rating_.find(w);
    if (iv == mean_rating_.end() || iw == mean_rating_.end()) return 0;
    std::size_t common = 0;
    for (const auto& [target, mean] : iv->second) {
        (void)mean;
        if (iw->second.count(target)) ++common;
    }
    return common;
}

CredibilityWeights rater_level_credibility(const std::vector<double>& trust,
                                           const std::vector<ParticipantId>& raters_of_j) {
    if (raters_of_j.empty())
        throw std::invalid_argument("empty rater set");
    CredibilityWeights cred;
    cred.mode = CredibilityMode::RaterLevel;
    double total = 0.0;
    for (ParticipantId r : raters_of_j) {
        if (r >= trust.size()) throw std::invalid_argument("rater id outside trust vector");
        total += trust[r];
    }
    if (total > 0.0) {
        for (ParticipantId r : raters_of_j) cred.by_rater[r] = trust[r] / total;
    } else {
        const double uniform = 1.0 / static_cast<double>(raters_of_j.size());
        for (ParticipantId r : raters_of_j) cred.by_rater[r] = uniform;
    }
    return cred;
}

double third_party_similarity_credibility(const InteractionLedger& ledger,
                                          ParticipantId i, ParticipantId k,
                                          const std::vector<ParticipantId>& raters_of_j) {
    if (k == i) return 0.0;  // a third party is never the viewpoint itself
    double denom = 0.0;
    for (ParticipantId m : raters_of_j) {
        if (m == i) continue;
        denom += feedback_similarity(ledger, i, m);
    }
    if (denom == 0.0) return 0.0;
    return feedback_similarity(ledger, i, k) / denom;
}

double exp_credibility(double sim) {
    if (sim < 0.0 || sim > 1.0)
        throw std::invalid_argument("similarity outside [0,1]");
    if (sim == 0.0) return 0.0;
    return std::exp(1.0 - 1.0 / sim);
}

DirectTrustMatrix fcw_direct_trust(const DirectTrustMatrix& raw, const CredibilityWeights& cred) {
    if (raw.variant == MatrixVariant::Fcw)
        throw std::invalid_argument("input matrix is already credibility-weighted");
    DirectTrustMatrix out;
    out.n = raw.n;
    out.variant = MatrixVariant::Fcw;
    switch (cred.mode) {
        case CredibilityMode::RaterLevel:
            for (const auto& [pair, value] : raw.s) {
                auto it = cred.by_rater.find(pair.first);
                if (it == cred.by_rater.end())
                    throw std::invalid_argument("credibility weights do not cover rater " +
                                                std::to_string(pair.first));
                out.s[pair] = it->second * value;
            }
            break;
        case CredibilityMode::PairwiseScoreLevel:
            for (const auto& [pair, value] : raw.s) {
                auto it = cred.by_pair.find(pair);
                if (it == cred.by_pair.end())
                    throw std::invalid_argument("credibility weights do not cover edge");
                out.s[pair] = it->second * value;
            }
            break;
        case CredibilityMode::ThirdPartyScoreLevel: {
            // Edge (i,j) becomes the weighted average of third-party raters'
            // direct trust in j; pair weights are keyed (i,k).
            std::map<ParticipantId, std::vector<ParticipantId>> raters;
            for (const auto& [pair, value] : raw.s) {
                (void)value;
                raters[pair.second].push_back(pair.first);
            }
            for (const auto& [pair, value] : raw.s) {
                (void)value;
                const ParticipantId i = pair.first;
                const ParticipantId j = pair.second;
                double estimate = 0.0;
                for (ParticipantId k : raters[j]) {
                    if (k == i) continue;
                    auto it = cred.by_pair.find({i, k});
                    if (it == cred.by_pair.end())
                        throw std::invalid_argument("credibility weights do not cover pair");
                    estimate += it->second * raw.at(k, j);
                }
                out.s[pair] = std::clamp(estimate, 0.0, 1.0);
            }
            break;
        }
    }
    return out;
}

}  // namespace trustlab
