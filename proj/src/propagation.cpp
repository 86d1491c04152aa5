#include "trustlab/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace trustlab {

void GlobalTrustVector::export_csv(std::ostream& out) const {
    out << "id,score,iteration\n";
    for (std::size_t i = 0; i < t.size(); ++i)
        out << i << ',' << t[i] << ',' << iteration << '\n';
}

PreTrustVector PreTrustVector::make(std::size_t n, const std::vector<ParticipantId>& pretrusted,
                                    double epsilon) {
    if (epsilon < 0.0 || epsilon > 1.0)
        throw std::invalid_argument("epsilon outside [0,1]");
    PreTrustVector pre;
    pre.epsilon = epsilon;
    pre.p.assign(n, 0.0);
    if (!pretrusted.empty()) {
        const double share = 1.0 / static_cast<double>(pretrusted.size());
        for (ParticipantId id : pretrusted) {
            if (id >= n) throw std::invalid_argument("pre-trusted id outside network");
            pre.p[id] = share;
        }
    }
    return pre;
}

NormalizedTrustMatrix normalize(const DirectTrustMatrix& s) {
    NormalizedTrustMatrix out;
    out.n = s.n;
    std::vector<double> row_sum(s.n, 0.0);
    for (const auto& [pair, value] : s.s) row_sum[pair.first] += value;
    for (const auto& [pair, value] : s.s) {
        if (row_sum[pair.first] > 0.0 && value > 0.0)
            out.m[pair] = value / row_sum[pair.first];
    }
    return out;
}

GlobalTrustVector power_iterate(const NormalizedTrustMatrix& m, const PreTrustVector& pre,
                                const KernelConfig& cfg) {
    const std::size_t n = m.n;
    if (pre.p.size() != n)
        throw std::invalid_argument("pre-trust vector size mismatch");
    const double eps = pre.epsilon;

    std::vector<char> dangling(n, 1);
    for (const auto& [pair, value] : m.m) {
        (void)value;
        dangling[pair.first] = 0;
    }

    GlobalTrustVector result;
    result.t = pre.p;  // cold start at the pre-trust distribution
    std::vector<double> next(n, 0.0);

    for (std::uint64_t iter = 1; iter <= cfg.max_iter; ++iter) {
        std::fill(next.begin(), next.end(), 0.0);
        double dangling_mass = 0.0;
        for (std::size_t u = 0; u < n; ++u)
            if (dangling[u]) dangling_mass += result.t[u];
        for (const auto& [pair, value] : m.m)
            next[pair.second] += value * result.t[pair.first];
        for (std::size_t v = 0; v < n; ++v)
            next[v] = (1.0 - eps) * (next[v] + dangling_mass * pre.p[v]) + eps * pre.p[v];

        double change = 0.0;
        for (std::size_t v = 0; v < n; ++v) change += std::abs(next[v] - result.t[v]);
        result.t.swap(next);
        result.iteration = iter;
        result.residual = change;
        if (change < cfg.tol) {
            result.converged = true;
            return result;
        }
    }
    result.converged = false;
    return result;
}

double resolve_threshold(const DirectTrustMatrix& s, const ThresholdPolicy& policy) {
    switch (policy.kind) {
        case ThresholdPolicyKind::Fixed:
            if (policy.value < 0.0 || policy.value > 1.0)
                throw std::invalid_argument("fixed threshold outside [0,1]");
            return policy.value;
        case ThresholdPolicyKind::Percentile:
        case ThresholdPolicyKind::MeanNonzero: {
            std::vector<double> nonzero;
            for (const auto& [pair, value] : s.s) {
                (void)pair;
                if (value > 0.0) nonzero.push_back(value);
            }
            if (nonzero.empty())
                throw std::invalid_argument("data-driven threshold on an edgeless matrix");
            if (policy.kind == ThresholdPolicyKind::MeanNonzero)
                return std::accumulate(nonzero.begin(), nonzero.end(), 0.0) /
                       static_cast<double>(nonzero.size());
            if (policy.value < 0.0 || policy.value > 1.0)
                throw std::invalid_argument("quantile outside [0,1]");
            std::sort(nonzero.begin(), nonzero.end());
            const auto idx = static_cast<std::size_t>(
                policy.value * static_cast<double>(nonzero.size() - 1));
            return nonzero[idx];
        }
    }
    throw std::logic_error("unreachable");
}

DirectTrustMatrix tctp_filter(const DirectTrustMatrix& s, double tau) {
    if (tau < 0.0 || tau > 1.0)
        throw std::invalid_argument("threshold outside [0,1]");
    DirectTrustMatrix out;
    out.n = s.n;
    out.variant = s.variant;
    for (const auto& [pair, value] : s.s)
        if (value > tau) out.s[pair] = value;
    return out;
}

double one_hop_aggregate(const DirectTrustMatrix& s, const CredibilityWeights& recommendations,
                         ParticipantId j) {
    double weighted = 0.0;
    double weight_sum = 0.0;
    std::size_t raters = 0;
    for (const auto& [pair, value] : s.s) {
        if (pair.second != j) continue;
        ++raters;
        double w = 1.0;
        if (!recommendations.by_rater.empty()) {
            auto it = recommendations.by_rater.find(pair.first);
            w = it == recommendations.by_rater.end() ? 0.0 : it->second;
        }
        weighted += w * value;
        weight_sum += w;
    }
    if (raters == 0) return 0.5;  // cold start
    if (weight_sum == 0.0) return 0.0;
    return weighted / weight_sum;
}

}  // namespace trustlab
