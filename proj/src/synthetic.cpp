#include "trustlab/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "trustlab/local_trust.hpp"
#include "trustlab/simulation.hpp"

namespace trustlab {

namespace {

// Rank sampler with P(r) proportional to r^-s over ranks 1..R.
class ZipfRanks {
public:
    ZipfRanks(std::uint32_t max_rank, double exponent) {
        cumulative_.reserve(max_rank);
        double total = 0.0;
        for (std::uint32_t r = 1; r <= max_rank; ++r) {
            total += std::pow(static_cast<double>(r), -exponent);
            cumulative_.push_back(total);
        }
    }

    std::uint32_t draw(std::mt19937_64& rng) const {
        const double mark = draw_u01(rng) * cumulative_.back();
        const auto it = std::lower_bound(cumulative_.begin(), cumulative_.end(), mark);
        return static_cast<std::uint32_t>(it - cumulative_.begin()) + 1;
    }

private:
    std::vector<double> cumulative_;
};

RatingEvent make_event(ParticipantId rater, ParticipantId ratee, double value) {
    RatingEvent e;
    e.rater = rater;
    e.ratee = ratee;
    e.time = 0;
    e.value = value;
    e.outcome = value >= 0.5 ? ServiceOutcome::Authentic : ServiceOutcome::Inauthentic;
    e.tag = HonestyTag::Honest;
    return e;
}

}  // namespace

InteractionLedger build_synthetic_ledger(const SyntheticGraphSpec& spec, std::uint64_t seed) {
    if (spec.eta < 0.0 || spec.eta > 1.0)
        throw std::invalid_argument("eta outside [0,1]");
    std::mt19937_64 rng(seed);
    InteractionLedger ledger;
    const std::uint32_t R = spec.n_regular;
    const ZipfRanks zipf(R, spec.zipf_exponent);

    // regular -> regular: Zipf-rank trust values (rank 1 maps to 1.0)
    for (ParticipantId u = 0; u < R; ++u) {
        for (ParticipantId v = 0; v < R; ++v) {
            if (u == v) continue;
            const std::uint32_t rank = zipf.draw(rng);
            const double value = static_cast<double>(R + 1 - rank) / static_cast<double>(R);
            ledger.record_transaction(make_event(u, v, value));
        }
    }
    // regular -> malicious: camouflage earns high marks
    for (ParticipantId u = 0; u < R; ++u) {
        for (std::uint32_t k = 0; k < spec.n_malicious; ++k) {
            const double span = spec.regular_to_malicious_high - spec.regular_to_malicious_low;
            const double value = spec.regular_to_malicious_low + span * draw_u01(rng);
            ledger.record_transaction(make_event(u, R + k, value));
        }
    }
    // malicious -> regular: ratings hover around the honesty level
    for (std::uint32_t k = 0; k < spec.n_malicious; ++k) {
        for (ParticipantId v = 0; v < R; ++v) {
            const double low = std::max(0.0, spec.eta - spec.malicious_halfwidth);
            const double high = std::min(1.0, spec.eta + spec.malicious_halfwidth);
            const double value = low + (high - low) * draw_u01(rng);
            ledger.record_transaction(make_event(R + k, v, value));
        }
    }
    // malicious -> malicious: ring of full-trust chain edges
    if (spec.n_malicious >= 2) {
        for (std::uint32_t k = 0; k < spec.n_malicious; ++k) {
            const ParticipantId rater = R + k;
            const ParticipantId ratee = R + (k + 1) % spec.n_malicious;
            ledger.record_transaction(make_event(rater, ratee, 1.0));
        }
    }
    return ledger;
}

std::vector<std::vector<double>> similarity_matrix(const InteractionLedger& ledger,
                                                   std::size_t n) {
    SimilarityCache cache(ledger);
    std::vector<std::vector<double>> sim(n, std::vector<double>(n, 0.0));
    for (std::size_t v = 0; v < n; ++v) {
        sim[v][v] = 1.0;
        for (std::size_t w = v + 1; w < n; ++w) {
            const double s = cache.similarity(static_cast<ParticipantId>(v),
                                              static_cast<ParticipantId>(w));
            sim[v][w] = s;
            sim[w][v] = s;
        }
    }
    return sim;
}

SimilaritySummary summarize_similarity(const std::vector<std::vector<double>>& sim,
                                       std::uint32_t n_regular) {
    SimilaritySummary out;
    const std::size_t n = sim.size();
    double gg = 0.0, cg = 0.0, mm = 0.0;
    std::size_t gg_n = 0, cg_n = 0, mm_n = 0;
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t w = v + 1; w < n; ++w) {
            const bool v_good = v < n_regular;
            const bool w_good = w < n_regular;
            if (v_good && w_good) {
                gg += sim[v][w];
                ++gg_n;
            } else if (!v_good && !w_good) {
                mm += sim[v][w];
                ++mm_n;
            } else {
                cg += sim[v][w];
                ++cg_n;
            }
        }
    }
    if (gg_n) out.good_good = gg / static_cast<double>(gg_n);
    if (cg_n) out.cross_group = cg / static_cast<double>(cg_n);
    if (mm_n) out.malicious_malicious = mm / static_cast<double>(mm_n);
    return out;
}

}  // namespace trustlab
