// Agent-based transaction engine: query issuance, trust-informed server
// selection, service outcome, feedback, and periodic metric re-evaluation.

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "trustlab/metrics.hpp"
#include "trustlab/threats.hpp"

namespace trustlab {

// How query responders are drawn. Zipf popularity mirrors the file-sharing
// origin of the protocol: a few well-known participants answer most queries,
// which concentrates ratings and gives the similarity machinery real
// evidence. Popularity ranks are interleaved between the good and malicious
// groups so the malicious share of responders matches its population share.
enum class ResponderLaw : std::uint8_t { Zipf, Uniform };

struct SimulationConfig {
    std::uint32_t n_good = 60;
    std::uint32_t n_malicious = 40;
    std::uint32_t n_pretrusted = 3;
    std::uint64_t transactions = 1000;
    std::string metric = "EigenTrust";
    ThreatModelConfig threat;     // chain is filled in by the engine
    double explore_p = 0.10;      // random server-selection probability
    std::uint32_t responders_k = 5;
    ResponderLaw responder_law = ResponderLaw::Zipf;
    double popularity_exponent = 1.0;
    std::uint64_t reeval_every = 30;
    std::uint64_t seed = 1;
    double good_noise = 0.05;
    double epsilon = 0.15;

    std::uint32_t population() const { return n_good + n_malicious; }
    void validate() const;
};

struct GroupServiceCounts {
    std::uint64_t authentic = 0;
    std::uint64_t inauthentic = 0;
};

struct ExperimentReport {
    SimulationConfig config;
    double failed_fraction = 0.0;
    std::vector<double> round_failed;                // per evaluation window
    std::vector<std::vector<double>> trust_rounds;   // round -> trust vector
    std::vector<bool> round_converged;
    GroupServiceCounts good_services;
    GroupServiceCounts malicious_services;
    InteractionLedger ledger;

    std::size_t rounds() const { return trust_rounds.size(); }
    const std::vector<double>& final_trust() const;
};

// Uniform 53-bit double in [0,1). All engine randomness funnels through this
// so runs replay bit for bit on any platform.
double draw_u01(std::mt19937_64& rng);

// With probability explore_p picks uniformly among the candidates, otherwise
// proportionally to their trust scores; all-zero trust falls back to uniform.
// Throws on an empty candidate list.
ParticipantId select_server(const std::vector<ParticipantId>& candidates,
                            const std::vector<double>& trust, double explore_p,
                            double explore_draw, double pick_draw);

// Runs the full protocol: one client query per tick, responders_k uniformly
// drawn candidates, trust-informed selection, service + rating decisions,
// metric re-evaluation every reeval_every transactions. Deterministic for a
// fixed config. Draw order per transaction: client, candidates (schedule
// stream); explore, pick, service, rating coin, rating noise (decision
// stream, seeded with seed ^ fnv1a(metric) so replicas share the schedule).
ExperimentReport run_experiment(const SimulationConfig& cfg);

// One score per evaluation round for the given participant, chronological.
std::vector<double> trust_trajectory(const ExperimentReport& report, ParticipantId id);

// Mean trust over a set of participants, per round.
std::vector<double> mean_trajectory(const ExperimentReport& report,
                                    const std::vector<ParticipantId>& ids);

std::uint64_t fnv1a64(const std::string& text);

}  // namespace trustlab
