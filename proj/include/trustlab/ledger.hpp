// Participant identities, rating events and the derived per-pair
// interaction counts every trust computation consumes.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace trustlab {

using ParticipantId = std::uint32_t;
using Tick = std::uint64_t;

enum class ServiceOutcome : std::uint8_t { Authentic, Inauthentic };

// Ground-truth label of a rating's intent. Used for analysis only;
// trust metrics never read it.
enum class HonestyTag : std::uint8_t { Honest, Dishonest, NonCreditable };

const char* to_string(ServiceOutcome o);
const char* to_string(HonestyTag t);
ServiceOutcome outcome_from_string(const std::string& s);
HonestyTag tag_from_string(const std::string& s);

struct RatingEvent {
    ParticipantId rater = 0;
    ParticipantId ratee = 0;
    Tick time = 0;
    double value = 0.0;  // unified [0,1] scale; binary -1/+1 maps to 0/1
    ServiceOutcome outcome = ServiceOutcome::Authentic;
    HonestyTag tag = HonestyTag::Honest;
};

// Maps a multiscale rating in {-1,0,1,2,3,4,5} onto the unified scale.
double unify_multiscale(int rating);

struct PairCounts {
    std::uint64_t satisfied = 0;    // value >= 0.5
    std::uint64_t unsatisfied = 0;  // value < 0.5

    bool operator==(const PairCounts&) const = default;
};

// Rating weight a^(t_n - t_i); 0 < a <= 1, t_i <= t_n.
double decay_weight(Tick t_i, Tick t_n, double a);

// Append-only record of transactions and feedback ratings. The per-pair
// counts are exactly the fold of the event sequence, so replaying the
// events reproduces them bit for bit.
class InteractionLedger {
public:
    InteractionLedger() = default;

    // Validates the event and appends it. Throws std::invalid_argument on
    // self-rating, value outside [0,1], time regression, or an Honest tag
    // whose value disagrees with the outcome.
    void record_transaction(const RatingEvent& event);

    PairCounts pair_counts(ParticipantId rater, ParticipantId ratee) const;

    const std::vector<RatingEvent>& events() const { return events_; }
    const std::map<std::pair<ParticipantId, ParticipantId>, PairCounts>& counts() const {
        return counts_;
    }
    Tick now() const { return now_; }
    bool empty() const { return events_.empty(); }

    // Raters that have rated `ratee` at least once, ascending.
    std::vector<ParticipantId> raters_of(ParticipantId ratee) const;

    // CSV round trip: rater,ratee,time,value,outcome,honesty_tag.
    void export_csv(std::ostream& out) const;
    static InteractionLedger import_csv(std::istream& in);

private:
    std::vector<RatingEvent> events_;
    std::map<std::pair<ParticipantId, ParticipantId>, PairCounts> counts_;
    Tick now_ = 0;
};

}  // namespace trustlab
