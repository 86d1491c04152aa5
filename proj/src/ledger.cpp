#include "trustlab/ledger.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace trustlab {

const char* to_string(ServiceOutcome o) {
    return o == ServiceOutcome::Authentic ? "authentic" : "inauthentic";
}

const char* to_string(HonestyTag t) {
    switch (t) {
        case HonestyTag::Honest: return "honest";
        case HonestyTag::Dishonest: return "dishonest";
        case HonestyTag::NonCreditable: return "non_creditable";
    }
    return "?";
}

ServiceOutcome outcome_from_string(const std::string& s) {
    if (s == "authentic") return ServiceOutcome::Authentic;
    if (s == "inauthentic") return ServiceOutcome::Inauthentic;
    throw std::invalid_argument("unknown service outcome: " + s);
}

HonestyTag tag_from_string(const std::string& s) {
    if (s == "honest") return HonestyTag::Honest;
    if (s == "dishonest") return HonestyTag::Dishonest;
    if (s == "non_creditable") return HonestyTag::NonCreditable;
    throw std::invalid_argument("unknown honesty tag: " + s);
}

double unify_multiscale(int rating) {
    if (rating < -1 || rating > 5)
        throw std::invalid_argument("multiscale rating outside {-1..5}");
    return (rating + 1) / 6.0;
}

double decay_weight(Tick t_i, Tick t_n, double a) {
    if (a <= 0.0 || a > 1.0)
        throw std::invalid_argument("decay base must lie in (0,1]");
    if (t_i > t_n)
        throw std::invalid_argument("rating time is after the current tick");
    return std::pow(a, static_cast<double>(t_n - t_i));
}

void InteractionLedger::record_transaction(const RatingEvent& event) {
    if (event.rater == event.ratee)
        throw std::invalid_argument("rater and ratee must differ");
    if (!(event.value >= 0.0 && event.value <= 1.0))
        throw std::invalid_argument("rating value outside [0,1]");
    if (event.time < now_)
        throw std::invalid_argument("event time regresses");
    // An honest rating agrees with the outcome by definition. Dishonest and
    // non-creditable are intent labels and may coincide with the outcome
    // (an attacker badmouthing a genuinely bad service is still dishonest).
    if (event.tag == HonestyTag::Honest) {
        const bool positive = event.value >= 0.5;
        const bool authentic = event.outcome == ServiceOutcome::Authentic;
        if (positive != authentic)
            throw std::invalid_argument("honest rating disagrees with outcome");
    }
    events_.push_back(event);
    auto& c = counts_[{event.rater, event.ratee}];
    if (event.value >= 0.5)
        ++c.satisfied;
    else
        ++c.unsatisfied;
    now_ = event.time;
}

PairCounts InteractionLedger::pair_counts(ParticipantId rater, ParticipantId ratee) const {
    auto it = counts_.find({rater, ratee});
    return it == counts_.end() ? PairCounts{} : it->second;
}

std::vector<ParticipantId> InteractionLedger::raters_of(ParticipantId ratee) const {
    std::vector<ParticipantId> out;
    for (const auto& [pair, c] : counts_) {
        (void)c;
        if (pair.second == ratee) out.push_back(pair.first);
    }
    return out;
}

void InteractionLedger::export_csv(std::ostream& out) const {
    out << "rater,ratee,time,value,outcome,honesty_tag\n";
    for (const auto& e : events_) {
        out << e.rater << ',' << e.ratee << ',' << e.time << ',' << e.value << ','
            << to_string(e.outcome) << ',' << to_string(e.tag) << '\n';
    }
}

InteractionLedger InteractionLedger::import_csv(std::istream& in) {
    InteractionLedger ledger;
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        std::istringstream row(line);
        std::string field;
        RatingEvent e;
        std::getline(row, field, ',');
        e.rater = static_cast<ParticipantId>(std::stoul(field));
        std::getline(row, field, ',');
        e.ratee = static_cast<ParticipantId>(std::stoul(field));
        std::getline(row, field, ',');
        e.time = std::stoull(field);
        std::getline(row, field, ',');
        e.value = std::stod(field);
        std::getline(row, field, ',');
        e.outcome = outcome_from_string(field);
        std::getline(row, field, ',');
        e.tag = tag_from_string(field);
        ledger.record_transaction(e);
    }
    return ledger;
}

}  // namespace trustlab
