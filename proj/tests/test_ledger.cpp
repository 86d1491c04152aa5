#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "trustlab/ledger.hpp"
#include "trustlab/simulation.hpp"

using namespace trustlab;

namespace {

RatingEvent event(ParticipantId rater, ParticipantId ratee, Tick t, double value) {
    RatingEvent e;
    e.rater = rater;
    e.ratee = ratee;
    e.time = t;
    e.value = value;
    e.outcome = value >= 0.5 ? ServiceOutcome::Authentic : ServiceOutcome::Inauthentic;
    e.tag = HonestyTag::Honest;
    return e;
}

std::vector<RatingEvent> random_events(std::mt19937_64& rng, std::size_t count,
                                       std::uint32_t n) {
    std::vector<RatingEvent> events;
    Tick t = 0;
    for (std::size_t i = 0; i < count; ++i) {
        auto rater = static_cast<ParticipantId>(rng() % n);
        auto ratee = static_cast<ParticipantId>(rng() % n);
        if (ratee == rater) ratee = (ratee + 1) % n;
        t += rng() % 3;
        events.push_back(event(rater, ratee, t, draw_u01(rng)));
    }
    return events;
}

}  // namespace

TEST_CASE("first positive event lands in the satisfied count") {
    InteractionLedger ledger;
    ledger.record_transaction(event(0, 1, 0, 1.0));
    const auto c = ledger.pair_counts(0, 1);
    CHECK(c.satisfied == 1);
    CHECK(c.unsatisfied == 0);
}

TEST_CASE("negative rating folds into the unsatisfied count") {
    InteractionLedger ledger;
    ledger.record_transaction(event(0, 1, 0, 1.0));
    ledger.record_transaction(event(0, 1, 1, 0.0));
    const auto c = ledger.pair_counts(0, 1);
    CHECK(c.satisfied == 1);
    CHECK(c.unsatisfied == 1);
}

TEST_CASE("pair counts default to zero and are directional") {
    InteractionLedger ledger;
    CHECK(ledger.pair_counts(2, 3).satisfied == 0);
    CHECK(ledger.pair_counts(2, 3).unsatisfied == 0);

    ledger.record_transaction(event(0, 1, 0, 1.0));
    ledger.record_transaction(event(0, 1, 1, 1.0));
    ledger.record_transaction(event(0, 1, 2, 1.0));
    ledger.record_transaction(event(0, 1, 3, 0.0));
    CHECK(ledger.pair_counts(0, 1).satisfied == 3);
    CHECK(ledger.pair_counts(0, 1).unsatisfied == 1);
    CHECK(ledger.pair_counts(1, 0).satisfied == 0);
}

TEST_CASE("invalid events are rejected") {
    InteractionLedger ledger;
    CHECK_THROWS_AS(ledger.record_transaction(event(1, 1, 0, 1.0)), std::invalid_argument);
    auto bad_value = event(0, 1, 0, 1.0);
    bad_value.value = 1.5;
    CHECK_THROWS_AS(ledger.record_transaction(bad_value), std::invalid_argument);

    ledger.record_transaction(event(0, 1, 5, 1.0));
    CHECK_THROWS_AS(ledger.record_transaction(event(0, 1, 4, 1.0)), std::invalid_argument);

    auto inconsistent = event(0, 1, 6, 1.0);
    inconsistent.outcome = ServiceOutcome::Inauthentic;  // positive value, bad service
    CHECK_THROWS_AS(ledger.record_transaction(inconsistent), std::invalid_argument);

    // intent labels may coincide with the outcome
    auto noncreditable = event(0, 1, 6, 0.0);
    noncreditable.outcome = ServiceOutcome::Inauthentic;
    noncreditable.tag = HonestyTag::NonCreditable;
    CHECK_NOTHROW(ledger.record_transaction(noncreditable));
}

TEST_CASE("replaying an event sequence reproduces the counts exactly") {
    std::mt19937_64 rng(42);
    for (int round = 0; round < 50; ++round) {
        const auto events = random_events(rng, 100, 12);
        InteractionLedger a;
        InteractionLedger b;
        for (const auto& e : events) a.record_transaction(e);
        for (const auto& e : events) b.record_transaction(e);
        REQUIRE(a.counts() == b.counts());
        REQUIRE(a.now() == b.now());
    }
}

TEST_CASE("fold property: counts sum to the number of events per pair") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 1000; ++round) {
        const auto events = random_events(rng, 40, 6);
        InteractionLedger ledger;
        std::map<std::pair<ParticipantId, ParticipantId>, std::uint64_t> expected;
        for (const auto& e : events) {
            ledger.record_transaction(e);
            ++expected[{e.rater, e.ratee}];
        }
        for (const auto& [pair, total] : expected) {
            const auto c = ledger.pair_counts(pair.first, pair.second);
            REQUIRE(c.satisfied + c.unsatisfied == total);
        }
    }
}

TEST_CASE("decay weight follows the power law") {
    CHECK(decay_weight(0, 10, 1.0) == doctest::Approx(1.0));
    CHECK(decay_weight(0, 2, 0.5) == doctest::Approx(0.25));
    CHECK(decay_weight(3, 3, 0.9) == doctest::Approx(1.0));
    CHECK_THROWS_AS(decay_weight(0, 1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(decay_weight(0, 1, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(decay_weight(5, 1, 0.5), std::invalid_argument);
}

TEST_CASE("decay weight is non-increasing in the gap") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 1000; ++i) {
        const double a = 0.05 + 0.95 * draw_u01(rng);
        const Tick g1 = rng() % 50;
        const Tick g2 = g1 + rng() % 50;
        REQUIRE(decay_weight(0, g2, a) <= decay_weight(0, g1, a) + 1e-15);
    }
}

TEST_CASE("honesty tags partition the event set") {
    std::mt19937_64 rng(5);
    InteractionLedger ledger;
    std::size_t honest = 0, dishonest = 0, noncreditable = 0;
    for (int i = 0; i < 300; ++i) {
        auto e = event(static_cast<ParticipantId>(i % 9),
                       static_cast<ParticipantId>((i + 1) % 9), i, draw_u01(rng));
        switch (rng() % 3) {
            case 0:
                e.tag = HonestyTag::Honest;
                e.outcome =
                    e.value >= 0.5 ? ServiceOutcome::Authentic : ServiceOutcome::Inauthentic;
                ++honest;
                break;
            case 1:
                e.tag = HonestyTag::Dishonest;
                ++dishonest;
                break;
            default:
                e.tag = HonestyTag::NonCreditable;
                ++noncreditable;
                break;
        }
        ledger.record_transaction(e);
    }
    std::size_t h = 0, d = 0, n = 0;
    for (const auto& e : ledger.events()) {
        switch (e.tag) {
            case HonestyTag::Honest: ++h; break;
            case HonestyTag::Dishonest: ++d; break;
            case HonestyTag::NonCreditable: ++n; break;
        }
    }
    CHECK(h == honest);
    CHECK(d == dishonest);
    CHECK(n == noncreditable);
    CHECK(h + d + n == ledger.events().size());
}

TEST_CASE("csv export and import round-trip the ledger") {
    std::mt19937_64 rng(99);
    InteractionLedger ledger;
    for (const auto& e : random_events(rng, 60, 8)) ledger.record_transaction(e);

    std::stringstream buffer;
    ledger.export_csv(buffer);
    const auto copy = InteractionLedger::import_csv(buffer);

    REQUIRE(copy.events().size() == ledger.events().size());
    CHECK(copy.counts() == ledger.counts());
    CHECK(copy.now() == ledger.now());
}

TEST_CASE("multiscale ratings map affinely onto the unit interval") {
    CHECK(unify_multiscale(-1) == doctest::Approx(0.0));
    CHECK(unify_multiscale(5) == doctest::Approx(1.0));
    CHECK(unify_multiscale(2) == doctest::Approx(0.5));
    CHECK_THROWS_AS(unify_multiscale(6), std::invalid_argument);
}
