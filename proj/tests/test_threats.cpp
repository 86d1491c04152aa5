#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "trustlab/simulation.hpp"
#include "trustlab/threats.hpp"

using namespace trustlab;

namespace {

ThreatModelConfig config_for(ThreatModel model, std::uint32_t n_malicious) {
    ThreatModelConfig cfg;
    cfg.model = model;
    switch (model) {
        case ThreatModel::C: cfg.f = 0.4; break;
        case ThreatModel::E:
            cfg.f = 0.4;
            cfg.eta = 0.2;
            break;
        case ThreatModel::D:
            cfg.n_type_b = n_malicious / 2;
            cfg.n_type_d = n_malicious - n_malicious / 2;
            break;
        case ThreatModel::F:
            cfg.n_type_b = n_malicious / 2;
            cfg.n_type_d = n_malicious - n_malicious / 2;
            cfg.gamma = 0.2;
            break;
        default: break;
    }
    if (model == ThreatModel::B || model == ThreatModel::C || model == ThreatModel::E)
        for (std::uint32_t k = 0; k < n_malicious; ++k) cfg.chain.push_back(10 + k);
    return cfg;
}

}  // namespace

TEST_CASE("service decisions follow the role table") {
    const auto cfg_c = config_for(ThreatModel::C, 4);
    CHECK(decide_service({Role::Good, 0.05}, cfg_c, 0.99) == ServiceOutcome::Authentic);
    CHECK(decide_service({Role::TypeD, 0.0}, cfg_c, 0.99) == ServiceOutcome::Authentic);
    CHECK(decide_service({Role::IndependentMalicious, 0.0}, cfg_c, 0.0) ==
          ServiceOutcome::Inauthentic);
    CHECK(decide_service({Role::Colluder, 0.0}, cfg_c, 0.0) == ServiceOutcome::Inauthentic);
    CHECK(decide_service({Role::TypeB, 0.0}, cfg_c, 0.0) == ServiceOutcome::Inauthentic);
    // camouflage plays the f-threshold game
    CHECK(decide_service({Role::Camouflage, 0.0}, cfg_c, 0.39) == ServiceOutcome::Authentic);
    CHECK(decide_service({Role::Camouflage, 0.0}, cfg_c, 0.41) == ServiceOutcome::Inauthentic);
}

TEST_CASE("rating decisions follow the model wiring") {
    const BehaviorProfile good{Role::Good, 0.0};
    const BehaviorProfile colluder{Role::Colluder, 0.0};
    const BehaviorProfile camo{Role::Camouflage, 0.0};
    const BehaviorProfile independent{Role::IndependentMalicious, 0.0};

    SUBCASE("good rater, no noise") {
        const auto cfg = config_for(ThreatModel::A, 4);
        const auto r = decide_rating(good, independent, ServiceOutcome::Authentic, cfg, 0.9, 0.9);
        CHECK(r.value == doctest::Approx(1.0));
        CHECK(r.tag == HonestyTag::Honest);
        const auto bad = decide_rating(good, independent, ServiceOutcome::Inauthentic, cfg, 0.9, 0.9);
        CHECK(bad.value == doctest::Approx(0.0));
        CHECK(bad.tag == HonestyTag::Honest);
    }
    SUBCASE("good rater noise flips the value and the tag") {
        const auto cfg = config_for(ThreatModel::A, 4);
        const BehaviorProfile noisy{Role::Good, 0.05};
        const auto r = decide_rating(noisy, good, ServiceOutcome::Authentic, cfg, 0.9, 0.01);
        CHECK(r.value == doctest::Approx(0.0));
        CHECK(r.tag == HonestyTag::Dishonest);
    }
    SUBCASE("independent attackers always give non-creditable zeros") {
        const auto cfg = config_for(ThreatModel::A, 4);
        for (ServiceOutcome outcome : {ServiceOutcome::Authentic, ServiceOutcome::Inauthentic}) {
            const auto r = decide_rating(independent, good, outcome, cfg, 0.0, 0.0);
            CHECK(r.value == doctest::Approx(0.0));
            CHECK(r.tag == HonestyTag::NonCreditable);
        }
    }
    SUBCASE("colluders rate fellow malicious 1.0 and good 0.0") {
        const auto cfg = config_for(ThreatModel::B, 4);
        const auto partner = decide_rating(colluder, colluder, ServiceOutcome::Inauthentic, cfg,
                                           0.9, 0.9);
        CHECK(partner.value == doctest::Approx(1.0));
        CHECK(partner.tag == HonestyTag::Dishonest);
        const auto victim = decide_rating(colluder, good, ServiceOutcome::Authentic, cfg, 0.9, 0.9);
        CHECK(victim.value == doctest::Approx(0.0));
        CHECK(victim.tag == HonestyTag::Dishonest);
    }
    SUBCASE("model E honesty coin emits the honest value") {
        const auto cfg = config_for(ThreatModel::E, 4);
        const auto honest = decide_rating(camo, good, ServiceOutcome::Authentic, cfg, 0.1, 0.9);
        CHECK(honest.value == doctest::Approx(1.0));
        CHECK(honest.tag == HonestyTag::Honest);
        const auto wired = decide_rating(camo, good, ServiceOutcome::Authentic, cfg, 0.3, 0.9);
        CHECK(wired.value == doctest::Approx(0.0));
        CHECK(wired.tag == HonestyTag::Dishonest);
    }
}

TEST_CASE("chain construction is a ring") {
    const auto edges = build_chain({5, 6, 7});
    REQUIRE(edges.size() == 3);
    CHECK(edges[0] == std::pair<ParticipantId, ParticipantId>{5, 6});
    CHECK(edges[1] == std::pair<ParticipantId, ParticipantId>{6, 7});
    CHECK(edges[2] == std::pair<ParticipantId, ParticipantId>{7, 5});

    const auto pair = build_chain({3, 9});
    REQUIRE(pair.size() == 2);
    CHECK(pair[0] == std::pair<ParticipantId, ParticipantId>{3, 9});
    CHECK(pair[1] == std::pair<ParticipantId, ParticipantId>{9, 3});

    CHECK_THROWS_AS(build_chain({1}), std::invalid_argument);
}

TEST_CASE("decision functions are deterministic in their draws") {
    const auto cfg = config_for(ThreatModel::E, 6);
    std::mt19937_64 rng_a(2024);
    std::mt19937_64 rng_b(2024);
    const BehaviorProfile camo{Role::Camouflage, 0.0};
    const BehaviorProfile good{Role::Good, 0.05};
    for (int i = 0; i < 1000; ++i) {
        const double d1 = draw_u01(rng_a);
        const double d2 = draw_u01(rng_b);
        REQUIRE(d1 == d2);
        const auto a = decide_rating(camo, good, ServiceOutcome::Authentic, cfg, d1, d1);
        const auto b = decide_rating(camo, good, ServiceOutcome::Authentic, cfg, d2, d2);
        REQUIRE(a.value == b.value);
        REQUIRE(a.tag == b.tag);
    }
}

TEST_CASE("model A raters never emit a positive rating") {
    const auto cfg = config_for(ThreatModel::A, 8);
    const BehaviorProfile attacker{Role::IndependentMalicious, 0.0};
    const BehaviorProfile good{Role::Good, 0.0};
    std::mt19937_64 rng(5);
    for (int i = 0; i < 1000; ++i) {
        const auto outcome =
            draw_u01(rng) < 0.5 ? ServiceOutcome::Authentic : ServiceOutcome::Inauthentic;
        const auto r = decide_rating(attacker, good, outcome, cfg, draw_u01(rng), draw_u01(rng));
        REQUIRE(r.value < 0.5);
        REQUIRE(r.tag == HonestyTag::NonCreditable);
    }
}

TEST_CASE("with eta and gamma zero no good participant gets malicious praise") {
    std::mt19937_64 rng(6);
    const BehaviorProfile good{Role::Good, 0.0};
    for (ThreatModel model :
         {ThreatModel::B, ThreatModel::C, ThreatModel::D, ThreatModel::E, ThreatModel::F}) {
        auto cfg = config_for(model, 6);
        cfg.eta = 0.0;
        cfg.gamma = 0.0;
        for (Role role : {Role::Colluder, Role::Camouflage, Role::TypeB, Role::TypeD}) {
            const BehaviorProfile rater{role, 0.0};
            for (int i = 0; i < 200; ++i) {
                const auto r = decide_rating(rater, good, ServiceOutcome::Authentic, cfg,
                                             draw_u01(rng), draw_u01(rng));
                REQUIRE(r.value < 0.5);
            }
        }
    }
}

TEST_CASE("model E honest-rating frequency converges to eta") {
    auto cfg = config_for(ThreatModel::E, 6);
    cfg.eta = 0.35;
    const BehaviorProfile camo{Role::Camouflage, 0.0};
    const BehaviorProfile good{Role::Good, 0.0};
    std::mt19937_64 rng(7);
    int honest = 0;
    const int draws = 20000;
    for (int i = 0; i < draws; ++i) {
        const auto r = decide_rating(camo, good, ServiceOutcome::Authentic, cfg, draw_u01(rng),
                                     draw_u01(rng));
        if (r.tag == HonestyTag::Honest) ++honest;
    }
    const double fraction = static_cast<double>(honest) / draws;
    CHECK(fraction == doctest::Approx(0.35).epsilon(0.06));  // within eta +- 0.02
}

TEST_CASE("profile assignment covers the population") {
    auto cfg = config_for(ThreatModel::D, 10);
    const auto profiles = assign_profiles(20, 10, cfg, 0.05);
    REQUIRE(profiles.size() == 30);
    for (std::size_t i = 0; i < 20; ++i) REQUIRE(profiles[i].role == Role::Good);
    std::size_t type_b = 0, type_d = 0;
    for (std::size_t i = 20; i < 30; ++i) {
        if (profiles[i].role == Role::TypeB) ++type_b;
        if (profiles[i].role == Role::TypeD) ++type_d;
    }
    CHECK(type_b == cfg.n_type_b);
    CHECK(type_d == cfg.n_type_d);

    cfg.n_type_b = 3;  // no longer covers the population
    CHECK_THROWS_AS(cfg.validate(10), std::invalid_argument);
}
