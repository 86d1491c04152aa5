#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "trustlab/config.hpp"
#include "trustlab/csv.hpp"
#include "trustlab/presets.hpp"

using namespace trustlab;

TEST_CASE("flat key-value files parse with comments and whitespace") {
    std::istringstream in(
        "# experiment setup\n"
        "n_good = 60\n"
        "n_malicious = 40   # the attackers\n"
        "metric = ServiceTrust++\n"
        "model = C\n"
        "f = 0.4\n"
        "seed = 7\n");
    const auto map = parse_config(in);
    const auto cfg = simulation_config_from(map);
    CHECK(cfg.n_good == 60);
    CHECK(cfg.n_malicious == 40);
    CHECK(cfg.metric == "ServiceTrust++");
    CHECK(cfg.threat.model == ThreatModel::C);
    CHECK(cfg.threat.f == doctest::Approx(0.4));
    CHECK(cfg.seed == 7);
    CHECK(cfg.explore_p == doctest::Approx(0.10));  // default survives
}

TEST_CASE("unknown keys and malformed lines are rejected") {
    std::istringstream bad_key("no_such_knob = 1\n");
    CHECK_THROWS_AS(simulation_config_from(parse_config(bad_key)), std::invalid_argument);

    std::istringstream bad_line("just words\n");
    CHECK_THROWS_AS(parse_config(bad_line), std::invalid_argument);

    ConfigMap map;
    CHECK_THROWS_AS(apply_override(map, "novalue"), std::invalid_argument);
    apply_override(map, "seed=9");
    CHECK(map.at("seed") == "9");
}

TEST_CASE("config digest is stable and order-independent") {
    ConfigMap a;
    a["seed"] = "1";
    a["metric"] = "EigenTrust";
    ConfigMap b;
    b["metric"] = "EigenTrust";
    b["seed"] = "1";
    CHECK(config_digest(a) == config_digest(b));
    b["seed"] = "2";
    CHECK(config_digest(a) != config_digest(b));
}

TEST_CASE("round trip through the config map preserves the simulation config") {
    SimulationConfig cfg;
    cfg.metric = "PeerTrustPSM";
    cfg.threat.model = ThreatModel::E;
    cfg.threat.f = 0.4;
    cfg.threat.eta = 0.5;
    cfg.seed = 123;
    const auto back = simulation_config_from(to_config_map(cfg));
    CHECK(back.metric == cfg.metric);
    CHECK(back.threat.model == cfg.threat.model);
    CHECK(back.threat.eta == doctest::Approx(cfg.threat.eta));
    CHECK(back.seed == cfg.seed);
}

TEST_CASE("csv writer emits the metadata comment block and header") {
    const auto dir = std::filesystem::temp_directory_path() / "trustlab_csv_test";
    std::filesystem::create_directories(dir);
    const auto path = (dir / "out.csv").string();
    {
        CsvWriter csv(path, {{"seed", "7"}, {"config_digest", "abc"}});
        csv.header({"a", "b"});
        csv.row(1, 2.5);
        csv.row("x", "y");
    }
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    CHECK(line.find("# artifact_version:") == 0);
    std::getline(in, line);
    CHECK(line == "# config_digest: abc");
    std::getline(in, line);
    CHECK(line == "# seed: 7");
    std::getline(in, line);
    CHECK(line == "a,b");
    std::getline(in, line);
    CHECK(line == "1,2.5");
    std::filesystem::remove_all(dir);
}

TEST_CASE("run outputs land in the three experiment files") {
    SimulationConfig cfg;
    cfg.n_good = 12;
    cfg.n_malicious = 8;
    cfg.n_pretrusted = 2;
    cfg.transactions = 60;
    cfg.reeval_every = 20;
    cfg.metric = "EigenTrust";
    cfg.threat.model = ThreatModel::A;
    const auto report = run_experiment(cfg);

    const auto dir = std::filesystem::temp_directory_path() / "trustlab_run_test";
    const auto files = write_run_outputs(report, dir.string());
    REQUIRE(files.size() == 3);
    for (const auto& file : files) {
        CAPTURE(file);
        REQUIRE(std::filesystem::exists(file));
        std::ifstream in(file);
        std::string first;
        std::getline(in, first);
        REQUIRE(first.find("# artifact_version:") == 0);
    }
    std::filesystem::remove_all(dir);
}

TEST_CASE("unknown presets are rejected") {
    CHECK_THROWS_AS(run_preset("no-such-preset", {}, 1, 1, "/tmp/trustlab_nope"),
                    std::invalid_argument);
    CHECK(preset_names().size() == 5);
}
