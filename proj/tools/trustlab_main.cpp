// Command-line front door: run simulations, closed-form attack-cost sweeps,
// the synthetic similarity study, the preset suites, and the cost-oracle
// verification grid. All outputs are CSV.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trustlab/csv.hpp"
#include "trustlab/presets.hpp"

using namespace trustlab;

namespace {

int cmd_simulate(const std::string& config_path, const std::vector<std::string>& overrides,
                 std::uint64_t seed, bool seed_set, std::uint32_t seeds,
                 const std::string& out_dir) {
    ConfigMap map = parse_config_file(config_path);
    for (const auto& o : overrides) apply_override(map, o);
    SimulationConfig cfg = simulation_config_from(map);
    if (seed_set) cfg.seed = seed;
    for (std::uint32_t s = 0; s < seeds; ++s) {
        SimulationConfig run_cfg = cfg;
        run_cfg.seed = cfg.seed + s;
        const auto report = run_experiment(run_cfg);
        const std::string dir =
            seeds == 1 ? out_dir : join_path(out_dir, "seed" + std::to_string(run_cfg.seed));
        for (const auto& file : write_run_outputs(report, dir))
            std::cout << "wrote " << file << '\n';
        std::cout << "metric=" << run_cfg.metric << " model="
                  << to_string(run_cfg.threat.model) << " seed=" << run_cfg.seed
                  << " failed_fraction=" << report.failed_fraction << '\n';
    }
    return 0;
}

int cmd_cost(const std::string& model_name, double t_good, double t_malicious, double eta,
             double gamma, const std::string& out_dir) {
    const ThreatModel model = threat_model_from_string(model_name);
    ensure_directory(out_dir);
    const std::string path = join_path(out_dir, std::string("cost_") + to_string(model) + ".csv");
    CsvWriter csv(path, {{"model", to_string(model)},
                         {"t_good", std::to_string(t_good)},
                         {"t_malicious", std::to_string(t_malicious)},
                         {"eta", std::to_string(eta)},
                         {"gamma", std::to_string(gamma)}});
    csv.header({"model", "n_honest", "services", "t_good", "t_malicious", "eta", "gamma",
                "feasible", "n_malicious", "n_type_b", "dishonest_ratings", "honest_ratings",
                "authentic_services", "total_ratings", "raw_total_ratings",
                "raw_honest_ratings"});
    for (const auto& row : cost_sweep(model, t_good, t_malicious, eta, gamma)) {
        const auto& r = row.report;
        csv.row(to_string(r.model), r.params.n_honest, r.params.services, r.params.t_good,
                r.params.t_malicious, r.params.eta, r.params.gamma, row.feasible ? 1 : 0,
                r.n_malicious, r.n_type_b, r.dishonest_ratings, r.honest_ratings,
                r.authentic_services, r.total_ratings, r.raw_total_ratings,
                r.raw_honest_ratings);
    }
    std::cout << "wrote " << path << '\n';
    return 0;
}

int cmd_similarity(double eta, bool eta_set, std::uint32_t n_regular, std::uint32_t n_malicious,
                   std::uint64_t seed, std::uint32_t seeds, const std::string& out_dir) {
    ConfigMap overrides;
    overrides["n_regular"] = std::to_string(n_regular);
    overrides["n_malicious"] = std::to_string(n_malicious);
    if (eta_set) overrides["eta"] = std::to_string(eta);
    for (const auto& file :
         run_preset("similarity-heatmap", overrides, seed, seeds, out_dir))
        std::cout << "wrote " << file << '\n';
    return 0;
}

int cmd_verify() {
    const auto checks = verify_grid();
    std::size_t confirmed = 0;
    for (const auto& check : checks) {
        if (check.result.confirmed) {
            ++confirmed;
        } else {
            std::cout << "REFUTED " << check.result.detail << '\n';
        }
    }
    std::cout << "attack-cost oracle: " << confirmed << "/" << checks.size()
              << " grid points confirmed\n";
    return confirmed == checks.size() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"desk-scale laboratory for decentralized trust management"};
    app.require_subcommand(1);

    std::uint64_t seed = 1;
    std::uint32_t seeds = 1;
    std::string out_dir = "out";
    app.add_option("--seed", seed, "base RNG seed")->capture_default_str();
    app.add_option("--seeds", seeds, "number of consecutive seeds to run")
        ->capture_default_str();
    app.add_option("--out-dir", out_dir, "output directory")->capture_default_str();

    auto* simulate = app.add_subcommand("simulate", "run one experiment from a config file");
    std::string config_path;
    std::vector<std::string> sim_overrides;
    simulate->add_option("config", config_path, "key = value config file")->required();
    simulate->add_option("--set", sim_overrides, "override config entries (key=value)");

    auto* cost = app.add_subcommand("cost", "closed-form attack-cost sweep for one model");
    std::string model_name;
    double t_good = 0.85, t_malicious = 0.35, eta = 0.2, gamma = 0.2;
    cost->add_option("model", model_name, "threat model A-F")->required();
    cost->add_option("--t-good", t_good, "average good-participant trust")
        ->capture_default_str();
    cost->add_option("--t-malicious", t_malicious, "average mischievous trust")
        ->capture_default_str();
    cost->add_option("--eta", eta, "honest-rating probability (model E)")
        ->capture_default_str();
    cost->add_option("--gamma", gamma, "honest-rating probability (model F)")
        ->capture_default_str();

    auto* similarity = app.add_subcommand("similarity", "synthetic pairwise-similarity study");
    double sim_eta = 0.5;
    std::uint32_t n_regular = 100, n_malicious = 30;
    auto* eta_opt = similarity->add_option("--eta", sim_eta, "single eta instead of the sweep");
    similarity->add_option("--n-regular", n_regular, "regular nodes")->capture_default_str();
    similarity->add_option("--n-malicious", n_malicious, "camouflage nodes")
        ->capture_default_str();

    auto* preset = app.add_subcommand("preset", "run a named experiment preset");
    std::string preset_name;
    std::vector<std::string> preset_overrides;
    preset->add_option("name", preset_name, "one of: cost-curves, smp-behavior, trajectories, "
                                            "failed-fraction, similarity-heatmap")
        ->required();
    preset->add_option("--set", preset_overrides, "override config entries (key=value)");

    app.add_subcommand("verify", "check every closed-form cost against the scenario oracle");

    CLI11_PARSE(app, argc, argv);

    try {
        if (simulate->parsed())
            return cmd_simulate(config_path, sim_overrides, seed,
                                app.count("--seed") > 0, seeds, out_dir);
        if (cost->parsed()) return cmd_cost(model_name, t_good, t_malicious, eta, gamma, out_dir);
        if (similarity->parsed())
            return cmd_similarity(sim_eta, eta_opt->count() > 0, n_regular, n_malicious, seed,
                                  seeds, out_dir);
        if (preset->parsed()) {
            ConfigMap overrides;
            for (const auto& o : preset_overrides) apply_override(overrides, o);
            for (const auto& file : run_preset(preset_name, overrides, seed, seeds, out_dir))
                std::cout << "wrote " << file << '\n';
            return 0;
        }
        return cmd_verify();
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 2;
    }
}
