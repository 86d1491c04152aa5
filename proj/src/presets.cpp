#include "trustlab/presets.hpp"

#include <algorithm>
#include <stdexcept>

#include "trustlab/csv.hpp"

namespace trustlab {

namespace {

std::vector<ParticipantId> malicious_ids(const SimulationConfig& cfg) {
    std::vector<ParticipantId> ids;
    for (std::uint32_t k = 0; k < cfg.n_malicious; ++k) ids.push_back(cfg.n_good + k);
    return ids;
}

std::map<std::string, std::string> run_metadata(const SimulationConfig& cfg) {
    auto map = to_config_map(cfg);
    std::map<std::string, std::string> meta(map.begin(), map.end());
    meta["config_digest"] = config_digest(map);
    return meta;
}

SimulationConfig overridden(SimulationConfig cfg, const ConfigMap& overrides) {
    if (overrides.empty()) return cfg;
    auto map = to_config_map(cfg);
    for (const auto& [key, value] : overrides) map[key] = value;
    return simulation_config_from(map);
}

const std::vector<std::string>& comparison_metrics() {
    static const std::vector<std::string> metrics = {"BetaTrust", "EigenTrust", "ServiceTrust",
                                                     "ServiceTrust++"};
    return metrics;
}

std::vector<std::string> all_metric_names() {
    std::vector<std::string> names;
    for (const auto& spec : builtin_metrics()) names.push_back(spec.name);
    return names;
}

std::vector<std::string> preset_cost_curves(const std::string& out_dir) {
    std::vector<std::string> files;
    const std::string path = join_path(out_dir, "cost_curves.csv");
    CsvWriter csv(path, {{"t_malicious", "0.35"},
                         {"t_good", "0.75 0.85 0.95"},
                         {"eta", "0.2"},
                         {"gamma", "0.2"}});
    csv.header({"model", "n_honest", "services", "t_good", "t_malicious", "eta", "gamma",
                "feasible", "n_malicious", "n_type_b", "dishonest_ratings", "honest_ratings",
                "authentic_services", "total_ratings"});
    for (ThreatModel model : {ThreatModel::A, ThreatModel::B, ThreatModel::C, ThreatModel::D,
                              ThreatModel::E, ThreatModel::F}) {
        for (const auto& row : cost_sweep(model, 0.85, 0.35, 0.2, 0.2)) {
            const auto& r = row.report;
            csv.row(to_string(r.model), r.params.n_honest, r.params.services, r.params.t_good,
                    r.params.t_malicious, r.params.eta, r.params.gamma, row.feasible ? 1 : 0,
                    r.n_malicious, r.n_type_b, r.dishonest_ratings, r.honest_ratings,
                    r.authentic_services, r.total_ratings);
        }
    }
    files.push_back(path);
    return files;
}

SimulationConfig base_population_config() {
    SimulationConfig cfg;
    cfg.n_good = 60;
    cfg.n_malicious = 40;
    cfg.n_pretrusted = 3;
    cfg.transactions = 1000;
    return cfg;
}

SimulationConfig threat_config(ThreatModel model, double f, double eta, double gamma,
                               std::uint32_t n_type_b, std::uint32_t n_type_d) {
    SimulationConfig cfg = base_population_config();
    cfg.threat.model = model;
    cfg.threat.f = f;
    cfg.threat.eta = eta;
    cfg.threat.gamma = gamma;
    cfg.threat.n_type_b = n_type_b;
    cfg.threat.n_type_d = n_type_d;
    return cfg;
}

std::vector<std::string> preset_smp_behavior(const ConfigMap& overrides, std::uint64_t seed,
                                             std::uint32_t seeds, const std::string& out_dir) {
    const std::string path = join_path(out_dir, "smp_behavior.csv");
    CsvWriter csv(path, {{"seed", std::to_string(seed)}, {"seeds", std::to_string(seeds)}});
    csv.header({"metric", "model", "seed", "group", "authentic", "inauthentic"});
    for (const auto& metric : comparison_metrics()) {
        for (ThreatModel model :
             {ThreatModel::C, ThreatModel::D, ThreatModel::E, ThreatModel::F}) {
            SimulationConfig cfg;
            switch (model) {
                case ThreatModel::C: cfg = threat_config(model, 0.4, 0.0, 0.0, 0, 0); break;
                case ThreatModel::D: cfg = threat_config(model, 0.0, 0.0, 0.0, 20, 20); break;
                case ThreatModel::E: cfg = threat_config(model, 0.4, 0.2, 0.0, 0, 0); break;
                default: cfg = threat_config(model, 0.0, 0.0, 0.2, 20, 20); break;
            }
            cfg.metric = metric;
            cfg = overridden(cfg, overrides);
            for (std::uint32_t s = 0; s < seeds; ++s) {
                cfg.seed = seed + s;
                const auto report = run_experiment(cfg);
                csv.row(metric, to_string(model), cfg.seed, "good",
                        report.good_services.authentic, report.good_services.inauthentic);
                csv.row(metric, to_string(model), cfg.seed, "malicious",
                        report.malicious_services.authentic,
                        report.malicious_services.inauthentic);
            }
        }
    }
    return {path};
}

std::vector<std::string> preset_trajectories(const ConfigMap& overrides, std::uint64_t seed,
                                             std::uint32_t seeds, const std::string& out_dir) {
    const std::string path = join_path(out_dir, "camouflage_trajectories.csv");
    CsvWriter csv(path, {{"population", "60 good / 40 camouflage / 3 pre-trusted"},
                         {"f", "0.4"},
                         {"eta_model_e", "0.5"},
                         {"seed", std::to_string(seed)},
                         {"seeds", std::to_string(seeds)}});
    csv.header({"metric", "model", "seed", "round", "mean_camouflage_score"});
    const std::vector<std::string> metrics = {"EigenTrust", "PeerTrustTVM", "ServiceTrust",
                                              "ServiceTrust++"};
    for (const auto& metric : metrics) {
        for (ThreatModel model : {ThreatModel::C, ThreatModel::E}) {
            SimulationConfig cfg = threat_config(model, 0.4, model == ThreatModel::E ? 0.5 : 0.0,
                                                 0.0, 0, 0);
            cfg.metric = metric;
            cfg = overridden(cfg, overrides);
            for (std::uint32_t s = 0; s < seeds; ++s) {
                cfg.seed = seed + s;
                const auto report = run_experiment(cfg);
                const auto series = mean_trajectory(report, malicious_ids(cfg));
                for (std::size_t round = 0; round < series.size(); ++round)
                    csv.row(metric, to_string(model), cfg.seed, round + 1, series[round]);
            }
        }
    }
    return {path};
}

std::vector<std::string> preset_failed_fraction(const ConfigMap& overrides, std::uint64_t seed,
                                                std::uint32_t seeds,
                                                const std::string& out_dir) {
    const std::string path = join_path(out_dir, "failed_fraction.csv");
    CsvWriter csv(path, {{"population", "100 participants, 3 pre-trusted"},
                         {"seed", std::to_string(seed)},
                         {"seeds", std::to_string(seeds)}});
    csv.header({"metric", "model", "sweep", "value", "seed", "failed_fraction"});

    struct Sweep {
        ThreatModel model;
        std::string axis;
        std::vector<double> values;
    };
    const std::vector<Sweep> sweeps = {
        {ThreatModel::A, "malicious_pct", {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6}},
        {ThreatModel::B, "malicious_pct", {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6}},
        {ThreatModel::C, "f", {0.2, 0.4, 0.6, 0.8}},
        {ThreatModel::D, "n_type_b", {10, 20, 30}},
        {ThreatModel::E, "eta", {0.2, 0.4, 0.6, 0.8}},
        {ThreatModel::F, "gamma", {0.2, 0.4, 0.6, 0.8}},
    };

    for (const auto& metric : all_metric_names()) {
        for (const auto& sweep : sweeps) {
            for (double value : sweep.values) {
                SimulationConfig cfg = base_population_config();
                cfg.threat.model = sweep.model;
                cfg.metric = metric;
                if (sweep.axis == "malicious_pct") {
                    const auto n_mal = static_cast<std::uint32_t>(value * 100.0 + 0.5);
                    cfg.n_malicious = n_mal;
                    cfg.n_good = 100 - n_mal;
                } else if (sweep.axis == "f") {
                    cfg.threat.f = value;
                } else if (sweep.axis == "n_type_b") {
                    cfg.threat.n_type_b = static_cast<std::uint32_t>(value);
                    cfg.threat.n_type_d = 40 - cfg.threat.n_type_b;
                } else if (sweep.axis == "eta") {
                    cfg.threat.f = 0.4;
                    cfg.threat.eta = value;
                } else {
                    cfg.threat.n_type_b = 20;
                    cfg.threat.n_type_d = 20;
                    cfg.threat.gamma = value;
                }
                cfg = overridden(cfg, overrides);
                for (std::uint32_t s = 0; s < seeds; ++s) {
                    cfg.seed = seed + s;
                    const auto report = run_experiment(cfg);
                    csv.row(metric, to_string(sweep.model), sweep.axis, value, cfg.seed,
                            report.failed_fraction);
                }
            }
        }
    }
    return {path};
}

std::vector<std::string> preset_similarity(const ConfigMap& overrides, std::uint64_t seed,
                                           std::uint32_t seeds, const std::string& out_dir) {
    SyntheticGraphSpec spec;
    if (auto it = overrides.find("n_regular"); it != overrides.end())
        spec.n_regular = static_cast<std::uint32_t>(std::stoul(it->second));
    if (auto it = overrides.find("n_malicious"); it != overrides.end())
        spec.n_malicious = static_cast<std::uint32_t>(std::stoul(it->second));
    std::vector<std::string> files;
    std::vector<double> etas = {0.3, 0.5, 0.7, 0.9};
    if (auto it = overrides.find("eta"); it != overrides.end()) etas = {std::stod(it->second)};

    const std::string summary_path = join_path(out_dir, "similarity_summary.csv");
    CsvWriter summary(summary_path,
                      {{"seed", std::to_string(seed)},
                       {"seeds", std::to_string(seeds)},
                       {"malicious_wiring", "ring of 1.0 chain edges"},
                       {"zipf", "value (R+1-r)/R, rank probability ~ 1/r"}});
    summary.header({"eta", "seed", "good_good", "cross_group", "malicious_malicious"});

    for (double eta : etas) {
        spec.eta = eta;
        for (std::uint32_t s = 0; s < seeds; ++s) {
            const std::uint64_t run_seed = seed + s;
            const auto ledger = build_synthetic_ledger(spec, run_seed);
            const auto sim = similarity_matrix(ledger, spec.population());
            const auto stats = summarize_similarity(sim, spec.n_regular);
            summary.row(eta, run_seed, stats.good_good, stats.cross_group,
                        stats.malicious_malicious);

            std::ostringstream name;
            name << "similarity_eta" << eta << "_seed" << run_seed << ".csv";
            const std::string matrix_path = join_path(out_dir, name.str());
            CsvWriter matrix(matrix_path, {{"eta", std::to_string(eta)},
                                           {"seed", std::to_string(run_seed)},
                                           {"n_regular", std::to_string(spec.n_regular)},
                                           {"n_malicious", std::to_string(spec.n_malicious)}});
            matrix.header({"v", "w", "similarity"});
            for (std::size_t v = 0; v < sim.size(); ++v)
                for (std::size_t w = 0; w < sim.size(); ++w)
                    matrix.row(v, w, sim[v][w]);
            files.push_back(matrix_path);
        }
    }
    files.push_back(summary_path);
    return files;
}

}  // namespace

std::vector<std::string> preset_names() {
    return {"cost-curves", "smp-behavior", "trajectories", "failed-fraction",
            "similarity-heatmap"};
}

std::vector<std::string> run_preset(const std::string& name, const ConfigMap& overrides,
                                    std::uint64_t seed, std::uint32_t seeds,
                                    const std::string& out_dir) {
    ensure_directory(out_dir);
    if (name == "cost-curves") return preset_cost_curves(out_dir);
    if (name == "smp-behavior") return preset_smp_behavior(overrides, seed, seeds, out_dir);
    if (name == "trajectories") return preset_trajectories(overrides, seed, seeds, out_dir);
    if (name == "failed-fraction")
        return preset_failed_fraction(overrides, seed, seeds, out_dir);
    if (name == "similarity-heatmap")
        return preset_similarity(overrides, seed, seeds, out_dir);
    throw std::invalid_argument("unknown preset: " + name);
}

std::vector<std::string> write_run_outputs(const ExperimentReport& report,
                                           const std::string& out_dir) {
    ensure_directory(out_dir);
    const auto meta = run_metadata(report.config);
    std::vector<std::string> files;

    const std::string summary_path = join_path(out_dir, "summary.csv");
    {
        CsvWriter csv(summary_path, meta);
        csv.header({"metric", "model", "seed", "transactions", "failed_fraction", "rounds",
                    "all_rounds_converged"});
        bool all_converged = true;
        for (bool c : report.round_converged) all_converged = all_converged && c;
        csv.row(report.config.metric, to_string(report.config.threat.model),
                report.config.seed, report.config.transactions, report.failed_fraction,
                report.rounds(), all_converged ? 1 : 0);
    }
    files.push_back(summary_path);

    const std::string traj_path = join_path(out_dir, "trajectories.csv");
    {
        CsvWriter csv(traj_path, meta);
        csv.header({"participant", "round", "score"});
        for (std::size_t round = 0; round < report.trust_rounds.size(); ++round)
            for (std::size_t id = 0; id < report.trust_rounds[round].size(); ++id)
                csv.row(id, round + 1, report.trust_rounds[round][id]);
    }
    files.push_back(traj_path);

    const std::string services_path = join_path(out_dir, "services.csv");
    {
        CsvWriter csv(services_path, meta);
        csv.header({"group", "authentic", "inauthentic"});
        csv.row("good", report.good_services.authentic, report.good_services.inauthentic);
        csv.row("malicious", report.malicious_services.authentic,
                report.malicious_services.inauthentic);
    }
    files.push_back(services_path);
    return files;
}

std::vector<GridCheck> verify_grid() {
    std::vector<GridCheck> checks;
    const std::vector<double> n_honest = {5, 10, 15};
    const std::vector<double> t_goods = {0.75, 0.85, 0.95};
    const double t_malicious = 0.35;

    for (ThreatModel model : {ThreatModel::A, ThreatModel::B}) {
        for (double nh : n_honest) {
            for (double tg : t_goods) {
                CostParams p;
                p.n_honest = nh;
                p.t_good = tg;
                p.t_malicious = t_malicious;
                checks.push_back({model, p, verify_cost_oracle(model, p)});
            }
        }
    }
    for (ThreatModel model :
         {ThreatModel::C, ThreatModel::D, ThreatModel::E, ThreatModel::F}) {
        for (double nh : n_honest) {
            for (int ih = 1; ih <= 19; ++ih) {
                CostParams p;
                p.n_honest = nh;
                p.services = ih;
                p.t_good = 0.85;
                p.eta = 0.2;
                p.gamma = 0.2;
                p.n_type_b = 20;
                if (model == ThreatModel::E && p.services <= 3.0 * nh * p.eta)
                    continue;  // outside the feasibility region
                checks.push_back({model, p, verify_cost_oracle(model, p)});
            }
        }
    }
    return checks;
}

std::vector<CostRow> cost_sweep(ThreatModel model, double t_good, double t_malicious,
                                double eta, double gamma) {
    std::vector<CostRow> rows;
    auto push = [&](const CostParams& p) {
        CostRow row;
        try {
            if (model == ThreatModel::D || model == ThreatModel::F) {
                // the minimal Type-D count is independent of the bridge count,
                // so size the bridges to match it
                CostParams probe = p;
                probe.n_type_b = 1;
                const auto first = closed_form_cost(model, probe);
                CostParams full = p;
                full.n_type_b = first.n_malicious;
                row.report = closed_form_cost(model, full);
            } else {
                row.report = closed_form_cost(model, p);
            }
        } catch (const std::invalid_argument& err) {
            row.feasible = false;
            row.note = err.what();
            row.report.model = model;
            row.report.params = p;
        }
        rows.push_back(row);
    };

    if (model == ThreatModel::A || model == ThreatModel::B) {
        for (int nh = 1; nh <= 19; ++nh) {
            CostParams p;
            p.n_honest = nh;
            p.t_good = t_good;
            p.t_malicious = t_malicious;
            push(p);
        }
    } else {
        for (double nh : {5.0, 10.0, 15.0}) {
            for (int ih = 1; ih <= 19; ++ih) {
                CostParams p;
                p.n_honest = nh;
                p.services = ih;
                p.t_good = t_good;
                p.eta = eta;
                p.gamma = gamma;
                push(p);
            }
        }
    }
    return rows;
}

}  // namespace trustlab
