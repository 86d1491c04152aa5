// Preset experiment suites mirroring the five study set-ups, plus the CSV
// writers shared with the `simulate` subcommand.

#pragma once

#include <string>
#include <vector>

#include "trustlab/attack_analysis.hpp"
#include "trustlab/config.hpp"
#include "trustlab/synthetic.hpp"

namespace trustlab {

// cost-curves | smp-behavior | trajectories | failed-fraction | similarity-heatmap
std::vector<std::string> preset_names();

// Runs a preset and writes its CSVs under out_dir. Overrides are applied to
// every simulation config the preset builds; seeds run seed .. seed+seeds-1.
// Returns the list of files written. Throws on unknown presets or override
// keys.
std::vector<std::string> run_preset(const std::string& name, const ConfigMap& overrides,
                                    std::uint64_t seed, std::uint32_t seeds,
                                    const std::string& out_dir);

// summary.csv, trajectories.csv, services.csv for one simulation run.
std::vector<std::string> write_run_outputs(const ExperimentReport& report,
                                           const std::string& out_dir);

// Attack-cost verification grid: every feasible Table-style parameter point
// for every model, checked through the scenario oracle.
struct GridCheck {
    ThreatModel model;
    CostParams params;
    OracleResult result;
};

std::vector<GridCheck> verify_grid();

// Closed-form sweep rows for the cost subcommand and the cost-curves preset.
struct CostRow {
    AttackCostReport report;
    bool feasible = true;
    std::string note;
};

std::vector<CostRow> cost_sweep(ThreatModel model, double t_good, double t_malicious,
                                double eta, double gamma);

}  // namespace trustlab
