// Flat key-value experiment configuration: one `key = value` per line,
// `#` comments, unknown keys rejected.

#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "trustlab/simulation.hpp"

namespace trustlab {

using ConfigMap = std::map<std::string, std::string>;

ConfigMap parse_config(std::istream& in);
ConfigMap parse_config_file(const std::string& path);

// Builds a SimulationConfig from the map; unknown keys raise
// std::invalid_argument. Recognized keys: n_good, n_malicious, n_pretrusted,
// transactions, metric, model, f, eta, gamma, n_type_b, n_type_d, explore_p,
// responders_k, reeval_every, seed, good_noise, epsilon.
SimulationConfig simulation_config_from(const ConfigMap& map);

// Applies `key=value` override strings on top of a config map.
void apply_override(ConfigMap& map, const std::string& assignment);

// FNV-1a digest of the canonicalized map, for reproducibility metadata.
std::string config_digest(const ConfigMap& map);
ConfigMap to_config_map(const SimulationConfig& cfg);

}  // namespace trustlab
