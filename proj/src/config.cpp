#include "trustlab/config.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace trustlab {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

const std::set<std::string>& known_keys() {
    static const std::set<std::string> keys = {
        "n_good",      "n_malicious", "n_pretrusted", "transactions", "metric",
        "model",       "f",           "eta",          "gamma",        "n_type_b",
        "n_type_d",    "explore_p",   "responders_k", "reeval_every", "seed",
        "good_noise",  "epsilon",
    };
    return keys;
}

}  // namespace

ConfigMap parse_config(std::istream& in) {
    ConfigMap map;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        " is not key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        " has an empty key or value");
        map[key] = value;
    }
    return map;
}

ConfigMap parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file " + path);
    return parse_config(in);
}

void apply_override(ConfigMap& map, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos)
        throw std::invalid_argument("override is not key=value: " + assignment);
    map[assignment.substr(0, eq)] = assignment.substr(eq + 1);
}

SimulationConfig simulation_config_from(const ConfigMap& map) {
    for (const auto& [key, value] : map) {
        (void)value;
        if (!known_keys().count(key))
            throw std::invalid_argument("unknown config key: " + key);
    }
    SimulationConfig cfg;
    auto u32 = [&](const char* key, std::uint32_t fallback) {
        auto it = map.find(key);
        return it == map.end() ? fallback
                               : static_cast<std::uint32_t>(std::stoul(it->second));
    };
    auto u64 = [&](const char* key, std::uint64_t fallback) {
        auto it = map.find(key);
        return it == map.end() ? fallback : std::stoull(it->second);
    };
    auto real = [&](const char* key, double fallback) {
        auto it = map.find(key);
        return it == map.end() ? fallback : std::stod(it->second);
    };
    cfg.n_good = u32("n_good", cfg.n_good);
    cfg.n_malicious = u32("n_malicious", cfg.n_malicious);
    cfg.n_pretrusted = u32("n_pretrusted", cfg.n_pretrusted);
    cfg.transactions = u64("transactions", cfg.transactions);
    if (auto it = map.find("metric"); it != map.end()) cfg.metric = it->second;
    if (auto it = map.find("model"); it != map.end())
        cfg.threat.model = threat_model_from_string(it->second);
    cfg.threat.f = real("f", cfg.threat.f);
    cfg.threat.eta = real("eta", cfg.threat.eta);
    cfg.threat.gamma = real("gamma", cfg.threat.gamma);
    cfg.threat.n_type_b = u32("n_type_b", cfg.threat.n_type_b);
    cfg.threat.n_type_d = u32("n_type_d", cfg.threat.n_type_d);
    cfg.explore_p = real("explore_p", cfg.explore_p);
    cfg.responders_k = u32("responders_k", cfg.responders_k);
    cfg.reeval_every = u64("reeval_every", cfg.reeval_every);
    cfg.seed = u64("seed", cfg.seed);
    cfg.good_noise = real("good_noise", cfg.good_noise);
    cfg.epsilon = real("epsilon", cfg.epsilon);
    return cfg;
}

ConfigMap to_config_map(const SimulationConfig& cfg) {
    ConfigMap map;
    map["n_good"] = std::to_string(cfg.n_good);
    map["n_malicious"] = std::to_string(cfg.n_malicious);
    map["n_pretrusted"] = std::to_string(cfg.n_pretrusted);
    map["transactions"] = std::to_string(cfg.transactions);
    map["metric"] = cfg.metric;
    map["model"] = to_string(cfg.threat.model);
    auto real = [](double v) {
        std::ostringstream out;
        out << v;
        return out.str();
    };
    map["f"] = real(cfg.threat.f);
    map["eta"] = real(cfg.threat.eta);
    map["gamma"] = real(cfg.threat.gamma);
    map["n_type_b"] = std::to_string(cfg.threat.n_type_b);
    map["n_type_d"] = std::to_string(cfg.threat.n_type_d);
    map["explore_p"] = real(cfg.explore_p);
    map["responders_k"] = std::to_string(cfg.responders_k);
    map["reeval_every"] = std::to_string(cfg.reeval_every);
    map["seed"] = std::to_string(cfg.seed);
    map["good_noise"] = real(cfg.good_noise);
    map["epsilon"] = real(cfg.epsilon);
    return map;
}

std::string config_digest(const ConfigMap& map) {
    std::string canonical;
    for (const auto& [key, value] : map) {
        canonical += key;
        canonical += '=';
        canonical += value;
        canonical += '\n';
    }
    const std::uint64_t h = fnv1a64(canonical);
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

}  // namespace trustlab
