#include "nanoswarm/config.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "nanoswarm/format.hpp"
#include "nanoswarm/scenarios.hpp"

namespace nanoswarm {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_number(const std::string& key, const std::string& text) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size() || !std::isfinite(v)) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': expected a number, got '" + text + "'");
    }
}

std::int64_t parse_integer(const std::string& key, double v) {
    const double r = std::nearbyint(v);
    if (r != v) throw ConfigError("key '" + key + "': expected an integer");
    return static_cast<std::int64_t>(r);
}

std::vector<double> parse_list(const std::string& key, const std::string& text) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) throw ConfigError("key '" + key + "': empty list element");
        values.push_back(parse_number(key, item));
    }
    if (values.empty()) throw ConfigError("key '" + key + "': empty list");
    return values;
}

using Setter = std::function<void(SimConfig&, double)>;

const std::map<std::string, Setter>& param_table() {
    static const std::map<std::string, Setter> table = {
        {"n", [](SimConfig& c, double v) { c.n = static_cast<int>(parse_integer("n", v)); }},
        {"phi_max", [](SimConfig& c, double v) { c.motion.phi_max = v; }},
        {"alpha", [](SimConfig& c, double v) { c.motion.alpha = v; }},
        {"epsilon", [](SimConfig& c, double v) { c.thresholds.epsilon = v; }},
        {"m", [](SimConfig& c, double v) { c.field.m = v; }},
        {"b", [](SimConfig& c, double v) { c.motion.b = v; }},
        {"P_A", [](SimConfig& c, double v) { c.field.p_a = v; }},
        {"D_A", [](SimConfig& c, double v) { c.field.d_a = v; }},
        {"P_R", [](SimConfig& c, double v) { c.field.p_r = v; }},
        {"D_R", [](SimConfig& c, double v) { c.field.d_r = v; }},
        {"r_KM", [](SimConfig& c, double v) { c.thresholds.r_km = v; }},
        {"k", [](SimConfig& c, double v) { c.thresholds.k = v; }},
        {"T_star", [](SimConfig& c, double v) { c.t_star = parse_integer("T_star", v); }},
        {"trials", [](SimConfig& c, double v) { c.trials = static_cast<int>(parse_integer("trials", v)); }},
        {"seed",
         [](SimConfig& c, double v) { c.base_seed = static_cast<std::uint64_t>(parse_integer("seed", v)); }},
        {"delta", [](SimConfig& c, double v) { c.metric.delta = parse_integer("delta", v); }},
        {"D_thresh", [](SimConfig& c, double v) { c.metric.d_thresh = v; }},
        {"delta_prime",
         [](SimConfig& c, double v) { c.metric.delta_prime = parse_integer("delta_prime", v); }},
        {"grad_floor", [](SimConfig& c, double v) { c.motion.grad_floor = v; }},
        {"max_boundary_retries",
         [](SimConfig& c, double v) {
             c.motion.max_boundary_retries = static_cast<int>(parse_integer("max_boundary_retries", v));
         }},
    };
    return table;
}

}  // namespace

void apply_param(SimConfig& config, const std::string& key, double value) {
    const auto it = param_table().find(key);
    if (it == param_table().end()) throw ConfigError("unknown parameter key '" + key + "'");
    it->second(config, value);
}

bool is_numeric_key(const std::string& key) { return param_table().count(key) > 0; }

std::size_t ExperimentSpec::run_count() const {
    std::size_t count = 1;
    for (const auto& axis : sweep) count *= axis.values.size();
    return count;
}

SimConfig ExperimentSpec::config_for(std::size_t idx, std::vector<std::string>* labels) const {
    SimConfig cfg = base;
    if (labels) labels->clear();
    // First axis slowest, last fastest.
    std::size_t stride = run_count();
    for (const auto& axis : sweep) {
        stride /= axis.values.size();
        const std::size_t pos = (idx / stride) % axis.values.size();
        const double v = axis.values[pos];
        apply_param(cfg, axis.key, v);
        if (labels) labels->push_back(axis.key + "=" + format_double(v));
    }
    return cfg;
}

ExperimentSpec parse_config(const std::string& text) {
    ExperimentSpec spec;
    spec.base = paper_defaults();

    std::vector<double> sites_flat;
    std::vector<double> demands;
    bool have_arrangement = false;

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError("line " + std::to_string(line_no) + ": empty key");

        if (key == "name") {
            spec.name = value;
        } else if (key == "alg") {
            const auto alg = algorithm_from_string(value);
            if (!alg) throw ConfigError("key 'alg': expected RW, KM, KMA or KMAR, got '" + value + "'");
            spec.base.alg = *alg;
        } else if (key == "arrangement") {
            try {
                spec.base.pattern = arrangement(value);
            } catch (const std::exception& e) {
                throw ConfigError(std::string("key 'arrangement': ") + e.what());
            }
            spec.arrangement = value;
            have_arrangement = true;
        } else if (key == "sites") {
            sites_flat = parse_list(key, value);
        } else if (key == "demands") {
            demands = parse_list(key, value);
        } else if (key == "out_dir") {
            spec.out_dir = value;
        } else if (key == "seed") {
            try {
                std::size_t used = 0;
                spec.base.base_seed = std::stoull(value, &used);
                if (used != value.size()) throw std::invalid_argument(value);
            } catch (const std::exception&) {
                throw ConfigError("key 'seed': expected an unsigned integer, got '" + value + "'");
            }
        } else if (key.rfind("sweep.", 0) == 0) {
            const std::string target = key.substr(6);
            if (!is_numeric_key(target)) throw ConfigError("key '" + key + "': unknown sweep target");
            spec.sweep.push_back({target, parse_list(key, value)});
        } else if (is_numeric_key(key)) {
            apply_param(spec.base, key, parse_number(key, value));
        } else {
            throw ConfigError("unknown key '" + key + "'");
        }
    }

    if (!sites_flat.empty() || !demands.empty()) {
        if (have_arrangement)
            throw ConfigError("keys 'sites'/'demands' conflict with 'arrangement'");
        if (sites_flat.size() % 2 != 0)
            throw ConfigError("key 'sites': expected x,y pairs (even count)");
        if (sites_flat.size() / 2 != demands.size())
            throw ConfigError("keys 'sites'/'demands': " + std::to_string(sites_flat.size() / 2) +
                              " sites but " + std::to_string(demands.size()) + " demands");
        SitePattern p;
        for (std::size_t j = 0; j < demands.size(); ++j)
            p.sites.push_back({{sites_flat[2 * j], sites_flat[2 * j + 1]}, demands[j]});
        spec.base.pattern = p;
        spec.arrangement = "custom";
    } else if (!have_arrangement) {
        throw ConfigError("missing 'arrangement' (or inline 'sites' and 'demands')");
    }

    if (spec.run_count() > kMaxSweepRuns)
        throw ConfigError("sweep produces " + std::to_string(spec.run_count()) +
                          " runs, above the cap of " + std::to_string(kMaxSweepRuns));

    // Validate the base and every sweep point up front so a bad combination
    // is rejected before anything runs.
    try {
        spec.base.validate();
        for (std::size_t i = 0; i < spec.run_count(); ++i) spec.config_for(i).validate();
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
    return spec;
}

ExperimentSpec load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

}  // namespace nanoswarm
