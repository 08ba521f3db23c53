#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "nanoswarm/engine.hpp"

namespace nanoswarm {

class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct SweepAxis {
    std::string key;
    std::vector<double> values;
};

/// A parsed experiment description: a base configuration plus optional sweep
/// axes whose Cartesian product defines the runs.
struct ExperimentSpec {
    std::string name = "experiment";
    std::string arrangement = "custom";  // "a".."e" or "custom"
    SimConfig base;
    std::vector<SweepAxis> sweep;
    std::string out_dir = "out";

    std::size_t run_count() const;
    /// Base config with the idx-th sweep combination applied (first axis
    /// slowest). Also returns the "key=value" pairs for that combination.
    SimConfig config_for(std::size_t idx, std::vector<std::string>* labels = nullptr) const;
};

/// Numeric parameter keys settable in config files and sweepable. Setting an
/// unknown key or a malformed value throws ConfigError naming the key.
void apply_param(SimConfig& config, const std::string& key, double value);
bool is_numeric_key(const std::string& key);

/// Parses a flat key=value document ('#' comments, blank lines ignored).
/// Unset keys fall back to the benchmark defaults; the site pattern comes
/// from `arrangement=a..e` or inline `sites=x0,y0,x1,y1,...` plus
/// `demands=p0,p1,...`. Sweep axes are given as `sweep.<key>=v1,v2,...`.
/// The parsed spec is fully validated. Throws ConfigError.
ExperimentSpec parse_config(const std::string& text);

/// parse_config on a file's contents.
ExperimentSpec load_config(const std::string& path);

/// Number of sweep runs allowed per experiment.
inline constexpr std::size_t kMaxSweepRuns = 10000;

}  // namespace nanoswarm
