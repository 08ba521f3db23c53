#pragma once

#include <cstdint>
#include <vector>

#include "nanoswarm/chemfield.hpp"
#include "nanoswarm/metrics.hpp"
#include "nanoswarm/motion.hpp"
#include "nanoswarm/protocol.hpp"

namespace nanoswarm {

/// Every model and experiment parameter in one record.
struct SimConfig {
    int n = 55;
    SitePattern pattern;
    FieldParams field;
    MotionParams motion;
    ThresholdParams thresholds;
    MetricParams metric;
    AlgorithmKind alg = AlgorithmKind::KM;
    std::int64_t t_star = 200000;
    int trials = 20;
    std::uint64_t base_seed = 1;

    /// Cross-checks the whole record; throws std::invalid_argument naming the
    /// offending parameter.
    void validate() const;
};

struct DropEvent {
    std::int64_t t = 0;
    int agent = 0;
    int site = 0;
    DropDecision decision;
};

/// In-flight state of one trial.
struct TrialState {
    std::vector<AgentState> agents;
    std::vector<AgentRng> rngs;  // one independent substream per agent
    DepositLog log;
    std::vector<DropEvent> events;
    long retry_failures = 0;
};

struct TrialResult {
    std::vector<std::int64_t> sample_times;       // 0, delta', ..., T*
    std::vector<std::vector<long>> k_series;      // [site][sample]
    std::vector<DropEvent> events;                // sorted by (t, agent)
    int never_terminated = 0;
    std::uint64_t seed = 0;
    long retry_failures = 0;
};

/// Agents at independent uniform positions in the domain, orientation (1,0),
/// mode fixed by the algorithm; empty deposit log.
TrialState init_trial(const SimConfig& config, std::uint64_t seed);

/// One cycle: step every live agent against the start-of-timestep fields,
/// detect site arrivals, decide drops against the same snapshot, then commit
/// all drops and terminations in ascending agent order.
void run_timestep(TrialState& state, const SimConfig& config, std::int64_t t);

/// Runs timesteps 1..T*, sampling per-site K counts every delta' steps.
/// Exits early once every agent has terminated; the sampled series is padded
/// with its final values so early exit is invisible in the output.
TrialResult run_trial(const SimConfig& config, std::uint64_t seed);

/// config.trials seeded trials (seed = base_seed + index), executed on up to
/// `threads` workers (0 = hardware concurrency). Results are ordered by trial
/// index and bit-identical regardless of thread count.
std::vector<TrialResult> run_experiment(const SimConfig& config, int threads = 0);

}  // namespace nanoswarm
