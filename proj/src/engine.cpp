#include "nanoswarm/engine.hpp"

#include <atomic>
#include <cstdio>
#include <stdexcept>
#include <thread>

namespace nanoswarm {

void SimConfig::validate() const {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (t_star < 1) throw std::invalid_argument("T_star must be >= 1");
    field.validate();
    motion.validate();
    thresholds.validate();
    metric.validate();
    if (t_star % metric.delta_prime != 0)
        throw std::invalid_argument("delta_prime must divide T_star");
    pattern.validate(motion.phi_max, thresholds.epsilon);
}

namespace {

// Deterministic substream derivation (splitmix64 finalizer). Every agent gets
// its own engine so stepping order and thread count cannot shift the draws.
std::uint64_t mix64(std::uint64_t base, std::uint64_t salt) {
    std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

TrialState init_trial(const SimConfig& config, std::uint64_t seed) {
    TrialState state;
    state.log = DepositLog(config.pattern.size());
    state.agents.reserve(config.n);
    state.rngs.reserve(config.n);

    AgentRng init_stream(mix64(seed, 0));
    std::uniform_real_distribution<double> u(0.0, config.motion.phi_max);
    const Mode mode = mode_for(config.alg);
    for (int i = 0; i < config.n; ++i) {
        AgentState a;
        a.id = i;
        const double x = u(init_stream);
        const double y = u(init_stream);
        a.position = {x, y};
        a.mode = mode;
        state.agents.push_back(a);
        state.rngs.emplace_back(mix64(seed, 1 + static_cast<std::uint64_t>(i)));
    }
    return state;
}

void run_timestep(TrialState& state, const SimConfig& config, std::int64_t t) {
    const FieldSnapshot snapshot{t, &config.pattern, &state.log, &config.field};

    struct Pending {
        int agent;
        int site;
        DropDecision decision;
    };
    std::vector<Pending> pending;

    for (AgentState& agent : state.agents) {
        if (agent.terminated) continue;
        StepOutcome out = step_agent(agent, snapshot, config.motion, state.rngs[agent.id]);
        if (out.retries_exhausted) {
            ++state.retry_failures;
            continue;
        }
        agent = out.agent;
        if (auto site = detect_site(agent.position, config.pattern, config.thresholds.epsilon)) {
            const DropDecision d = decide_drops(config.alg, *site, t, config.pattern, state.log,
                                                config.field, config.thresholds);
            agent.terminated = true;
            agent.terminal_site = *site;
            pending.push_back({agent.id, *site, d});
        }
    }

    // Commit phase: agents are visited in ascending id, so the event log is
    // canonical and same-timestep arrivals all decided on the frozen fields.
    for (const Pending& p : pending) {
        state.log.record_k(p.site);
        if (p.decision.drop_a) state.log.record_a(p.site, t);
        if (p.decision.drop_r) state.log.record_r(p.site, t);
        state.events.push_back({t, p.agent, p.site, p.decision});
    }
}

TrialResult run_trial(const SimConfig& config, std::uint64_t seed) {
    TrialState state = init_trial(config, seed);
    const std::int64_t dp = config.metric.delta_prime;
    const std::size_t n_samples = static_cast<std::size_t>(config.t_star / dp) + 1;
    const std::size_t c = config.pattern.size();

    TrialResult result;
    result.seed = seed;
    result.sample_times.reserve(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i) result.sample_times.push_back(dp * static_cast<std::int64_t>(i));
    result.k_series.assign(c, {});
    for (auto& s : result.k_series) s.reserve(n_samples);

    std::size_t samples = 0;
    const auto record_sample = [&] {
        for (std::size_t j = 0; j < c; ++j) result.k_series[j].push_back(state.log.k_count(j));
        ++samples;
    };
    record_sample();  // t = 0

    std::size_t live = state.agents.size();
    for (std::int64_t t = 1; t <= config.t_star && live > 0; ++t) {
        run_timestep(state, config, t);
        live = state.agents.size() - state.events.size();
        if (t % dp == 0) record_sample();
    }
    // Once every agent has terminated nothing can change; the sampled series
    // is padded so an early exit is indistinguishable from a full run.
    while (samples < n_samples) record_sample();

    result.events = std::move(state.events);
    result.never_terminated = static_cast<int>(live);
    result.retry_failures = state.retry_failures;
    if (state.retry_failures > 0)
        std::fprintf(stderr, "warning: seed %llu: %ld boundary-retry exhaustions left agents in place\n",
                     static_cast<unsigned long long>(seed), state.retry_failures);
    return result;
}

std::vector<TrialResult> run_experiment(const SimConfig& config, int threads) {
    const int trials = config.trials;
    std::vector<TrialResult> results(trials);
    int workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    if (workers > trials) workers = trials;

    if (workers == 1) {
        for (int i = 0; i < trials; ++i) results[i] = run_trial(config, config.base_seed + i);
        return results;
    }

    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < trials; i = next.fetch_add(1))
                results[i] = run_trial(config, config.base_seed + i);
        });
    }
    for (auto& th : pool) th.join();
    return results;
}

}  // namespace nanoswarm
