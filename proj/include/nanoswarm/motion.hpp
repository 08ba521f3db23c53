#pragma once

#include <cstdint>
#include <random>

#include "nanoswarm/chemfield.hpp"
#include "nanoswarm/vec2.hpp"

namespace nanoswarm {

using AgentRng = std::mt19937_64;

enum class Mode { Explore, Follow };

struct MotionParams {
    double alpha = 2e-5;      // m, step length
    double b = 6e-11;         // orientation-bias
    double phi_max = 0.005;   // m, domain side
    double grad_floor = 1e-12;  // gradient norm below which Follow falls back to Explore
    int max_boundary_retries = 1000;

    void validate() const;
};

struct AgentState {
    int id = 0;
    Vec2 position;
    Vec2 orientation{1.0, 0.0};
    Mode mode = Mode::Explore;
    bool terminated = false;
    int terminal_site = -1;
};

/// Everything a movement step may read at time t. Deposits stamped t are
/// invisible through the strict time filter, so agents stepping within the
/// same timestep all see the same fields.
struct FieldSnapshot {
    std::int64_t t = 0;
    const SitePattern* pattern = nullptr;
    const DepositLog* log = nullptr;
    const FieldParams* field = nullptr;

    Vec2 gradient(Vec2 x) const { return grad_tot(t, x, *pattern, *log, *field); }
};

/// Maps an angle to the equivalent one in [-pi, pi).
double wrap_angle(double beta);

/// Heading for a noise angle beta in Explore mode: the unit vector at angle
/// beta from the x-axis.
Vec2 explore_heading(double beta);

/// Heading in Follow mode: mu rotated by the (already wrapped) noise angle
/// beta, normalized. Requires |mu| > 0.
Vec2 follow_heading(Vec2 mu, double beta);

/// Uniform random direction.
Vec2 sample_explore_heading(AgentRng& rng);

/// Gradient-aligned direction with orientation-bias noise: beta is normal
/// with standard deviation 1/(b*|mu|), wrapped into [-pi, pi). Requires
/// |mu| > 0.
Vec2 sample_follow_heading(Vec2 mu, double b, AgentRng& rng);

struct StepOutcome {
    AgentState agent;
    bool retries_exhausted = false;
};

/// One movement update. Explore agents draw a uniform heading; Follow agents
/// aim along the total-field gradient at their current position, falling back
/// to Explore when its norm is at or below grad_floor. Candidates leaving
/// [0, phi_max]^2 are rejected and the noise redrawn (mu unchanged) until a
/// candidate lands inside or max_boundary_retries is hit, in which case the
/// agent stays put for this timestep.
StepOutcome step_agent(const AgentState& agent, const FieldSnapshot& snapshot,
                       const MotionParams& params, AgentRng& rng);

}  // namespace nanoswarm
