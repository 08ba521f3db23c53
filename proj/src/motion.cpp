#include "nanoswarm/motion.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nanoswarm {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool inside(Vec2 p, double side) {
    return p.x >= 0.0 && p.x <= side && p.y >= 0.0 && p.y <= side;
}
}  // namespace

void MotionParams::validate() const {
    if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be > 0");
    if (!(b > 0.0)) throw std::invalid_argument("b must be > 0");
    if (!(phi_max > alpha)) throw std::invalid_argument("phi_max must exceed alpha");
    if (!(grad_floor >= 0.0)) throw std::invalid_argument("grad_floor must be >= 0");
    if (max_boundary_retries < 1) throw std::invalid_argument("max_boundary_retries must be >= 1");
}

double wrap_angle(double beta) {
    double r = std::fmod(beta + kPi, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    return r - kPi;
}

Vec2 explore_heading(double beta) { return {std::cos(beta), std::sin(beta)}; }

Vec2 follow_heading(Vec2 mu, double beta) {
    const Vec2 r = rotate(mu, beta);
    return r / r.norm();
}

Vec2 sample_explore_heading(AgentRng& rng) {
    const double beta = std::uniform_real_distribution<double>(-kPi, kPi)(rng);
    return explore_heading(beta);
}

Vec2 sample_follow_heading(Vec2 mu, double b, AgentRng& rng) {
    // Noise scale (the standard deviation, not the variance) is 1/(b*|mu|).
    // Capture strength therefore falls off sharply once gradients weaken,
    // which is what makes the swarm's settling time so sensitive to b.
    const double sigma = 1.0 / (b * mu.norm());
    const double beta = std::normal_distribution<double>(0.0, sigma)(rng);
    return follow_heading(mu, wrap_angle(beta));
}

StepOutcome step_agent(const AgentState& agent, const FieldSnapshot& snapshot,
                       const MotionParams& params, AgentRng& rng) {
    Vec2 mu;
    bool follow = agent.mode == Mode::Follow;
    if (follow) {
        mu = snapshot.gradient(agent.position);
        // The heading-noise scale diverges on a vanishing gradient; walk blind there.
        if (!(mu.norm() > params.grad_floor)) follow = false;
    }

    for (int attempt = 0; attempt < params.max_boundary_retries; ++attempt) {
        const Vec2 heading =
            follow ? sample_follow_heading(mu, params.b, rng) : sample_explore_heading(rng);
        const Vec2 candidate = agent.position + params.alpha * heading;
        if (inside(candidate, params.phi_max)) {
            AgentState next = agent;
            next.position = candidate;
            next.orientation = heading;
            return {next, false};
        }
    }
    return {agent, true};
}

}  // namespace nanoswarm
