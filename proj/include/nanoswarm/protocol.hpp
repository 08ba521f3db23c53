#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "nanoswarm/chemfield.hpp"
#include "nanoswarm/motion.hpp"

namespace nanoswarm {

/// The four payload protocols. Serialized exactly as these tokens.
enum class AlgorithmKind { RW, KM, KMA, KMAR };

std::string to_string(AlgorithmKind alg);
std::optional<AlgorithmKind> algorithm_from_string(const std::string& token);

struct ThresholdParams {
    double r_km = 1.0;    // kill ratio: K payloads per unit of site strength
    double k = 1e6;       // multiplier in the A-vs-R switch threshold
    double epsilon = 2e-5;  // m, site detection radius

    /// Switch threshold for the attractant-to-marker ratio. Derived, never
    /// stored: r_am = k * r_km * P_A.
    double r_am(double p_a) const { return k * r_km * p_a; }

    void validate() const;
};

struct DropDecision {
    bool drop_k = true;
    bool drop_a = false;
    bool drop_r = false;
};

/// Movement mode an algorithm's agents use: RW explores blindly, the rest
/// follow the chemical fields.
Mode mode_for(AlgorithmKind alg);

/// Index of the unique site within epsilon (closed ball) of the position, if
/// any. Patterns guarantee pairwise site distances > epsilon, so at most one
/// site can match; the nearest is returned.
std::optional<int> detect_site(Vec2 position, const SitePattern& pattern, double epsilon);

/// The payload rule applied when an agent reaches site j at time t. K is
/// always dropped. KMA adds the attractant; KMAR drops the attractant while
/// the local attractant-to-marker ratio is below r_am and the repellent once
/// it reaches it. The ratio uses the field as of the start of the timestep,
/// so same-timestep arrivals decide identically. A zero-strength site makes
/// the ratio +inf: the repellent is dropped.
DropDecision decide_drops(AlgorithmKind alg, int site, std::int64_t t,
                          const SitePattern& pattern, const DepositLog& log,
                          const FieldParams& field, const ThresholdParams& thresholds);

}  // namespace nanoswarm
