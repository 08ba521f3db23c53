#pragma once

#include <string>
#include <vector>

#include "nanoswarm/engine.hpp"

namespace nanoswarm {

/// The five benchmark site/demand arrangements, keyed "a".."e":
///   a - two well spaced-out sites, equal demand
///   b - two well spaced-out sites, unequal demand
///   c - five well spaced-out sites, equal demand
///   d - four clustered sites plus one faraway site, equal demand
///   e - one major site holding nearly all demand plus two outliers
/// Total demand is 50 in every arrangement. Throws on unknown keys.
SitePattern arrangement(const std::string& key);

std::vector<std::string> arrangement_keys();

/// The baseline parameter set used throughout the benchmark experiments:
/// n=55 agents in a 5 mm square, step and detection radius 20 um, marker
/// kernel m=1e-6, r_km=1, horizon 200000 steps, 20 trials, rate window
/// 30000 with threshold 3e-7, sampling every 500 steps. Signal-payload
/// settings default to the algorithm-comparison values (P_A=10, P_R=50,
/// D_A=D_R=1e-9, r_am=1e7 via k=1e6, b=6e-11). The pattern is left empty.
SimConfig paper_defaults();

/// Named parameter overlays matching the benchmark studies.
enum class StudyPreset {
    MarkerBias,          // marker-only runs, sweeping orientation-bias
    AmplifierBias,       // attractant runs, sweeping orientation-bias
    AmplifierPayload,    // attractant runs at b=5e-11, sweeping P_A
    RepellentThreshold,  // slow-repellent runs (D_R=1e-10) at b=4e-11, sweeping r_am
    RepellentBias,       // repellent runs, sweeping orientation-bias
    RepellentPayload,    // repellent runs at b=6e-11, sweeping P_R
    Comparison,          // per-algorithm best settings side by side
};

/// paper_defaults() with the study's fixed parameters applied.
SimConfig study_defaults(StudyPreset preset);

}  // namespace nanoswarm
