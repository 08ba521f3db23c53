#include "nanoswarm/scenarios.hpp"

#include <stdexcept>

namespace nanoswarm {

SitePattern arrangement(const std::string& key) {
    SitePattern p;
    if (key == "a") {
        p.sites = {{{0.0015, 0.0025}, 25.0}, {{0.0035, 0.0025}, 25.0}};
    } else if (key == "b") {
        p.sites = {{{0.0015, 0.0025}, 15.0}, {{0.0035, 0.0025}, 35.0}};
    } else if (key == "c") {
        p.sites = {{{0.0025, 0.0025}, 10.0},
                   {{0.001, 0.004}, 10.0},
                   {{0.001, 0.001}, 10.0},
                   {{0.004, 0.004}, 10.0},
                   {{0.004, 0.001}, 10.0}};
    } else if (key == "d") {
        p.sites = {{{0.0008, 0.0027}, 10.0},
                   {{0.0012, 0.0023}, 10.0},
                   {{0.0008, 0.0023}, 10.0},
                   {{0.0012, 0.0027}, 10.0},
                   {{0.004, 0.0025}, 10.0}};
    } else if (key == "e") {
        p.sites = {{{0.0025, 0.0025}, 46.0}, {{0.001, 0.002}, 2.0}, {{0.004, 0.003}, 2.0}};
    } else {
        throw std::invalid_argument("unknown arrangement key '" + key + "' (expected a..e)");
    }
    return p;
}

std::vector<std::string> arrangement_keys() { return {"a", "b", "c", "d", "e"}; }

SimConfig paper_defaults() {
    SimConfig cfg;
    cfg.n = 55;
    cfg.t_star = 200000;
    cfg.trials = 20;
    cfg.base_seed = 1;
    cfg.alg = AlgorithmKind::KM;

    cfg.motion.phi_max = 0.005;
    cfg.motion.alpha = 2e-5;
    cfg.motion.b = 6e-11;
    cfg.motion.grad_floor = 1e-12;
    cfg.motion.max_boundary_retries = 1000;

    cfg.field.m = 1e-6;
    cfg.field.p_a = 10.0;
    cfg.field.d_a = 1e-9;
    cfg.field.p_r = 50.0;
    cfg.field.d_r = 1e-9;

    cfg.thresholds.r_km = 1.0;
    cfg.thresholds.k = 1e6;  // r_am = 1e7 at P_A = 10
    cfg.thresholds.epsilon = 2e-5;

    cfg.metric.delta = 30000;
    cfg.metric.d_thresh = 3e-7;
    cfg.metric.delta_prime = 500;
    return cfg;
}

SimConfig study_defaults(StudyPreset preset) {
    SimConfig cfg = paper_defaults();
    switch (preset) {
        case StudyPreset::MarkerBias:
            cfg.alg = AlgorithmKind::KM;
            break;
        case StudyPreset::AmplifierBias:
            cfg.alg = AlgorithmKind::KMA;
            break;
        case StudyPreset::AmplifierPayload:
            cfg.alg = AlgorithmKind::KMA;
            cfg.motion.b = 5e-11;
            break;
        case StudyPreset::RepellentThreshold:
            cfg.alg = AlgorithmKind::KMAR;
            cfg.motion.b = 4e-11;
            cfg.field.d_r = 1e-10;
            break;
        case StudyPreset::RepellentBias:
            cfg.alg = AlgorithmKind::KMAR;
            break;
        case StudyPreset::RepellentPayload:
            cfg.alg = AlgorithmKind::KMAR;
            cfg.motion.b = 6e-11;
            break;
        case StudyPreset::Comparison:
            cfg.alg = AlgorithmKind::KMAR;
            cfg.motion.b = 1e-10;
            break;
    }
    return cfg;
}

}  // namespace nanoswarm
