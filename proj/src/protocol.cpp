#include "nanoswarm/protocol.hpp"

#include <stdexcept>

namespace nanoswarm {

std::string to_string(AlgorithmKind alg) {
    switch (alg) {
        case AlgorithmKind::RW: return "RW";
        case AlgorithmKind::KM: return "KM";
        case AlgorithmKind::KMA: return "KMA";
        case AlgorithmKind::KMAR: return "KMAR";
    }
    throw std::logic_error("unreachable");
}

std::optional<AlgorithmKind> algorithm_from_string(const std::string& token) {
    if (token == "RW") return AlgorithmKind::RW;
    if (token == "KM") return AlgorithmKind::KM;
    if (token == "KMA") return AlgorithmKind::KMA;
    if (token == "KMAR") return AlgorithmKind::KMAR;
    return std::nullopt;
}

void ThresholdParams::validate() const {
    if (!(r_km > 0.0)) throw std::invalid_argument("r_KM must be > 0");
    if (!(k > 0.0)) throw std::invalid_argument("k must be > 0");
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
}

Mode mode_for(AlgorithmKind alg) {
    return alg == AlgorithmKind::RW ? Mode::Explore : Mode::Follow;
}

std::optional<int> detect_site(Vec2 position, const SitePattern& pattern, double epsilon) {
    int best = -1;
    double best_dist = 0.0;
    for (std::size_t j = 0; j < pattern.sites.size(); ++j) {
        const double dist = (pattern.sites[j].pos - position).norm();
        if (dist <= epsilon && (best < 0 || dist < best_dist)) {
            best = static_cast<int>(j);
            best_dist = dist;
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

DropDecision decide_drops(AlgorithmKind alg, int site, std::int64_t t,
                          const SitePattern& pattern, const DepositLog& log,
                          const FieldParams& field, const ThresholdParams& thresholds) {
    DropDecision d;
    switch (alg) {
        case AlgorithmKind::RW:
        case AlgorithmKind::KM:
            break;
        case AlgorithmKind::KMA:
            d.drop_a = true;
            break;
        case AlgorithmKind::KMAR: {
            const Site& s = pattern.sites[static_cast<std::size_t>(site)];
            if (s.strength > 0.0) {
                const double q = gamma_a(t, s.pos, pattern, log, field) / s.strength;
                if (q < thresholds.r_am(field.p_a))
                    d.drop_a = true;
                else
                    d.drop_r = true;
            } else {
                // Zero-demand site: ratio reads +inf, release the repellent.
                d.drop_r = true;
            }
            break;
        }
    }
    return d;
}

}  // namespace nanoswarm
