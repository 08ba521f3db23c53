#include "nanoswarm/chemfield.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nanoswarm {

namespace {
constexpr double kPi = std::numbers::pi;
}

void SitePattern::validate(double domain_side, double min_separation) const {
    if (sites.empty()) throw std::invalid_argument("pattern: no sites");
    bool any_positive = false;
    for (std::size_t j = 0; j < sites.size(); ++j) {
        const Site& s = sites[j];
        if (!(s.pos.x >= 0.0 && s.pos.x <= domain_side && s.pos.y >= 0.0 && s.pos.y <= domain_side))
            throw std::invalid_argument("pattern: site " + std::to_string(j) + " outside domain");
        if (!(s.strength >= 0.0))
            throw std::invalid_argument("pattern: site " + std::to_string(j) + " has negative strength");
        any_positive |= s.strength > 0.0;
        for (std::size_t i = 0; i < j; ++i) {
            if ((sites[i].pos - s.pos).norm() <= min_separation)
                throw std::invalid_argument("pattern: sites " + std::to_string(i) + " and " +
                                            std::to_string(j) + " closer than the detection radius");
        }
    }
    if (!any_positive) throw std::invalid_argument("pattern: all site strengths are zero");
}

void FieldParams::validate() const {
    if (!(m > 0.0)) throw std::invalid_argument("m must be > 0");
    if (!(d_a > 0.0)) throw std::invalid_argument("D_A must be > 0");
    if (!(d_r > 0.0)) throw std::invalid_argument("D_R must be > 0");
    if (!(p_a >= 0.0)) throw std::invalid_argument("P_A must be >= 0");
    if (!(p_r >= 0.0)) throw std::invalid_argument("P_R must be >= 0");
}

void DepositLog::record_a(std::size_t site, std::int64_t t) {
    auto& times = sites_[site].a_times;
    if (t < 0 || (!times.empty() && t < times.back()))
        throw std::invalid_argument("deposit timestamps must be nondecreasing and nonnegative");
    times.push_back(t);
}

void DepositLog::record_r(std::size_t site, std::int64_t t) {
    auto& times = sites_[site].r_times;
    if (t < 0 || (!times.empty() && t < times.back()))
        throw std::invalid_argument("deposit timestamps must be nondecreasing and nonnegative");
    times.push_back(t);
}

long DepositLog::total_a() const {
    long n = 0;
    for (const auto& s : sites_) n += static_cast<long>(s.a_times.size());
    return n;
}

long DepositLog::total_r() const {
    long n = 0;
    for (const auto& s : sites_) n += static_cast<long>(s.r_times.size());
    return n;
}

double gamma_m(Vec2 x, const SitePattern& pattern, const FieldParams& params) {
    const double inv_pim = 1.0 / (kPi * params.m);
    double acc = 0.0;
    for (const Site& s : pattern.sites)
        acc += s.strength * inv_pim * std::exp(-(s.pos - x).norm2() / params.m);
    return acc;
}

Vec2 grad_m(Vec2 x, const SitePattern& pattern, const FieldParams& params) {
    const double inv_pim = 1.0 / (kPi * params.m);
    Vec2 acc;
    for (const Site& s : pattern.sites) {
        const Vec2 d = s.pos - x;
        const double w = s.strength * inv_pim * std::exp(-d.norm2() / params.m) * (2.0 / params.m);
        acc = acc + w * d;
    }
    return acc;
}

namespace {

// Shared kernel of the attractant/repellent fields: instantaneous point
// sources released at the logged timesteps, queried at integer time t.
// Entries stamped >= t never contribute; timestamp lists are sorted, so the
// scan stops at the first such entry. Terms are scaled individually, which
// keeps the sum exactly additive over deposits.

template <typename TimesOf>
double diffusion_value(std::int64_t t, Vec2 x, const SitePattern& pattern, double payload,
                       double coeff, TimesOf times_of) {
    if (payload == 0.0) return 0.0;
    const double scale = payload / (4.0 * kPi * coeff);
    double acc = 0.0;
    for (std::size_t j = 0; j < pattern.sites.size(); ++j) {
        const double d2 = (pattern.sites[j].pos - x).norm2();
        for (std::int64_t ts : times_of(j)) {
            if (ts >= t) break;
            const double dt = static_cast<double>(t - ts);
            acc += scale / dt * std::exp(-d2 / (4.0 * coeff * dt));
        }
    }
    return acc;
}

template <typename TimesOf>
Vec2 diffusion_gradient(std::int64_t t, Vec2 x, const SitePattern& pattern, double payload,
                        double coeff, TimesOf times_of) {
    if (payload == 0.0) return {};
    const double scale = payload / (4.0 * kPi * coeff);
    Vec2 acc;
    for (std::size_t j = 0; j < pattern.sites.size(); ++j) {
        const Vec2 d = pattern.sites[j].pos - x;
        const double d2 = d.norm2();
        for (std::int64_t ts : times_of(j)) {
            if (ts >= t) break;
            const double dt = static_cast<double>(t - ts);
            const double denom = 4.0 * coeff * dt;
            const double w = scale / dt * std::exp(-d2 / denom) * (2.0 / denom);
            acc = acc + w * d;
        }
    }
    return acc;
}

}  // namespace

double gamma_a(std::int64_t t, Vec2 x, const SitePattern& pattern, const DepositLog& log,
               const FieldParams& params) {
    return diffusion_value(t, x, pattern, params.p_a, params.d_a,
                           [&](std::size_t j) -> const auto& { return log.a_times(j); });
}

Vec2 grad_a(std::int64_t t, Vec2 x, const SitePattern& pattern, const DepositLog& log,
            const FieldParams& params) {
    return diffusion_gradient(t, x, pattern, params.p_a, params.d_a,
                              [&](std::size_t j) -> const auto& { return log.a_times(j); });
}

double gamma_r(std::int64_t t, Vec2 x, const SitePattern& pattern, const DepositLog& log,
               const FieldParams& params) {
    return diffusion_value(t, x, pattern, params.p_r, params.d_r,
                           [&](std::size_t j) -> const auto& { return log.r_times(j); });
}

Vec2 grad_r(std::int64_t t, Vec2 x, const SitePattern& pattern, const DepositLog& log,
            const FieldParams& params) {
    return diffusion_gradient(t, x, pattern, params.p_r, params.d_r,
                              [&](std::size_t j) -> const auto& { return log.r_times(j); });
}

double gamma_tot(std::int64_t t, Vec2 x, const SitePattern& pattern, const DepositLog& log,
                 const FieldParams& params) {
    return gamma_m(x, pattern, params) + gamma_a(t, x, pattern, log, params) -
           gamma_r(t, x, pattern, log, params);
}

Vec2 grad_tot(std::int64_t t, Vec2 x, const SitePattern& pattern, const DepositLog& log,
              const FieldParams& params) {
    const Vec2 gm = grad_m(x, pattern, params);
    const Vec2 ga = grad_a(t, x, pattern, log, params);
    const Vec2 gr = grad_r(t, x, pattern, log, params);
    return {gm.x + ga.x - gr.x, gm.y + ga.y - gr.y};
}

std::vector<FieldMaximum> find_spurious_maxima(std::int64_t t, const SitePattern& pattern,
                                               const DepositLog& log, const FieldParams& params,
                                               double domain_side, int grid_resolution,
                                               double match_radius) {
    if (grid_resolution < 16) throw std::invalid_argument("grid_resolution must be >= 16");
    if (!(domain_side > 0.0)) throw std::invalid_argument("domain_side must be > 0");
    if (match_radius <= 0.0) match_radius = 0.1 * std::sqrt(params.m);

    const int n = grid_resolution;
    const double h = domain_side / static_cast<double>(n - 1);
    std::vector<double> values(static_cast<std::size_t>(n) * n);
    for (int iy = 0; iy < n; ++iy)
        for (int ix = 0; ix < n; ++ix)
            values[static_cast<std::size_t>(iy) * n + ix] =
                gamma_tot(t, {ix * h, iy * h}, pattern, log, params);

    // A peak sampled symmetrically (a site midway between two grid rows, say)
    // produces bitwise-tied cells. Ties break lexicographically: only the
    // scan-first cell of an equal-valued group is reported, flagged plateau.
    std::vector<FieldMaximum> result;
    for (int iy = 0; iy < n; ++iy) {
        for (int ix = 0; ix < n; ++ix) {
            const double v = values[static_cast<std::size_t>(iy) * n + ix];
            bool is_max = true;
            bool tied = false;
            for (int dy = -1; dy <= 1 && is_max; ++dy) {
                for (int dx = -1; dx <= 1; ++dx) {
                    if (dx == 0 && dy == 0) continue;
                    const int nx = ix + dx, ny = iy + dy;
                    if (nx < 0 || nx >= n || ny < 0 || ny >= n) continue;
                    const double w = values[static_cast<std::size_t>(ny) * n + nx];
                    const bool precedes = dy < 0 || (dy == 0 && dx < 0);
                    if (w > v || (w == v && precedes)) {
                        is_max = false;
                        break;
                    }
                    tied |= w == v;
                }
            }
            if (!is_max) continue;

            FieldMaximum m;
            m.pos = {ix * h, iy * h};
            m.plateau = tied;
            double best = -1.0;
            for (std::size_t j = 0; j < pattern.sites.size(); ++j) {
                const double dist = (pattern.sites[j].pos - m.pos).norm();
                if (best < 0.0 || dist < best) {
                    best = dist;
                    m.nearest_site = static_cast<int>(j);
                }
            }
            m.site_distance = best;
            m.true_site = best >= 0.0 && best <= match_radius;
            result.push_back(m);
        }
    }
    return result;
}

}  // namespace nanoswarm
