#pragma once

#include <cstdint>
#include <vector>

#include "nanoswarm/vec2.hpp"

namespace nanoswarm {

/// One treatment target: a point location plus the strength of the marker
/// signal surrounding it (which doubles as the site's treatment demand).
struct Site {
    Vec2 pos;
    double strength = 0.0;  // P_Mj, unitless
};

struct SitePattern {
    std::vector<Site> sites;

    std::size_t size() const { return sites.size(); }

    /// Checks the pattern against the domain and detection radius: sites in
    /// [0, domain_side]^2, strengths nonnegative with at least one positive,
    /// pairwise distances > min_separation. Throws std::invalid_argument.
    void validate(double domain_side, double min_separation) const;
};

/// Kernel parameters for the three signal chemicals.
struct FieldParams {
    double m = 1e-6;     // m^2, marker kernel width
    double p_a = 10.0;   // attractant payload size
    double d_a = 1e-9;   // m^2/s, attractant diffusion coefficient
    double p_r = 50.0;   // repellent payload size
    double d_r = 1e-9;   // m^2/s, repellent diffusion coefficient

    void validate() const;
};

/// Per-site record of payload drops. A- and R-drop timesteps are kept as
/// sorted multisets; K drops only need a counter.
///
/// A deposit stamped t contributes nothing to a field queried at time t; it
/// first contributes at t+1 with unit elapsed time. Evaluation filters on
/// timestamp < query time, so the log can be shared between the movement
/// phase and the commit phase of the same timestep.
class DepositLog {
  public:
    DepositLog() = default;
    explicit DepositLog(std::size_t site_count) : sites_(site_count) {}

    std::size_t site_count() const { return sites_.size(); }

    void record_k(std::size_t site) { ++sites_[site].k_count; }
    void record_a(std::size_t site, std::int64_t t);
    void record_r(std::size_t site, std::int64_t t);

    long k_count(std::size_t site) const { return sites_[site].k_count; }
    const std::vector<std::int64_t>& a_times(std::size_t site) const { return sites_[site].a_times; }
    const std::vector<std::int64_t>& r_times(std::size_t site) const { return sites_[site].r_times; }

    long total_a() const;
    long total_r() const;

  private:
    struct SiteLog {
        std::vector<std::int64_t> a_times;
        std::vector<std::int64_t> r_times;
        long k_count = 0;
    };
    std::vector<SiteLog> sites_;
};

// Concentrations and their analytic spatial gradients. The marker field is
// time-constant; attractant/repellent fields depend on the deposit history
// and the integer query time. All are exact sums, no cutoffs.

double gamma_m(Vec2 x, const SitePattern& pattern, const FieldParams& params);
Vec2 grad_m(Vec2 x, const SitePattern& pattern, const FieldParams& params);

double gamma_a(std::int64_t t, Vec2 x, const SitePattern& pattern,
               const DepositLog& log, const FieldParams& params);
Vec2 grad_a(std::int64_t t, Vec2 x, const SitePattern& pattern,
            const DepositLog& log, const FieldParams& params);

double gamma_r(std::int64_t t, Vec2 x, const SitePattern& pattern,
               const DepositLog& log, const FieldParams& params);
Vec2 grad_r(std::int64_t t, Vec2 x, const SitePattern& pattern,
            const DepositLog& log, const FieldParams& params);

/// Signed total signal: marker + attractant - repellent.
double gamma_tot(std::int64_t t, Vec2 x, const SitePattern& pattern,
                 const DepositLog& log, const FieldParams& params);
Vec2 grad_tot(std::int64_t t, Vec2 x, const SitePattern& pattern,
              const DepositLog& log, const FieldParams& params);

/// A local maximum of the sampled total field.
struct FieldMaximum {
    Vec2 pos;
    bool true_site = false;   // lies within the match radius of some site
    bool plateau = false;     // tied with a neighbor (degenerate)
    int nearest_site = -1;
    double site_distance = 0.0;
};

/// Pre-run diagnostic: samples the total field on a uniform grid over
/// [0, domain_side]^2 and returns its 8-neighborhood local maxima. Cells tied
/// bitwise (a peak straddled by the grid, or a degenerate plateau) collapse to
/// their scan-first cell and carry the plateau flag. A maximum is attributed
/// to a site when it lies within match_radius of it (default 0.1*sqrt(m), the
/// marker kernel scale); anything else is a bogus attractor that agents would
/// converge to.
std::vector<FieldMaximum> find_spurious_maxima(std::int64_t t, const SitePattern& pattern,
                                               const DepositLog& log, const FieldParams& params,
                                               double domain_side, int grid_resolution = 256,
                                               double match_radius = 0.0);

}  // namespace nanoswarm
