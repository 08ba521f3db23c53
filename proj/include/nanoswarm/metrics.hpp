#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nanoswarm/chemfield.hpp"

namespace nanoswarm {

struct TrialResult;

struct MetricParams {
    std::int64_t delta = 30000;   // timesteps, rate window
    double d_thresh = 3e-7;       // flatness threshold on the windowed rate
    std::int64_t delta_prime = 500;  // timesteps, sampling interval

    void validate() const;
};

/// S sampled on the grid 0, delta', 2*delta', ..., T*.
struct SuccessSeries {
    std::vector<std::int64_t> times;
    std::vector<double> values;
};

/// Fraction of total demand satisfied by the given per-site K counts:
/// sum_j min(K_j / r_km, P_j) / sum_j P_j. Over-treatment of a site is
/// capped at its demand.
double success(std::span<const long> k_counts, const SitePattern& pattern, double r_km);

/// S(t) for one trial, on the trial's sampling grid.
SuccessSeries success_series(const TrialResult& trial, const SitePattern& pattern, double r_km);

/// Pointwise mean across trials. All series must share one time grid.
SuccessSeries s_avg(const std::vector<SuccessSeries>& series);

/// Pointwise population standard deviation across trials.
std::vector<double> s_std(const std::vector<SuccessSeries>& series);

/// Treatment time: the first sampled t from which the windowed rate
/// (S(t+delta) - S(t)) / delta stays at or below d_thresh through the last
/// fully observed window. Returns nothing when the curve is still rising at
/// the end of the horizon (or no full window fits).
std::optional<std::int64_t> t_fin(const SuccessSeries& avg, const MetricParams& params);

}  // namespace nanoswarm
