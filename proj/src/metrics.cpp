#include "nanoswarm/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nanoswarm/engine.hpp"

namespace nanoswarm {

void MetricParams::validate() const {
    if (delta_prime < 1) throw std::invalid_argument("delta_prime must be >= 1");
    if (delta < delta_prime) throw std::invalid_argument("delta must be >= delta_prime");
    if (delta % delta_prime != 0) throw std::invalid_argument("delta_prime must divide delta");
    if (!(d_thresh >= 0.0)) throw std::invalid_argument("D_thresh must be >= 0");
}

double success(std::span<const long> k_counts, const SitePattern& pattern, double r_km) {
    double satisfied = 0.0;
    double demand = 0.0;
    for (std::size_t j = 0; j < pattern.sites.size(); ++j) {
        const double p = pattern.sites[j].strength;
        demand += p;
        satisfied += std::min(static_cast<double>(k_counts[j]) / r_km, p);
    }
    return satisfied / demand;
}

SuccessSeries success_series(const TrialResult& trial, const SitePattern& pattern, double r_km) {
    SuccessSeries s;
    s.times = trial.sample_times;
    s.values.reserve(s.times.size());
    std::vector<long> k(trial.k_series.size());
    for (std::size_t i = 0; i < s.times.size(); ++i) {
        for (std::size_t j = 0; j < trial.k_series.size(); ++j) k[j] = trial.k_series[j][i];
        s.values.push_back(success(k, pattern, r_km));
    }
    return s;
}

namespace {
void require_shared_grid(const std::vector<SuccessSeries>& series) {
    if (series.empty()) throw std::invalid_argument("no series to aggregate");
    for (const auto& s : series)
        if (s.times != series.front().times)
            throw std::invalid_argument("series time grids differ");
}
}  // namespace

SuccessSeries s_avg(const std::vector<SuccessSeries>& series) {
    require_shared_grid(series);
    SuccessSeries out;
    out.times = series.front().times;
    out.values.assign(out.times.size(), 0.0);
    for (const auto& s : series)
        for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += s.values[i];
    for (double& v : out.values) v /= static_cast<double>(series.size());
    return out;
}

std::vector<double> s_std(const std::vector<SuccessSeries>& series) {
    require_shared_grid(series);
    const SuccessSeries mean = s_avg(series);
    std::vector<double> out(mean.values.size(), 0.0);
    for (const auto& s : series)
        for (std::size_t i = 0; i < out.size(); ++i) {
            const double d = s.values[i] - mean.values[i];
            out[i] += d * d;
        }
    for (double& v : out) v = std::sqrt(v / static_cast<double>(series.size()));
    return out;
}

std::optional<std::int64_t> t_fin(const SuccessSeries& avg, const MetricParams& params) {
    const std::size_t window = static_cast<std::size_t>(params.delta / params.delta_prime);
    if (avg.values.size() != avg.times.size()) throw std::invalid_argument("malformed series");
    if (avg.values.size() <= window) return std::nullopt;
    for (std::size_t i = 1; i < avg.times.size(); ++i)
        if (avg.times[i] - avg.times[i - 1] != params.delta_prime)
            throw std::invalid_argument("series grid step does not match delta_prime");

    // Walk back through the fully observed windows; the treatment time is the
    // start of the terminal run of flat windows. A flat stretch in the middle
    // of an otherwise rising curve does not qualify.
    const std::size_t last = avg.values.size() - 1 - window;
    std::optional<std::size_t> first_flat;
    for (std::size_t i = last;; --i) {
        const double rate =
            (avg.values[i + window] - avg.values[i]) / static_cast<double>(params.delta);
        if (rate <= params.d_thresh)
            first_flat = i;
        else
            break;
        if (i == 0) break;
    }
    if (!first_flat) return std::nullopt;
    return avg.times[*first_flat];
}

}  // namespace nanoswarm
