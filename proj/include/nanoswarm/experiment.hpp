#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nanoswarm/config.hpp"
#include "nanoswarm/engine.hpp"
#include "nanoswarm/metrics.hpp"

namespace nanoswarm {

struct SummaryRow {
    std::string name;
    std::string alg;
    std::string arrangement;
    std::string params;  // swept key=value pairs joined with ';'
    std::optional<std::int64_t> t_fin;
    std::optional<double> s_at_tfin;
    std::optional<double> s_at_tstar;
    int trials = 0;  // 0 marks a failed run
    double wall_s = 0.0;
};

/// Aggregates of one run's trials, kept for tests and the Python surface.
struct RunResult {
    SummaryRow summary;
    SuccessSeries avg;
    std::vector<double> std_dev;
    std::vector<SuccessSeries> per_trial;
    std::vector<TrialResult> trials;
};

/// Runs every sweep point of the spec: `trials` seeded trials each, then
/// writes per-run series and plot-data CSVs plus one summary CSV into
/// spec.out_dir. Failed runs are logged, recorded with trials=0 and sentinel
/// fields, and do not stop the remaining runs.
std::vector<SummaryRow> run_experiment_spec(const ExperimentSpec& spec, int threads = 0,
                                            std::ostream* log = nullptr);

/// One sweep point, in memory (no files).
RunResult run_single(const SimConfig& config, int threads = 0);

struct DiagnosisReport {
    int site_count = 0;
    int true_site_maxima = 0;
    int spurious_maxima = 0;
    int plateau_maxima = 0;
    std::vector<FieldMaximum> maxima;

    /// Something is off: a bogus attractor exists or sites merged.
    bool warning() const {
        return spurious_maxima > 0 || true_site_maxima < site_count;
    }
};

/// Evaluates the marker-only field of the spec's arrangement (time 0, empty
/// deposit log) and reports its local maxima: one true-site maximum per site
/// is healthy; anything else means agents will chase bogus points.
DiagnosisReport diagnose(const ExperimentSpec& spec, int grid_resolution = 256);

void print_report(const DiagnosisReport& report, std::ostream& os);

// CSV helpers (UTF-8, LF, '.' decimal separator, shortest round-trip floats).
std::string format_double(double v);
void write_series_csv(std::ostream& os, const std::vector<SuccessSeries>& per_trial,
                      const std::vector<std::vector<std::vector<long>>>& k_per_trial);
void write_plot_csv(std::ostream& os, const SuccessSeries& avg, const std::vector<double>& sd);
void write_summary_csv(std::ostream& os, const std::vector<SummaryRow>& rows);

}  // namespace nanoswarm
