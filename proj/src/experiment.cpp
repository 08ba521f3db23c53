#include "nanoswarm/experiment.hpp"

#include <charconv>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "nanoswarm/format.hpp"

namespace nanoswarm {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

std::string join(const std::vector<std::string>& parts, char sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out.push_back(sep);
        out += parts[i];
    }
    return out;
}

std::string run_tag(std::size_t idx, std::size_t total) {
    int width = 1;
    for (std::size_t t = total > 0 ? total - 1 : 0; t >= 10; t /= 10) ++width;
    std::ostringstream os;
    os << std::setw(width) << std::setfill('0') << idx;
    return os.str();
}

}  // namespace

RunResult run_single(const SimConfig& config, int threads) {
    const auto start = std::chrono::steady_clock::now();

    RunResult out;
    out.trials = run_experiment(config, threads);
    out.per_trial.reserve(out.trials.size());
    for (const TrialResult& tr : out.trials)
        out.per_trial.push_back(success_series(tr, config.pattern, config.thresholds.r_km));
    out.avg = s_avg(out.per_trial);
    out.std_dev = s_std(out.per_trial);

    out.summary.alg = to_string(config.alg);
    out.summary.trials = config.trials;
    out.summary.s_at_tstar = out.avg.values.back();
    if (const auto tf = t_fin(out.avg, config.metric)) {
        out.summary.t_fin = *tf;
        const std::size_t idx = static_cast<std::size_t>(*tf / config.metric.delta_prime);
        out.summary.s_at_tfin = out.avg.values[idx];
    }
    out.summary.wall_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

void write_series_csv(std::ostream& os, const std::vector<SuccessSeries>& per_trial,
                      const std::vector<std::vector<std::vector<long>>>& k_per_trial) {
    const std::size_t c = k_per_trial.empty() ? 0 : k_per_trial.front().size();
    os << "trial,t,S";
    for (std::size_t j = 0; j < c; ++j) os << ",K_" << j;
    os << "\n";
    for (std::size_t trial = 0; trial < per_trial.size(); ++trial) {
        const SuccessSeries& s = per_trial[trial];
        for (std::size_t i = 0; i < s.times.size(); ++i) {
            os << trial << ',' << s.times[i] << ',' << format_double(s.values[i]);
            for (std::size_t j = 0; j < c; ++j) os << ',' << k_per_trial[trial][j][i];
            os << "\n";
        }
    }
}

void write_plot_csv(std::ostream& os, const SuccessSeries& avg, const std::vector<double>& sd) {
    os << "t,S_avg,S_std\n";
    for (std::size_t i = 0; i < avg.times.size(); ++i)
        os << avg.times[i] << ',' << format_double(avg.values[i]) << ','
           << format_double(sd[i]) << "\n";
}

void write_summary_csv(std::ostream& os, const std::vector<SummaryRow>& rows) {
    os << "name,alg,arrangement,params,T_fin,S_at_Tfin,S_at_Tstar,trials,wall_s\n";
    for (const SummaryRow& r : rows) {
        os << r.name << ',' << r.alg << ',' << r.arrangement << ',' << r.params << ',';
        if (r.t_fin)
            os << *r.t_fin;
        else
            os << "undefined";
        os << ',';
        os << (r.s_at_tfin ? format_double(*r.s_at_tfin) : std::string("undefined")) << ',';
        os << (r.s_at_tstar ? format_double(*r.s_at_tstar) : std::string("undefined")) << ',';
        os << r.trials << ',' << format_double(r.wall_s) << "\n";
    }
}

std::vector<SummaryRow> run_experiment_spec(const ExperimentSpec& spec, int threads,
                                            std::ostream* log) {
    namespace fs = std::filesystem;
    const fs::path out_dir(spec.out_dir);
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec && !fs::is_directory(out_dir))
        throw std::runtime_error("cannot create output directory '" + spec.out_dir + "'");

    const std::size_t total = spec.run_count();
    std::vector<SummaryRow> rows;
    rows.reserve(total);

    for (std::size_t idx = 0; idx < total; ++idx) {
        std::vector<std::string> labels;
        SummaryRow row;
        row.name = spec.name;
        row.alg = to_string(spec.base.alg);
        row.arrangement = spec.arrangement;
        const std::string tag = run_tag(idx, total);
        const auto start = std::chrono::steady_clock::now();
        try {
            const SimConfig config = spec.config_for(idx, &labels);
            row.alg = to_string(config.alg);
            row.params = join(labels, ';');
            config.validate();

            RunResult run = run_single(config, threads);
            row.t_fin = run.summary.t_fin;
            row.s_at_tfin = run.summary.s_at_tfin;
            row.s_at_tstar = run.summary.s_at_tstar;
            row.trials = config.trials;

            std::vector<std::vector<std::vector<long>>> k_per_trial;
            k_per_trial.reserve(run.trials.size());
            for (const TrialResult& tr : run.trials) k_per_trial.push_back(tr.k_series);

            std::ofstream series(out_dir / ("series_" + tag + ".csv"), std::ios::binary);
            write_series_csv(series, run.per_trial, k_per_trial);
            if (!series) throw std::runtime_error("failed writing series CSV");

            std::ofstream plot(out_dir / ("plot_" + tag + ".csv"), std::ios::binary);
            write_plot_csv(plot, run.avg, run.std_dev);
            if (!plot) throw std::runtime_error("failed writing plot CSV");

            if (log) {
                *log << spec.name << " run " << tag << " [" << row.params << "] T_fin=";
                if (row.t_fin)
                    *log << *row.t_fin;
                else
                    *log << "undefined";
                *log << " S(T*)=" << format_double(*row.s_at_tstar) << "\n";
            }
        } catch (const std::exception& e) {
            row.trials = 0;
            row.t_fin.reset();
            row.s_at_tfin.reset();
            row.s_at_tstar.reset();
            std::cerr << "error: " << spec.name << " run " << tag << ": " << e.what() << "\n";
        }
        row.wall_s =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        rows.push_back(std::move(row));
    }

    std::ofstream summary(out_dir / "summary.csv", std::ios::binary);
    write_summary_csv(summary, rows);
    if (!summary) throw std::runtime_error("failed writing summary CSV");
    return rows;
}

DiagnosisReport diagnose(const ExperimentSpec& spec, int grid_resolution) {
    const SimConfig& cfg = spec.base;
    DiagnosisReport report;
    report.site_count = static_cast<int>(cfg.pattern.size());
    const DepositLog empty(cfg.pattern.size());
    report.maxima = find_spurious_maxima(0, cfg.pattern, empty, cfg.field, cfg.motion.phi_max,
                                         grid_resolution);
    for (const FieldMaximum& m : report.maxima) {
        if (m.true_site)
            ++report.true_site_maxima;
        else
            ++report.spurious_maxima;
        if (m.plateau) ++report.plateau_maxima;
    }
    return report;
}

void print_report(const DiagnosisReport& report, std::ostream& os) {
    os << "sites: " << report.site_count << "\n";
    os << "true-site maxima: " << report.true_site_maxima << "\n";
    os << "spurious maxima: " << report.spurious_maxima << "\n";
    if (report.plateau_maxima > 0) os << "plateau-flagged maxima: " << report.plateau_maxima << "\n";
    for (const FieldMaximum& m : report.maxima) {
        os << "  (" << format_double(m.pos.x) << ", " << format_double(m.pos.y) << ") "
           << (m.true_site ? "true-site" : "spurious");
        if (m.nearest_site >= 0)
            os << " nearest site " << m.nearest_site << " at " << format_double(m.site_distance);
        if (m.plateau) os << " [plateau]";
        os << "\n";
    }
    if (report.warning()) {
        if (report.true_site_maxima < report.site_count)
            os << "WARNING: fewer resolvable maxima than sites; signals have merged\n";
        if (report.spurious_maxima > 0)
            os << "WARNING: bogus attractors present; agents may converge off-site\n";
    } else {
        os << "field is clean: one maximum per site\n";
    }
}

}  // namespace nanoswarm
