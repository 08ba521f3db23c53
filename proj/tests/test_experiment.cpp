#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "nanoswarm/experiment.hpp"
#include "nanoswarm/format.hpp"

using namespace nanoswarm;
namespace fs = std::filesystem;

namespace {

std::string tiny_config(const std::string& out_dir, const std::string& extra = "") {
    return "name=tiny\n"
           "arrangement=a\n"
           "alg=KM\n"
           "n=8\n"
           "trials=2\n"
           "T_star=2000\n"
           "delta=500\n"
           "delta_prime=100\n"
           "b=1e-10\n"
           "out_dir=" + out_dir + "\n" + extra;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_SUITE("experiment") {

TEST_CASE("float formatting round-trips at shortest length") {
    CHECK(format_double(0.3) == "0.3");
    CHECK(format_double(6e-11) == "6e-11");
    CHECK(format_double(0.971) == "0.971");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(1.0 / 3.0) == "0.3333333333333333");
    CHECK(std::stod(format_double(0.1 + 0.2)) == 0.1 + 0.2);
}

TEST_CASE("run writes series, plot and summary files with the pinned headers") {
    TempDir tmp("nanoswarm_exp_test");
    const ExperimentSpec spec = parse_config(tiny_config(tmp.path.string()));
    const auto rows = run_experiment_spec(spec, 2);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].trials == 2);

    const std::string series = slurp(tmp.path / "series_0.csv");
    CHECK(series.rfind("trial,t,S,K_0,K_1\n", 0) == 0);
    CHECK(series.find("\r") == std::string::npos);  // LF only

    const std::string plot = slurp(tmp.path / "plot_0.csv");
    CHECK(plot.rfind("t,S_avg,S_std\n", 0) == 0);

    const std::string summary = slurp(tmp.path / "summary.csv");
    CHECK(summary.rfind("name,alg,arrangement,params,T_fin,S_at_Tfin,S_at_Tstar,trials,wall_s\n",
                        0) == 0);
    CHECK(summary.find("tiny,KM,a,") != std::string::npos);

    // Every S in the series is in [0,1] and nondecreasing per trial.
    std::istringstream in(series);
    std::string line;
    std::getline(in, line);
    double prev = -1.0;
    long prev_trial = -1;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string trial_s, t_s, s_s;
        std::getline(ls, trial_s, ',');
        std::getline(ls, t_s, ',');
        std::getline(ls, s_s, ',');
        const long trial = std::stol(trial_s);
        const double s = std::stod(s_s);
        CHECK(s >= 0.0);
        CHECK(s <= 1.0);
        if (trial == prev_trial) CHECK(s >= prev);
        prev = s;
        prev_trial = trial;
    }
}

TEST_CASE("rerun with a fixed seed reproduces the data files byte for byte") {
    TempDir tmp1("nanoswarm_det_a");
    TempDir tmp2("nanoswarm_det_b");
    const std::string extra = "seed=12345\ntrials=1\n";
    const ExperimentSpec s1 = parse_config(tiny_config(tmp1.path.string(), extra));
    const ExperimentSpec s2 = parse_config(tiny_config(tmp2.path.string(), extra));
    run_experiment_spec(s1, 1);
    run_experiment_spec(s2, 4);  // thread count must not matter
    CHECK(slurp(tmp1.path / "series_0.csv") == slurp(tmp2.path / "series_0.csv"));
    CHECK(slurp(tmp1.path / "plot_0.csv") == slurp(tmp2.path / "plot_0.csv"));
}

TEST_CASE("sweeps produce one series/plot pair per point plus one summary") {
    TempDir tmp("nanoswarm_sweep_test");
    const ExperimentSpec spec =
        parse_config(tiny_config(tmp.path.string(), "sweep.b=5e-11,1e-10\n"));
    const auto rows = run_experiment_spec(spec, 2);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].params == "b=5e-11");
    CHECK(rows[1].params == "b=1e-10");
    CHECK(fs::exists(tmp.path / "series_0.csv"));
    CHECK(fs::exists(tmp.path / "series_1.csv"));
    CHECK(fs::exists(tmp.path / "plot_1.csv"));
    CHECK(fs::exists(tmp.path / "summary.csv"));
}

TEST_CASE("a failing sweep point is recorded and does not stop the rest") {
    TempDir tmp("nanoswarm_fail_test");
    // Built by hand so one sweep point can violate validation (the parser
    // would reject the whole file up front).
    ExperimentSpec spec = parse_config(tiny_config(tmp.path.string()));
    spec.sweep.push_back({"alpha", {-1.0, 2e-5}});
    const auto rows = run_experiment_spec(spec, 1);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].trials == 0);  // failed: sentinel row, no files
    CHECK_FALSE(rows[0].s_at_tstar.has_value());
    CHECK(rows[1].trials == 2);  // the rest still ran
    CHECK_FALSE(fs::exists(tmp.path / "series_0.csv"));
    CHECK(fs::exists(tmp.path / "series_1.csv"));
    const std::string summary = slurp(tmp.path / "summary.csv");
    CHECK(summary.find("alpha=-1,undefined,undefined,undefined,0,") != std::string::npos);
}

TEST_CASE("undefined treatment time is serialized as the literal token") {
    std::vector<SummaryRow> rows(1);
    rows[0].name = "x";
    rows[0].alg = "RW";
    rows[0].arrangement = "a";
    rows[0].trials = 2;
    rows[0].s_at_tstar = 0.5;
    std::ostringstream os;
    write_summary_csv(os, rows);
    CHECK(os.str().find(",undefined,undefined,0.5,") != std::string::npos);
}

TEST_CASE("diagnose reports clean and merged fields") {
    ExperimentSpec spec = parse_config("arrangement=a\nalg=KM\n");
    const DiagnosisReport clean = diagnose(spec);
    CHECK(clean.site_count == 2);
    CHECK(clean.true_site_maxima == 2);
    CHECK(clean.spurious_maxima == 0);
    CHECK_FALSE(clean.warning());

    ExperimentSpec wide = parse_config("arrangement=a\nalg=KM\nm=1e-5\n");
    const DiagnosisReport merged = diagnose(wide);
    CHECK(merged.true_site_maxima < merged.site_count);
    CHECK(merged.warning());
    std::ostringstream os;
    print_report(merged, os);
    CHECK(os.str().find("WARNING") != std::string::npos);

    ExperimentSpec one = parse_config("alg=KM\nsites=0.0025,0.0025\ndemands=50\n");
    const DiagnosisReport single = diagnose(one);
    CHECK(single.true_site_maxima == 1);
    CHECK(single.spurious_maxima == 0);
    CHECK_FALSE(single.warning());
}

}  // TEST_SUITE
