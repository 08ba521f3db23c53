#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "nanoswarm/config.hpp"
#include "nanoswarm/engine.hpp"
#include "nanoswarm/experiment.hpp"
#include "nanoswarm/format.hpp"
#include "nanoswarm/scenarios.hpp"

namespace py = pybind11;
using namespace nanoswarm;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Nanobot swarm treatment simulator: chemical fields, movement model, "
              "payload protocols, Monte Carlo trial runner and metrics.";

    py::class_<Vec2>(m, "Vec2")
        .def(py::init<double, double>(), py::arg("x"), py::arg("y"))
        .def(py::init([](std::pair<double, double> p) { return Vec2{p.first, p.second}; }))
        .def_readwrite("x", &Vec2::x)
        .def_readwrite("y", &Vec2::y)
        .def("norm", &Vec2::norm)
        .def("__repr__", [](Vec2 v) {
            return "Vec2(" + format_double(v.x) + ", " + format_double(v.y) + ")";
        });
    py::implicitly_convertible<py::tuple, Vec2>();

    py::class_<Site>(m, "Site")
        .def(py::init([](Vec2 pos, double strength) { return Site{pos, strength}; }),
             py::arg("pos"), py::arg("strength"))
        .def_readwrite("pos", &Site::pos)
        .def_readwrite("strength", &Site::strength);

    py::class_<SitePattern>(m, "SitePattern")
        .def(py::init<>())
        .def(py::init([](std::vector<std::pair<double, double>> pos, std::vector<double> strength) {
                 if (pos.size() != strength.size())
                     throw std::invalid_argument("positions and strengths differ in length");
                 SitePattern p;
                 for (std::size_t j = 0; j < pos.size(); ++j)
                     p.sites.push_back({{pos[j].first, pos[j].second}, strength[j]});
                 return p;
             }),
             py::arg("positions"), py::arg("strengths"))
        .def_readwrite("sites", &SitePattern::sites)
        .def("__len__", &SitePattern::size)
        .def("validate", &SitePattern::validate, py::arg("domain_side"), py::arg("min_separation"));

    py::class_<FieldParams>(m, "FieldParams")
        .def(py::init<>())
        .def_readwrite("m", &FieldParams::m)
        .def_readwrite("P_A", &FieldParams::p_a)
        .def_readwrite("D_A", &FieldParams::d_a)
        .def_readwrite("P_R", &FieldParams::p_r)
        .def_readwrite("D_R", &FieldParams::d_r);

    py::class_<MotionParams>(m, "MotionParams")
        .def(py::init<>())
        .def_readwrite("alpha", &MotionParams::alpha)
        .def_readwrite("b", &MotionParams::b)
        .def_readwrite("phi_max", &MotionParams::phi_max)
        .def_readwrite("grad_floor", &MotionParams::grad_floor)
        .def_readwrite("max_boundary_retries", &MotionParams::max_boundary_retries);

    py::class_<ThresholdParams>(m, "ThresholdParams")
        .def(py::init<>())
        .def_readwrite("r_KM", &ThresholdParams::r_km)
        .def_readwrite("k", &ThresholdParams::k)
        .def_readwrite("epsilon", &ThresholdParams::epsilon)
        .def("r_AM", &ThresholdParams::r_am, py::arg("P_A"));

    py::class_<MetricParams>(m, "MetricParams")
        .def(py::init<>())
        .def_readwrite("delta", &MetricParams::delta)
        .def_readwrite("D_thresh", &MetricParams::d_thresh)
        .def_readwrite("delta_prime", &MetricParams::delta_prime);

    py::class_<DepositLog>(m, "DepositLog")
        .def(py::init<std::size_t>(), py::arg("site_count"))
        .def("record_k", &DepositLog::record_k, py::arg("site"))
        .def("record_a", &DepositLog::record_a, py::arg("site"), py::arg("t"))
        .def("record_r", &DepositLog::record_r, py::arg("site"), py::arg("t"))
        .def("k_count", &DepositLog::k_count, py::arg("site"))
        .def("a_times", &DepositLog::a_times, py::arg("site"))
        .def("r_times", &DepositLog::r_times, py::arg("site"));

    m.def("gamma_M", &gamma_m, py::arg("x"), py::arg("pattern"), py::arg("params"));
    m.def("grad_M", &grad_m, py::arg("x"), py::arg("pattern"), py::arg("params"));
    m.def("gamma_A", &gamma_a, py::arg("t"), py::arg("x"), py::arg("pattern"), py::arg("log"),
          py::arg("params"));
    m.def("grad_A", &grad_a, py::arg("t"), py::arg("x"), py::arg("pattern"), py::arg("log"),
          py::arg("params"));
    m.def("gamma_R", &gamma_r, py::arg("t"), py::arg("x"), py::arg("pattern"), py::arg("log"),
          py::arg("params"));
    m.def("grad_R", &grad_r, py::arg("t"), py::arg("x"), py::arg("pattern"), py::arg("log"),
          py::arg("params"));
    m.def("gamma_TOT", &gamma_tot, py::arg("t"), py::arg("x"), py::arg("pattern"), py::arg("log"),
          py::arg("params"));
    m.def("grad_TOT", &grad_tot, py::arg("t"), py::arg("x"), py::arg("pattern"), py::arg("log"),
          py::arg("params"));

    py::class_<FieldMaximum>(m, "FieldMaximum")
        .def_readonly("pos", &FieldMaximum::pos)
        .def_readonly("true_site", &FieldMaximum::true_site)
        .def_readonly("plateau", &FieldMaximum::plateau)
        .def_readonly("nearest_site", &FieldMaximum::nearest_site)
        .def_readonly("site_distance", &FieldMaximum::site_distance);

    m.def("find_spurious_maxima", &find_spurious_maxima, py::arg("t"), py::arg("pattern"),
          py::arg("log"), py::arg("params"), py::arg("domain_side"),
          py::arg("grid_resolution") = 256, py::arg("match_radius") = 0.0);

    py::enum_<AlgorithmKind>(m, "AlgorithmKind")
        .value("RW", AlgorithmKind::RW)
        .value("KM", AlgorithmKind::KM)
        .value("KMA", AlgorithmKind::KMA)
        .value("KMAR", AlgorithmKind::KMAR);

    py::enum_<Mode>(m, "Mode").value("Explore", Mode::Explore).value("Follow", Mode::Follow);

    m.def("wrap_angle", &wrap_angle, py::arg("beta"));
    m.def("explore_heading", &explore_heading, py::arg("beta"));
    m.def("follow_heading", &follow_heading, py::arg("mu"), py::arg("beta"));

    py::class_<DropDecision>(m, "DropDecision")
        .def_readonly("drop_K", &DropDecision::drop_k)
        .def_readonly("drop_A", &DropDecision::drop_a)
        .def_readonly("drop_R", &DropDecision::drop_r);

    m.def("mode_for", &mode_for, py::arg("alg"));
    m.def("detect_site", &detect_site, py::arg("position"), py::arg("pattern"), py::arg("epsilon"));
    m.def("decide_drops", &decide_drops, py::arg("alg"), py::arg("site"), py::arg("t"),
          py::arg("pattern"), py::arg("log"), py::arg("field"), py::arg("thresholds"));

    py::class_<SimConfig>(m, "SimConfig")
        .def(py::init<>())
        .def_readwrite("n", &SimConfig::n)
        .def_readwrite("pattern", &SimConfig::pattern)
        .def_readwrite("field", &SimConfig::field)
        .def_readwrite("motion", &SimConfig::motion)
        .def_readwrite("thresholds", &SimConfig::thresholds)
        .def_readwrite("metric", &SimConfig::metric)
        .def_readwrite("alg", &SimConfig::alg)
        .def_readwrite("T_star", &SimConfig::t_star)
        .def_readwrite("trials", &SimConfig::trials)
        .def_readwrite("base_seed", &SimConfig::base_seed)
        .def("validate", &SimConfig::validate);

    py::class_<DropEvent>(m, "DropEvent")
        .def_readonly("t", &DropEvent::t)
        .def_readonly("agent", &DropEvent::agent)
        .def_readonly("site", &DropEvent::site)
        .def_readonly("decision", &DropEvent::decision);

    py::class_<TrialResult>(m, "TrialResult")
        .def_readonly("sample_times", &TrialResult::sample_times)
        .def_readonly("k_series", &TrialResult::k_series)
        .def_readonly("events", &TrialResult::events)
        .def_readonly("never_terminated", &TrialResult::never_terminated)
        .def_readonly("seed", &TrialResult::seed)
        .def_readonly("retry_failures", &TrialResult::retry_failures);

    m.def("run_trial", &run_trial, py::arg("config"), py::arg("seed"),
          py::call_guard<py::gil_scoped_release>());
    m.def("run_experiment", &run_experiment, py::arg("config"), py::arg("threads") = 0,
          py::call_guard<py::gil_scoped_release>());

    py::class_<SuccessSeries>(m, "SuccessSeries")
        .def_readonly("times", &SuccessSeries::times)
        .def_readonly("values", &SuccessSeries::values);

    m.def("success",
          [](std::vector<long> k, const SitePattern& p, double r_km) {
              return success(std::span<const long>(k.data(), k.size()), p, r_km);
          },
          py::arg("k_counts"), py::arg("pattern"), py::arg("r_KM"));
    m.def("success_series", &success_series, py::arg("trial"), py::arg("pattern"), py::arg("r_KM"));
    m.def("s_avg", &s_avg, py::arg("series"));
    m.def("s_std", &s_std, py::arg("series"));
    m.def("t_fin", &t_fin, py::arg("avg"), py::arg("params"));

    m.def("arrangement", &arrangement, py::arg("key"));
    m.def("arrangement_keys", &arrangement_keys);
    m.def("paper_defaults", &paper_defaults);

    py::enum_<StudyPreset>(m, "StudyPreset")
        .value("MarkerBias", StudyPreset::MarkerBias)
        .value("AmplifierBias", StudyPreset::AmplifierBias)
        .value("AmplifierPayload", StudyPreset::AmplifierPayload)
        .value("RepellentThreshold", StudyPreset::RepellentThreshold)
        .value("RepellentBias", StudyPreset::RepellentBias)
        .value("RepellentPayload", StudyPreset::RepellentPayload)
        .value("Comparison", StudyPreset::Comparison);
    m.def("study_defaults", &study_defaults, py::arg("preset"));

    py::register_exception<ConfigError>(m, "ConfigError");

    py::class_<SweepAxis>(m, "SweepAxis")
        .def_readwrite("key", &SweepAxis::key)
        .def_readwrite("values", &SweepAxis::values);

    py::class_<ExperimentSpec>(m, "ExperimentSpec")
        .def(py::init<>())
        .def_readwrite("name", &ExperimentSpec::name)
        .def_readwrite("arrangement", &ExperimentSpec::arrangement)
        .def_readwrite("base", &ExperimentSpec::base)
        .def_readwrite("sweep", &ExperimentSpec::sweep)
        .def_readwrite("out_dir", &ExperimentSpec::out_dir)
        .def("run_count", &ExperimentSpec::run_count)
        .def("config_for",
             [](const ExperimentSpec& s, std::size_t idx) { return s.config_for(idx); },
             py::arg("idx"));

    m.def("parse_config", &parse_config, py::arg("text"));
    m.def("load_config", &load_config, py::arg("path"));

    py::class_<SummaryRow>(m, "SummaryRow")
        .def_readonly("name", &SummaryRow::name)
        .def_readonly("alg", &SummaryRow::alg)
        .def_readonly("arrangement", &SummaryRow::arrangement)
        .def_readonly("params", &SummaryRow::params)
        .def_readonly("T_fin", &SummaryRow::t_fin)
        .def_readonly("S_at_Tfin", &SummaryRow::s_at_tfin)
        .def_readonly("S_at_Tstar", &SummaryRow::s_at_tstar)
        .def_readonly("trials", &SummaryRow::trials)
        .def_readonly("wall_s", &SummaryRow::wall_s);

    py::class_<RunResult>(m, "RunResult")
        .def_readonly("summary", &RunResult::summary)
        .def_readonly("avg", &RunResult::avg)
        .def_readonly("std_dev", &RunResult::std_dev)
        .def_readonly("per_trial", &RunResult::per_trial)
        .def_readonly("trials", &RunResult::trials);

    m.def("run_single", &run_single, py::arg("config"), py::arg("threads") = 0,
          py::call_guard<py::gil_scoped_release>());
    m.def("run_experiment_spec",
          [](const ExperimentSpec& spec, int threads) {
              py::gil_scoped_release release;
              return run_experiment_spec(spec, threads, nullptr);
          },
          py::arg("spec"), py::arg("threads") = 0);

    py::class_<DiagnosisReport>(m, "DiagnosisReport")
        .def_readonly("site_count", &DiagnosisReport::site_count)
        .def_readonly("true_site_maxima", &DiagnosisReport::true_site_maxima)
        .def_readonly("spurious_maxima", &DiagnosisReport::spurious_maxima)
        .def_readonly("plateau_maxima", &DiagnosisReport::plateau_maxima)
        .def_readonly("maxima", &DiagnosisReport::maxima)
        .def("warning", &DiagnosisReport::warning)
        .def("__repr__", [](const DiagnosisReport& r) {
            std::ostringstream os;
            print_report(r, os);
            return os.str();
        });

    m.def("diagnose", &diagnose, py::arg("spec"), py::arg("grid_resolution") = 256);
}
