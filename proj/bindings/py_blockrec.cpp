// Python module over the C++ core. Mirrors the public headers one to one:
// deterministic counter-based RNG streams, samplers, genie scores, thresholds,
// eigensolves, recovery algorithms, and the Monte Carlo harness. Matrices
// expose the buffer protocol, so numpy can wrap them without copying.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "blockrec/eigensolve.hpp"
#include "blockrec/harness.hpp"
#include "blockrec/io.hpp"
#include "blockrec/model.hpp"
#include "blockrec/recovery.hpp"
#include "blockrec/rng.hpp"
#include "blockrec/scores.hpp"
#include "blockrec/thresholds.hpp"

namespace py = pybind11;
using namespace blockrec;

namespace {

Mat mat_from_rows(const std::vector<std::vector<double>>& rows) {
    int n = static_cast<int>(rows.size());
    if (n == 0) throw std::invalid_argument("Mat: rows must be non-empty");
    Mat m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[size_t(i)].size()) != n)
            throw std::invalid_argument("Mat: rows must form a square matrix");
        for (int j = 0; j < n; ++j) m(i, j) = rows[size_t(i)][size_t(j)];
    }
    return m;
}

}  // namespace

PYBIND11_MODULE(blockrec_py, m) {
    m.doc() = "Exact community recovery: samplers, genie scores, spectral and "
              "degree-profiling recovery, thresholds, and a Monte Carlo harness.";

    // ---- rng ----

    py::class_<RngStream>(m, "RngStream")
        .def(py::init<std::uint64_t>(), py::arg("key"))
        .def("next_u64", &RngStream::next_u64)
        .def("next_unit", &RngStream::next_unit)
        .def("next_gaussian", &RngStream::next_gaussian)
        .def("next_bernoulli", &RngStream::next_bernoulli, py::arg("p"));

    py::enum_<StreamPurpose>(m, "StreamPurpose")
        .value("LABELS", StreamPurpose::Labels)
        .value("NOISE", StreamPurpose::Noise)
        .value("SIDE_INFO", StreamPurpose::SideInfo)
        .value("GENERIC", StreamPurpose::Generic);

    m.def("derive_key", &derive_key, py::arg("master"), py::arg("label_a"),
          py::arg("label_b") = 0,
          "Key for a (label_a, label_b) substream of a master seed.");
    m.def("derive_stream", &derive_stream, py::arg("master"), py::arg("trial"),
          py::arg("purpose"), "Independent stream for one (trial, purpose) pair.");

    // ---- matrices ----

    py::class_<Mat>(m, "Mat", py::buffer_protocol())
        .def(py::init(&mat_from_rows), py::arg("rows"),
             "Builds a square matrix from a list of equal-length rows.")
        .def("n", &Mat::n)
        .def("__getitem__",
             [](const Mat& self, std::pair<int, int> ij) {
                 if (ij.first < 0 || ij.first >= self.n() || ij.second < 0 ||
                     ij.second >= self.n())
                     throw py::index_error("Mat index out of range");
                 return self(ij.first, ij.second);
             })
        .def_buffer([](Mat& self) {
            return py::buffer_info(self.data(), sizeof(double),
                                   py::format_descriptor<double>::format(), 2,
                                   {size_t(self.n()), size_t(self.n())},
                                   {sizeof(double) * size_t(self.n()), sizeof(double)});
        });

    // ---- model ----

    py::class_<RosParams>(m, "RosParams")
        .def(py::init([](double rho, double a, double b) {
                 RosParams p{rho, a, b};
                 p.validate();
                 return p;
             }),
             py::arg("rho"), py::arg("a"), py::arg("b"))
        .def_readwrite("rho", &RosParams::rho)
        .def_readwrite("a", &RosParams::a)
        .def_readwrite("b", &RosParams::b)
        .def("validate", &RosParams::validate)
        .def("__repr__", [](const RosParams& p) {
            return "RosParams(rho=" + fmt_double(p.rho) + ", a=" + fmt_double(p.a) +
                   ", b=" + fmt_double(p.b) + ")";
        });

    py::class_<SbmParams>(m, "SbmParams")
        .def(py::init([](double rho, double a1, double a2, double b) {
                 SbmParams p{rho, a1, a2, b};
                 p.validate();
                 return p;
             }),
             py::arg("rho"), py::arg("a1"), py::arg("a2"), py::arg("b"))
        .def_readwrite("rho", &SbmParams::rho)
        .def_readwrite("a1", &SbmParams::a1)
        .def_readwrite("a2", &SbmParams::a2)
        .def_readwrite("b", &SbmParams::b)
        .def("validate", &SbmParams::validate)
        .def("edge_probs",
             [](const SbmParams& p, int n) {
                 SbmParams::EdgeProbs probs = p.edge_probs(n);
                 return py::make_tuple(probs.p1, probs.p2, probs.q);
             },
             py::arg("n"), "(p1, p2, q) at a given n; raises if any exceeds 1.")
        .def("__repr__", [](const SbmParams& p) {
            return "SbmParams(rho=" + fmt_double(p.rho) + ", a1=" + fmt_double(p.a1) +
                   ", a2=" + fmt_double(p.a2) + ", b=" + fmt_double(p.b) + ")";
        });

    py::class_<CommunityAssignment>(m, "CommunityAssignment")
        .def_static("from_labels", &CommunityAssignment::from_labels, py::arg("labels"))
        .def_readonly("labels", &CommunityAssignment::labels)
        .def_readonly("n", &CommunityAssignment::n)
        .def("plus_count", &CommunityAssignment::plus_count)
        .def("minus_count", &CommunityAssignment::minus_count);

    py::enum_<ObsKind>(m, "ObsKind").value("ROS", ObsKind::Ros).value("SBM", ObsKind::Sbm);

    py::class_<Observation>(m, "Observation")
        .def_static("from_matrix", &Observation::from_matrix, py::arg("kind"),
                    py::arg("matrix"))
        .def_readonly("kind", &Observation::kind)
        .def_readonly("a", &Observation::a, py::return_value_policy::reference_internal)
        .def("n", &Observation::n);

    py::enum_<Channel>(m, "Channel")
        .value("NONE", Channel::None)
        .value("BEC", Channel::Bec)
        .value("BSC", Channel::Bsc);

    py::class_<SideInformation>(m, "SideInformation")
        .def(py::init<>())
        .def(py::init([](Channel channel, std::vector<std::int8_t> y, double param) {
                 return SideInformation{channel, std::move(y), param};
             }),
             py::arg("channel"), py::arg("y"), py::arg("param"))
        .def_readwrite("channel", &SideInformation::channel)
        .def_readwrite("y", &SideInformation::y)
        .def_readwrite("param", &SideInformation::param);

    m.def("side_info_params",
          [](double beta, int n) { return side_info_params({beta, n}); }, py::arg("beta"),
          py::arg("n"), "(epsilon_n, alpha_n) = (n^-beta, 1 / (n^beta + 1)).");

    m.def("sample_labels", &sample_labels, py::arg("n"), py::arg("rho"), py::arg("rng"),
          "i.i.d. labels: +1 with probability rho, else -1.");
    m.def("sample_ros", &sample_ros, py::arg("params"), py::arg("sigma"), py::arg("rng"),
          py::arg("noise_stddev") = 1.0,
          "Gaussian observation A_ij ~ N(v_i v_j sqrt(log n / n), 1).");
    m.def("sample_sbm", &sample_sbm, py::arg("params"), py::arg("sigma"), py::arg("rng"),
          "Bernoulli adjacency with block edge probabilities a1/a2/b log n / n.");
    m.def("apply_bec", &apply_bec, py::arg("sigma"), py::arg("epsilon"), py::arg("rng"),
          "Erasure channel: reveals each label with probability 1 - epsilon.");
    m.def("apply_bsc", &apply_bsc, py::arg("sigma"), py::arg("alpha"), py::arg("rng"),
          "Flip channel: flips each label with probability alpha.");
    m.def("spike_vector", &spike_vector, py::arg("params"), py::arg("sigma"),
          "v* with v_i = a on the +1 community, b on the -1 community.");

    // ---- scores ----

    py::class_<ScoreVector>(m, "ScoreVector")
        .def_static("from_values", &ScoreVector::from_values, py::arg("values"))
        .def_readonly("values", &ScoreVector::values)
        .def("n", &ScoreVector::n);

    py::class_<MarginReport>(m, "MarginReport")
        .def_readonly("min_signed_score", &MarginReport::min_signed_score)
        .def_readonly("argmin", &MarginReport::argmin)
        .def_readonly("per_index", &MarginReport::per_index);

    m.def("genie_scores_ros", &genie_scores_ros, py::arg("obs"), py::arg("sigma"),
          py::arg("params"),
          "Exact one-vertex-revealed log posterior ratios, prior included.");
    m.def("genie_scores_sbm", &genie_scores_sbm, py::arg("obs"), py::arg("sigma"),
          py::arg("params"));
    m.def("apply_side_info_to_scores", &apply_side_info_to_scores, py::arg("scores"),
          py::arg("side"),
          "BEC pins revealed entries to +-inf; BSC adds the trust factor times y.");
    m.def("genie_estimate", &genie_estimate, py::arg("scores"),
          "Thresholds scores at zero with sgn(0) = +1.");
    m.def("margin", &margin, py::arg("scores"), py::arg("sigma"));
    m.def("score_gap_inf", &score_gap_inf, py::arg("scores"), py::arg("reference"),
          "Sup-norm gap over finite entries; infinite entries must agree in sign.");

    // ---- thresholds ----

    py::class_<CommunityProfile>(m, "CommunityProfile")
        .def_readonly("theta_plus", &CommunityProfile::theta_plus)
        .def_readonly("theta_minus", &CommunityProfile::theta_minus);

    py::class_<SupResult>(m, "SupResult")
        .def_readonly("value", &SupResult::value)
        .def_readonly("argmax_t", &SupResult::argmax_t)
        .def_readonly("degenerate", &SupResult::degenerate);

    py::class_<ThresholdReport>(m, "ThresholdReport")
        .def_readonly("model", &ThresholdReport::model)
        .def_readonly("channel", &ThresholdReport::channel)
        .def_readonly("beta", &ThresholdReport::beta)
        .def_readonly("value", &ThresholdReport::value)
        .def_readonly("recoverable", &ThresholdReport::recoverable)
        .def_readonly("critical", &ThresholdReport::critical)
        .def_readonly("optimizer_t", &ThresholdReport::optimizer_t)
        .def_readonly("degenerate", &ThresholdReport::degenerate)
        .def("to_json", &threshold_report_to_json);

    m.def("psi", &psi, py::arg("params"),
          "Signal functional (a - b)^2 (rho a^2 + (1 - rho) b^2).");
    m.def("community_profile", &community_profile, py::arg("params"));
    m.def("ch_divergence", &ch_divergence, py::arg("mu"), py::arg("nu"), py::arg("t"),
          "D_t(mu, nu) with the 0^0 = 1 convention.");
    m.def("sup_ch", &sup_ch, py::arg("theta_plus"), py::arg("theta_minus"),
          py::arg("linear_coeff") = 0.0,
          "Global maximum of linear_coeff * t + D_t over t in [0, 1].");
    m.def("ros_threshold", &ros_threshold, py::arg("params"), py::arg("channel"),
          py::arg("beta"));
    m.def("ros_threshold_from_psi", &ros_threshold_from_psi, py::arg("psi"),
          py::arg("channel"), py::arg("beta"));
    m.def("sbm_threshold", &sbm_threshold, py::arg("params"), py::arg("channel"),
          py::arg("beta"));
    m.def("classify_ros_regime", &classify_ros_regime, py::arg("psi"), py::arg("beta"),
          "One of the five side-information regime tags.");

    // ---- eigensolve ----

    py::class_<Eigenpair>(m, "Eigenpair")
        .def_readonly("value", &Eigenpair::lambda)
        .def_readonly("vector", &Eigenpair::vector);

    m.def("top_eigenpairs", &top_eigenpairs, py::arg("matrix"), py::arg("k"),
          "Top-k eigenpairs by |lambda|, unit norm, first nonzero entry positive.");
    m.def("expected_matrix_ros", &expected_matrix_ros, py::arg("params"), py::arg("sigma"));
    m.def("expected_matrix_sbm", &expected_matrix_sbm, py::arg("params"), py::arg("sigma"),
          py::arg("n"));
    m.def("entrywise_gap", &entrywise_gap, py::arg("observed"), py::arg("expected"),
          py::arg("index"),
          "min over signs of || s u - A u* / lambda* ||_inf at one eigenpair index.");

    // ---- recovery ----

    py::class_<SpectralCoefficients>(m, "SpectralCoefficients")
        .def_readonly("c1", &SpectralCoefficients::c1)
        .def_readonly("c2", &SpectralCoefficients::c2)
        .def_readonly("gamma", &SpectralCoefficients::gamma);

    py::class_<Candidate>(m, "Candidate")
        .def_readonly("signs", &Candidate::signs)
        .def_readonly("scores", &Candidate::scores)
        .def_readonly("log_post", &Candidate::log_post);

    py::class_<RecoveryResult>(m, "RecoveryResult")
        .def_readonly("estimate", &RecoveryResult::estimate)
        .def_readonly("candidates", &RecoveryResult::candidates)
        .def_readonly("chosen_sign", &RecoveryResult::chosen_sign);

    m.def("ros_coefficients", &ros_coefficients, py::arg("params"), py::arg("n"));
    m.def("sbm_rank_deficient", &sbm_rank_deficient, py::arg("params"));
    m.def("find_sbm_coefficients", &find_sbm_coefficients, py::arg("params"), py::arg("n"));
    m.def("sbm_rank1_coefficients", &sbm_rank1_coefficients, py::arg("params"),
          py::arg("n"));
    m.def("spectral_ros", &spectral_ros, py::arg("obs"), py::arg("params"), py::arg("side"),
          "Spectral recovery: score both spike signs, keep the higher posterior.");
    m.def("spectral_sbm", &spectral_sbm, py::arg("obs"), py::arg("params"), py::arg("side"));
    m.def("dp_ros", &dp_ros, py::arg("obs"), py::arg("params"), py::arg("side"),
          "Degree profiling: weighted degrees over side labels taken at face value.");
    m.def("dp_sbm", &dp_sbm, py::arg("obs"), py::arg("params"), py::arg("side"));
    m.def("log_posterior_ros",
          [](const Observation& obs, const std::vector<std::int8_t>& sigma_hat,
             const RosParams& params, const SideInformation& side) {
              return log_posterior(obs, sigma_hat, params, side);
          },
          py::arg("obs"), py::arg("sigma_hat"), py::arg("params"), py::arg("side"));
    m.def("log_posterior_sbm",
          [](const Observation& obs, const std::vector<std::int8_t>& sigma_hat,
             const SbmParams& params, const SideInformation& side) {
              return log_posterior(obs, sigma_hat, params, side);
          },
          py::arg("obs"), py::arg("sigma_hat"), py::arg("params"), py::arg("side"));

    // ---- harness ----

    py::enum_<Algorithm>(m, "Algorithm")
        .value("GENIE", Algorithm::Genie)
        .value("SPECTRAL", Algorithm::Spectral)
        .value("DP", Algorithm::Dp);

    py::enum_<SuccessCriterion>(m, "SuccessCriterion")
        .value("EXACT", SuccessCriterion::Exact)
        .value("PARTITION", SuccessCriterion::Partition);

    py::class_<ExperimentConfig>(m, "ExperimentConfig")
        .def(py::init<>())
        .def_readwrite("params", &ExperimentConfig::params)
        .def_readwrite("channel", &ExperimentConfig::channel)
        .def_readwrite("beta", &ExperimentConfig::beta)
        .def_readwrite("n_list", &ExperimentConfig::n_list)
        .def_readwrite("trials", &ExperimentConfig::trials)
        .def_readwrite("seed", &ExperimentConfig::seed)
        .def_readwrite("algorithms", &ExperimentConfig::algorithms)
        .def_readwrite("success_criterion", &ExperimentConfig::success_criterion)
        .def("kind", &ExperimentConfig::kind)
        .def("validate", &ExperimentConfig::validate);

    py::class_<TrialRecord>(m, "TrialRecord")
        .def_readonly("seed", &TrialRecord::seed)
        .def_readonly("n", &TrialRecord::n)
        .def_readonly("algorithm", &TrialRecord::algorithm)
        .def_readonly("success", &TrialRecord::success)
        .def_readonly("margin", &TrialRecord::margin)
        .def_readonly("score_gap_inf", &TrialRecord::score_gap_inf)
        .def_readonly("runtime_ms", &TrialRecord::runtime_ms);

    py::class_<SweepConfig>(m, "SweepConfig")
        .def(py::init<>())
        .def_readwrite("model", &SweepConfig::model)
        .def_readwrite("channel", &SweepConfig::channel)
        .def_readwrite("signal_min", &SweepConfig::signal_min)
        .def_readwrite("signal_max", &SweepConfig::signal_max)
        .def_readwrite("signal_steps", &SweepConfig::signal_steps)
        .def_readwrite("beta_min", &SweepConfig::beta_min)
        .def_readwrite("beta_max", &SweepConfig::beta_max)
        .def_readwrite("beta_steps", &SweepConfig::beta_steps)
        .def_readwrite("n", &SweepConfig::n)
        .def_readwrite("trials", &SweepConfig::trials)
        .def_readwrite("seed", &SweepConfig::seed)
        .def_readwrite("algorithms", &SweepConfig::algorithms)
        .def_readwrite("sbm_b", &SweepConfig::sbm_b);

    py::class_<SweepCell>(m, "SweepCell")
        .def_readonly("signal", &SweepCell::signal)
        .def_readonly("beta", &SweepCell::beta)
        .def_readonly("regime", &SweepCell::regime)
        .def_readonly("threshold_value", &SweepCell::threshold_value)
        .def_readonly("recoverable", &SweepCell::recoverable)
        .def_readonly("algorithm", &SweepCell::algorithm)
        .def_readonly("successes", &SweepCell::successes)
        .def_readonly("trials", &SweepCell::trials)
        .def_readonly("rate", &SweepCell::rate)
        .def_readonly("wilson_lo", &SweepCell::wilson_lo)
        .def_readonly("wilson_hi", &SweepCell::wilson_hi);

    m.def("run_trials", &run_trials, py::arg("config"),
          py::call_guard<py::gil_scoped_release>(),
          "Deterministic Monte Carlo trials over n_list x algorithms.");
    m.def("sweep_cell_config", &sweep_cell_config, py::arg("sweep"), py::arg("signal"),
          py::arg("beta"));
    m.def("sweep_phase_diagram", &sweep_phase_diagram, py::arg("sweep"),
          py::call_guard<py::gil_scoped_release>(),
          "Phase-diagram sweep over a (signal, beta) grid.");
    m.def("wilson_interval", &wilson_interval, py::arg("successes"), py::arg("trials"),
          "Wilson 95% score interval.");
    m.def("trial_records_to_csv", &trial_records_to_csv, py::arg("records"));
    m.def("trial_records_to_json", &trial_records_to_json, py::arg("records"));
    m.def("sweep_to_csv", &sweep_to_csv, py::arg("cells"));
    m.def("sweep_to_json", &sweep_to_json, py::arg("cells"));
    m.def("threshold_report_to_json", &threshold_report_to_json, py::arg("report"));
    m.def("algorithm_name", &algorithm_name, py::arg("algorithm"));
    m.def("channel_name", &channel_name, py::arg("channel"));
    m.def("cli",
          [](const std::vector<std::string>& args) { return cli_main(args); },
          py::arg("args"), "Runs the command-line interface in process.");

    // ---- io ----

    m.def("fmt_double", &fmt_double, py::arg("x"),
          "Shortest round-trip decimal; 'inf'/'-inf' literals for infinities.");
    m.def("parse_double", &parse_double, py::arg("s"));
    m.def("observation_to_text", &observation_to_text, py::arg("obs"));
    m.def("observation_from_text", &observation_from_text, py::arg("text"));
    m.def("labels_to_text", &labels_to_text, py::arg("labels"));
    m.def("labels_from_text", &labels_from_text, py::arg("text"));
    m.def("scores_to_text", &scores_to_text, py::arg("scores"));
    m.def("scores_from_text", &scores_from_text, py::arg("text"));
}
