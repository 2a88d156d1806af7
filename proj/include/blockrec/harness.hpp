#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "blockrec/model.hpp"
#include "blockrec/thresholds.hpp"

namespace blockrec {

enum class Algorithm { Genie, Spectral, Dp };
enum class SuccessCriterion { Exact, Partition };

std::string algorithm_name(Algorithm alg);
std::string channel_name(Channel ch);

/// Monte Carlo experiment description. params holds RosParams or SbmParams;
/// the partition criterion is legal only for the symmetric model with no
/// side information (ROS: rho = 1/2 and a = -b; SBM: rho = 1/2 and a1 = a2),
/// where the flipped labeling is statistically indistinguishable.
struct ExperimentConfig {
    std::variant<RosParams, SbmParams> params;
    Channel channel = Channel::None;
    double beta = 0.0;
    std::vector<int> n_list;
    int trials = 0;
    std::uint64_t seed = 0;
    std::vector<Algorithm> algorithms;
    SuccessCriterion success_criterion = SuccessCriterion::Exact;

    ObsKind kind() const;
    void validate() const;
};

/// One algorithm run on one sampled instance. score_gap_inf compares the
/// algorithm's winning score vector against the genie scores for the same
/// instance (finite entries by sup-norm, infinite entries by sign agreement).
struct TrialRecord {
    std::uint64_t seed = 0;
    int n = 0;
    std::string algorithm;
    bool success = false;
    double margin = 0.0;
    double score_gap_inf = 0.0;
    double runtime_ms = 0.0;
};

/// Runs trials x |n_list| x |algorithms| deterministic trials: per-trial
/// seeds derive from (master seed, n, trial index), so records are identical
/// across runs and across worker counts. Per-trial algorithm failures are
/// recorded as unsuccessful trials, not propagated.
std::vector<TrialRecord> run_trials(const ExperimentConfig& config);

/// Phase-diagram sweep over a (signal, beta) grid at one channel. signal is
/// the channel-None threshold value: ROS cells use rho = 1/2, a = (2s)^(1/4),
/// b = -a (so Psi/8 = s); SBM cells fix cross-rate b and use rho = 1/2,
/// a1 = a2 = (sqrt(b) + sqrt(2s))^2 (so sup D_t = s).
struct SweepConfig {
    ObsKind model = ObsKind::Ros;
    Channel channel = Channel::None;
    double signal_min = 0.25, signal_max = 2.0;
    int signal_steps = 8;
    double beta_min = 0.0, beta_max = 1.5;
    int beta_steps = 7;
    int n = 0;
    int trials = 0;  // 0 = analytic columns only
    std::uint64_t seed = 0;
    std::vector<Algorithm> algorithms;
    double sbm_b = 1.0;
};

/// One output row per (cell, algorithm); trials = 0 emits one analytic row
/// per cell with empty algorithm fields.
struct SweepCell {
    double signal = 0.0;
    double beta = 0.0;
    std::string regime;  // ROS: five-region tag; SBM: recoverability verdict
    double threshold_value = 0.0;
    bool recoverable = false;
    std::string algorithm;
    int successes = 0;
    int trials = 0;
    double rate = 0.0;
    double wilson_lo = 0.0;
    double wilson_hi = 0.0;
};

/// The per-cell experiment a sweep runs; exposed so a one-cell grid is
/// checkable against run_trials directly. Every cell reuses the sweep's
/// master seed (cells are distinguished by their parameters, and records
/// stay comparable along grid lines).
ExperimentConfig sweep_cell_config(const SweepConfig& sweep, double signal, double beta);

std::vector<SweepCell> sweep_phase_diagram(const SweepConfig& sweep);

/// Wilson 95% score interval for successes out of trials.
std::pair<double, double> wilson_interval(int successes, int trials);

/// Serialization. Byte-deterministic apart from the runtime_ms column.
std::string trial_records_to_csv(const std::vector<TrialRecord>& records);
std::string trial_records_to_json(const std::vector<TrialRecord>& records);
std::string sweep_to_csv(const std::vector<SweepCell>& cells);
std::string sweep_to_json(const std::vector<SweepCell>& cells);
std::string threshold_report_to_json(const ThresholdReport& report);

/// CLI entry: subcommands sample, recover, threshold, sweep, trials.
/// Returns 0 on success, 2 on argument errors (usage printed), 1 on runtime
/// failure.
int cli_main(int argc, const char* const* argv);
int cli_main(const std::vector<std::string>& args);

}  // namespace blockrec
