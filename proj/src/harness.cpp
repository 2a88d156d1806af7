#include "blockrec/harness.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "blockrec/io.hpp"
#include "blockrec/recovery.hpp"
#include "blockrec/scores.hpp"

namespace blockrec {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

bool symmetric_model(const ExperimentConfig& config) {
    if (const auto* ros = std::get_if<RosParams>(&config.params))
        return ros->rho == 0.5 && ros->a == -ros->b;
    const auto& sbm = std::get<SbmParams>(config.params);
    return sbm.rho == 0.5 && sbm.a1 == sbm.a2;
}

bool labels_equal(const std::vector<std::int8_t>& x, const std::vector<std::int8_t>& y, bool flipped) {
    for (size_t i = 0; i < x.size(); ++i)
        if (int(x[i]) != (flipped ? -int(y[i]) : int(y[i]))) return false;
    return true;
}

struct TrialOutcome {
    std::vector<std::int8_t> estimate;
    ScoreVector scores;
};

}  // namespace

std::string algorithm_name(Algorithm alg) {
    switch (alg) {
        case Algorithm::Genie: return "genie";
        case Algorithm::Spectral: return "spectral";
        case Algorithm::Dp: return "dp";
    }
    return "genie";
}

std::string channel_name(Channel ch) {
    switch (ch) {
        case Channel::None: return "none";
        case Channel::Bec: return "bec";
        case Channel::Bsc: return "bsc";
    }
    return "none";
}

ObsKind ExperimentConfig::kind() const {
    return std::holds_alternative<RosParams>(params) ? ObsKind::Ros : ObsKind::Sbm;
}

void ExperimentConfig::validate() const {
    if (const auto* ros = std::get_if<RosParams>(&params))
        ros->validate();
    else
        std::get<SbmParams>(params).validate();
    require(trials >= 0, "ExperimentConfig: trials must be nonnegative");
    require(beta >= 0.0, "ExperimentConfig: beta must be nonnegative");
    require(!n_list.empty(), "ExperimentConfig: n_list must be nonempty");
    for (int n : n_list) {
        require(n >= 2, "ExperimentConfig: every n must be at least 2");
        if (const auto* sbm = std::get_if<SbmParams>(&params)) sbm->edge_probs(n);
    }
    for (Algorithm alg : algorithms)
        require(alg != Algorithm::Dp || channel != Channel::None,
                "ExperimentConfig: degree-profiling requires side information");
    if (success_criterion == SuccessCriterion::Partition)
        require(channel == Channel::None && symmetric_model(*this),
                "ExperimentConfig: partition criterion applies only to the symmetric "
                "model with no side information");
}

std::vector<TrialRecord> run_trials(const ExperimentConfig& config) {
    config.validate();
    const size_t n_sizes = config.n_list.size();
    const size_t per_task = config.algorithms.size();
    const size_t tasks = n_sizes * static_cast<size_t>(config.trials);
    std::vector<std::vector<TrialRecord>> slots(tasks);

    auto run_task = [&](size_t task) {
        const int n = config.n_list[task / static_cast<size_t>(config.trials)];
        const int trial = static_cast<int>(task % static_cast<size_t>(config.trials));
        const std::uint64_t trial_seed =
            derive_key(config.seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(trial));
        std::vector<TrialRecord>& out = slots[task];
        out.resize(per_task);
        for (size_t a = 0; a < per_task; ++a) {
            out[a].seed = trial_seed;
            out[a].n = n;
            out[a].algorithm = algorithm_name(config.algorithms[a]);
            out[a].success = false;
            out[a].margin = kNan;
            out[a].score_gap_inf = kNan;
            out[a].runtime_ms = 0.0;
        }

        CommunityAssignment sigma;
        Observation obs;
        SideInformation side;
        ScoreVector z_star;
        try {
            RngStream labels_rng = derive_stream(trial_seed, 0, StreamPurpose::Labels);
            RngStream noise_rng = derive_stream(trial_seed, 0, StreamPurpose::Noise);
            double rho = std::holds_alternative<RosParams>(config.params)
                             ? std::get<RosParams>(config.params).rho
                             : std::get<SbmParams>(config.params).rho;
            sigma = sample_labels(n, rho, labels_rng);
            if (const auto* ros = std::get_if<RosParams>(&config.params)) {
                obs = sample_ros(*ros, sigma, noise_rng);
                z_star = genie_scores_ros(obs, sigma, *ros);
            } else {
                const auto& sbm = std::get<SbmParams>(config.params);
                obs = sample_sbm(sbm, sigma, noise_rng);
                z_star = genie_scores_sbm(obs, sigma, sbm);
            }
            if (config.channel != Channel::None) {
                RngStream side_rng = derive_stream(trial_seed, 0, StreamPurpose::SideInfo);
                auto [eps, alpha] = side_info_params({config.beta, n});
                side = config.channel == Channel::Bec ? apply_bec(sigma, eps, side_rng)
                                                      : apply_bsc(sigma, alpha, side_rng);
                z_star = apply_side_info_to_scores(z_star, side);
            }
        } catch (const std::exception&) {
            return;  // sampling failed: every algorithm records a failure
        }

        for (size_t a = 0; a < per_task; ++a) {
            auto begin = std::chrono::steady_clock::now();
            try {
                TrialOutcome run;
                switch (config.algorithms[a]) {
                    case Algorithm::Genie:
                        run.scores = z_star;
                        run.estimate = genie_estimate(z_star);
                        break;
                    case Algorithm::Spectral: {
                        RecoveryResult res =
                            std::holds_alternative<RosParams>(config.params)
                                ? spectral_ros(obs, std::get<RosParams>(config.params), side)
                                : spectral_sbm(obs, std::get<SbmParams>(config.params), side);
                        for (const Candidate& cand : res.candidates)
                            if (cand.signs == res.chosen_sign) {
                                run.scores = cand.scores;
                                break;
                            }
                        run.estimate = std::move(res.estimate);
                        break;
                    }
                    case Algorithm::Dp: {
                        RecoveryResult res =
                            std::holds_alternative<RosParams>(config.params)
                                ? dp_ros(obs, std::get<RosParams>(config.params), side)
                                : dp_sbm(obs, std::get<SbmParams>(config.params), side);
                        run.scores = res.candidates[0].scores;
                        run.estimate = std::move(res.estimate);
                        break;
                    }
                }
                bool success = labels_equal(run.estimate, sigma.labels, false);
                if (!success && config.success_criterion == SuccessCriterion::Partition)
                    success = labels_equal(run.estimate, sigma.labels, true);
                out[a].success = success;
                out[a].margin = margin(run.scores, sigma).min_signed_score;
                out[a].score_gap_inf = score_gap_inf(run.scores, z_star);
            } catch (const std::exception&) {
                // recorded as failure with NaN diagnostics
            }
            auto end = std::chrono::steady_clock::now();
            out[a].runtime_ms = std::chrono::duration<double, std::milli>(end - begin).count();
        }
    };

    unsigned hw = std::thread::hardware_concurrency();
    size_t workers = std::min<size_t>(std::max(1u, hw), tasks);
    if (workers <= 1) {
        for (size_t task = 0; task < tasks; ++task) run_task(task);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (size_t w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (size_t task = next.fetch_add(1); task < tasks; task = next.fetch_add(1))
                    run_task(task);
            });
        for (std::thread& th : pool) th.join();
    }

    std::vector<TrialRecord> records;
    records.reserve(tasks * per_task);
    for (std::vector<TrialRecord>& slot : slots)
        for (TrialRecord& rec : slot) records.push_back(std::move(rec));
    return records;
}

std::pair<double, double> wilson_interval(int successes, int trials) {
    require(trials >= 0 && successes >= 0 && successes <= trials,
            "wilson_interval: need 0 <= successes <= trials");
    if (trials == 0) return {0.0, 1.0};
    constexpr double z = 1.959963984540054;  // 97.5% normal quantile
    double n = trials, phat = double(successes) / n;
    double z2 = z * z;
    double denom = 1.0 + z2 / n;
    double center = (phat + z2 / (2.0 * n)) / denom;
    double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

ExperimentConfig sweep_cell_config(const SweepConfig& sweep, double signal, double beta) {
    require(signal > 0.0, "sweep: signal values must be positive");
    ExperimentConfig config;
    if (sweep.model == ObsKind::Ros) {
        double a = std::pow(2.0 * signal, 0.25);  // Psi/8 = a^4/2 = signal at rho=1/2, b=-a
        config.params = RosParams{0.5, a, -a};
    } else {
        require(sweep.sbm_b > 0.0, "sweep: sbm_b must be positive");
        double root = std::sqrt(sweep.sbm_b) + std::sqrt(2.0 * signal);  // (sqrt(a)-sqrt(b))^2/2 = signal
        config.params = SbmParams{0.5, root * root, root * root, sweep.sbm_b};
    }
    config.channel = sweep.channel;
    config.beta = sweep.channel == Channel::None ? 0.0 : beta;
    config.n_list = {sweep.n};
    config.trials = sweep.trials;
    config.seed = sweep.seed;
    config.algorithms = sweep.algorithms;
    config.success_criterion = sweep.channel == Channel::None ? SuccessCriterion::Partition
                                                              : SuccessCriterion::Exact;
    return config;
}

std::vector<SweepCell> sweep_phase_diagram(const SweepConfig& sweep) {
    require(sweep.signal_steps >= 1 && sweep.beta_steps >= 1, "sweep: steps must be at least 1");
    require(sweep.trials == 0 || sweep.n >= 2, "sweep: n must be at least 2 when trials > 0");
    auto grid_value = [](double lo, double hi, int steps, int i) {
        return steps == 1 ? lo : lo + (hi - lo) * double(i) / double(steps - 1);
    };
    std::vector<SweepCell> cells;
    for (int si = 0; si < sweep.signal_steps; ++si) {
        double signal = grid_value(sweep.signal_min, sweep.signal_max, sweep.signal_steps, si);
        for (int bi = 0; bi < sweep.beta_steps; ++bi) {
            double beta = grid_value(sweep.beta_min, sweep.beta_max, sweep.beta_steps, bi);
            SweepCell base;
            base.signal = signal;
            base.beta = beta;
            if (sweep.model == ObsKind::Ros) {
                base.regime = classify_ros_regime(8.0 * signal, beta);
                ThresholdReport rep = ros_threshold_from_psi(8.0 * signal, sweep.channel, beta);
                base.threshold_value = rep.value;
                base.recoverable = rep.recoverable;
            } else {
                ExperimentConfig cell = sweep_cell_config(sweep, signal, beta);
                ThresholdReport rep =
                    sbm_threshold(std::get<SbmParams>(cell.params), sweep.channel, beta);
                base.threshold_value = rep.value;
                base.recoverable = rep.recoverable;
                base.regime = rep.critical ? "critical"
                                           : (rep.recoverable ? "recoverable" : "not-recoverable");
            }
            if (sweep.trials == 0) {
                cells.push_back(base);
                continue;
            }
            ExperimentConfig cell = sweep_cell_config(sweep, signal, beta);
            std::vector<TrialRecord> records = run_trials(cell);
            for (Algorithm alg : sweep.algorithms) {
                SweepCell row = base;
                row.algorithm = algorithm_name(alg);
                row.trials = sweep.trials;
                for (const TrialRecord& rec : records)
                    if (rec.algorithm == row.algorithm && rec.success) ++row.successes;
                row.rate = double(row.successes) / double(row.trials);
                auto [lo, hi] = wilson_interval(row.successes, row.trials);
                row.wilson_lo = lo;
                row.wilson_hi = hi;
                cells.push_back(std::move(row));
            }
        }
    }
    return cells;
}

namespace {

std::string json_double(double x) {
    if (std::isnan(x)) return "null";
    if (std::isinf(x)) return x > 0 ? "\"inf\"" : "\"-inf\"";
    return fmt_double(x);
}

std::string csv_double(double x) { return fmt_double(x); }

}  // namespace

std::string trial_records_to_csv(const std::vector<TrialRecord>& records) {
    std::string out = "seed,n,algorithm,success,margin,score_gap_inf,runtime_ms\n";
    for (const TrialRecord& rec : records) {
        out += std::to_string(rec.seed);
        out += ',';
        out += std::to_string(rec.n);
        out += ',';
        out += rec.algorithm;
        out += ',';
        out += rec.success ? '1' : '0';
        out += ',';
        out += csv_double(rec.margin);
        out += ',';
        out += csv_double(rec.score_gap_inf);
        out += ',';
        out += csv_double(rec.runtime_ms);
        out += '\n';
    }
    return out;
}

std::string trial_records_to_json(const std::vector<TrialRecord>& records) {
    std::string out = "[";
    for (size_t i = 0; i < records.size(); ++i) {
        const TrialRecord& rec = records[i];
        if (i > 0) out += ',';
        out += "\n  {\"seed\": " + std::to_string(rec.seed) + ", \"n\": " + std::to_string(rec.n) +
               ", \"algorithm\": \"" + rec.algorithm + "\", \"success\": " +
               (rec.success ? "true" : "false") + ", \"margin\": " + json_double(rec.margin) +
               ", \"score_gap_inf\": " + json_double(rec.score_gap_inf) +
               ", \"runtime_ms\": " + json_double(rec.runtime_ms) + "}";
    }
    out += records.empty() ? "]\n" : "\n]\n";
    return out;
}

std::string sweep_to_csv(const std::vector<SweepCell>& cells) {
    std::string out =
        "signal,beta,regime,threshold_value,recoverable,algorithm,successes,trials,rate,"
        "wilson_lo,wilson_hi\n";
    for (const SweepCell& cell : cells) {
        out += csv_double(cell.signal);
        out += ',';
        out += csv_double(cell.beta);
        out += ',';
        out += cell.regime;
        out += ',';
        out += csv_double(cell.threshold_value);
        out += ',';
        out += cell.recoverable ? '1' : '0';
        out += ',';
        out += cell.algorithm;
        out += ',';
        out += std::to_string(cell.successes);
        out += ',';
        out += std::to_string(cell.trials);
        out += ',';
        out += csv_double(cell.rate);
        out += ',';
        out += csv_double(cell.wilson_lo);
        out += ',';
        out += csv_double(cell.wilson_hi);
        out += '\n';
    }
    return out;
}

std::string sweep_to_json(const std::vector<SweepCell>& cells) {
    std::string out = "[";
    for (size_t i = 0; i < cells.size(); ++i) {
        const SweepCell& cell = cells[i];
        if (i > 0) out += ',';
        out += "\n  {\"signal\": " + json_double(cell.signal) + ", \"beta\": " + json_double(cell.beta) +
               ", \"regime\": \"" + cell.regime + "\", \"threshold_value\": " +
               json_double(cell.threshold_value) + ", \"recoverable\": " +
               (cell.recoverable ? "true" : "false") + ", \"algorithm\": \"" + cell.algorithm +
               "\", \"successes\": " + std::to_string(cell.successes) +
               ", \"trials\": " + std::to_string(cell.trials) + ", \"rate\": " + json_double(cell.rate) +
               ", \"wilson_lo\": " + json_double(cell.wilson_lo) +
               ", \"wilson_hi\": " + json_double(cell.wilson_hi) + "}";
    }
    out += cells.empty() ? "]\n" : "\n]\n";
    return out;
}

std::string threshold_report_to_json(const ThresholdReport& report) {
    std::string out = "{\"model\": \"" + report.model + "\", \"channel\": \"" + report.channel +
                      "\", \"beta\": " + json_double(report.beta) +
                      ", \"value\": " + json_double(report.value) +
                      ", \"recoverable\": " + (report.recoverable ? "true" : "false") +
                      ", \"critical\": " + std::string(report.critical ? "true" : "false");
    if (report.optimizer_t) out += ", \"optimizer_t\": " + json_double(*report.optimizer_t);
    out += ", \"degenerate\": " + std::string(report.degenerate ? "true" : "false") + "}\n";
    return out;
}

}  // namespace blockrec
