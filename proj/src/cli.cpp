#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "blockrec/harness.hpp"
#include "blockrec/io.hpp"
#include "blockrec/recovery.hpp"

namespace blockrec {

namespace {

/// Argument-level mistakes (missing/contradictory flags) exit with 2 and
/// usage text; everything else is a runtime failure exiting with 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Channel channel_from_name(const std::string& name) {
    if (name == "none") return Channel::None;
    if (name == "bec") return Channel::Bec;
    if (name == "bsc") return Channel::Bsc;
    throw std::invalid_argument("unknown channel '" + name + "'");
}

Algorithm algorithm_from_name(const std::string& name) {
    if (name == "genie") return Algorithm::Genie;
    if (name == "spectral") return Algorithm::Spectral;
    if (name == "dp") return Algorithm::Dp;
    throw std::invalid_argument("unknown algorithm '" + name + "'");
}

std::vector<Algorithm> algorithms_from_names(const std::vector<std::string>& names) {
    std::vector<Algorithm> algs;
    for (const std::string& name : names) algs.push_back(algorithm_from_name(name));
    return algs;
}

void emit(const std::string& out, const std::string& content) {
    if (out == "-")
        std::cout << content;
    else
        write_text_file(out, content);
}

/// Model/channel flags shared by several subcommands.
struct ModelOpts {
    std::string model = "ros";
    double rho = 0.5;
    double a = 1.0, b = -1.0;    // ROS spike values; b doubles as the SBM cross rate
    double a1 = 9.0, a2 = 9.0;   // SBM within rates
    std::string channel = "none";
    double beta = 0.0;

    void add_to(CLI::App* sub, double default_b) {
        b = default_b;
        sub->add_option("--model", model, "Observation model")
            ->check(CLI::IsMember({"ros", "sbm"}))
            ->capture_default_str();
        sub->add_option("--rho", rho, "P(label = +1)")->capture_default_str();
        sub->add_option("--a", a, "ROS spike value on the +1 community")->capture_default_str();
        sub->add_option("--b", b, "ROS spike value on the -1 community / SBM cross-community rate")
            ->capture_default_str();
        sub->add_option("--a1", a1, "SBM within-community rate (+1 side)")->capture_default_str();
        sub->add_option("--a2", a2, "SBM within-community rate (-1 side)")->capture_default_str();
        sub->add_option("--channel", channel, "Side-information channel")
            ->check(CLI::IsMember({"none", "bec", "bsc"}))
            ->capture_default_str();
        sub->add_option("--beta", beta, "Side-information strength")->capture_default_str();
    }

    bool is_ros() const { return model == "ros"; }
    RosParams ros() const { return RosParams{rho, a, b}; }
    SbmParams sbm() const { return SbmParams{rho, a1, a2, b}; }
    Channel ch() const { return channel_from_name(channel); }
};

SideInformation load_side(const std::string& path, Channel channel, double beta, int n) {
    SideInformation side;
    side.channel = channel;
    if (channel == Channel::None) return side;
    side.y = labels_from_text(read_text_file(path));
    if (static_cast<int>(side.y.size()) != n)
        throw std::invalid_argument("side file length does not match observation size");
    auto [eps, alpha] = side_info_params({beta, n});
    side.param = channel == Channel::Bec ? eps : alpha;
    if (channel == Channel::Bsc)
        for (std::int8_t v : side.y)
            if (v == 0) throw std::invalid_argument("BSC side file cannot contain 0 labels");
    return side;
}

ExperimentConfig config_from_json(const std::string& path) {
    nlohmann::json j = nlohmann::json::parse(read_text_file(path));
    ExperimentConfig config;
    std::string model = j.at("model").get<std::string>();
    if (model == "ros")
        config.params = RosParams{j.at("rho").get<double>(), j.at("a").get<double>(),
                                  j.at("b").get<double>()};
    else if (model == "sbm")
        config.params = SbmParams{j.at("rho").get<double>(), j.at("a1").get<double>(),
                                  j.at("a2").get<double>(), j.at("b").get<double>()};
    else
        throw std::invalid_argument("config: model must be 'ros' or 'sbm'");
    config.channel = channel_from_name(j.value("channel", std::string("none")));
    config.beta = j.value("beta", 0.0);
    config.n_list = j.at("n_list").get<std::vector<int>>();
    config.trials = j.at("trials").get<int>();
    config.seed = j.value("seed", std::uint64_t(1));
    std::vector<std::string> names =
        j.value("algorithms", std::vector<std::string>{"genie", "spectral"});
    config.algorithms = algorithms_from_names(names);
    std::string success = j.value("success", std::string("exact"));
    if (success == "exact")
        config.success_criterion = SuccessCriterion::Exact;
    else if (success == "partition")
        config.success_criterion = SuccessCriterion::Partition;
    else
        throw std::invalid_argument("config: success must be 'exact' or 'partition'");
    return config;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"Two-community block model samplers, thresholds, and recovery"};
    app.require_subcommand(1);

    std::uint64_t seed = 1;
    std::string out = "-";
    std::string format = "csv";
    app.add_option("--seed", seed, "Master RNG seed")->capture_default_str();
    app.add_option("--out", out, "Output path ('-' = stdout)")->capture_default_str();
    app.add_option("--format", format, "Output format for tabular commands")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.fallthrough();

    // sample
    auto* sample = app.add_subcommand("sample", "Draw labels, an observation, and side labels");
    ModelOpts sample_opts;
    int sample_n = 100;
    std::string labels_out, side_out;
    sample_opts.add_to(sample, -1.0);
    sample->add_option("--n", sample_n, "Number of vertices")->required();
    sample->add_option("--labels-out", labels_out, "Write planted labels to this path");
    sample->add_option("--side-out", side_out, "Write side-information labels to this path");
    sample->callback([&] {
        Channel channel = sample_opts.ch();
        if (channel != Channel::None && side_out.empty())
            throw UsageError("sample: --side-out is required with a channel");
        std::uint64_t trial_seed = derive_key(seed, std::uint64_t(sample_n), 0);
        RngStream labels_rng = derive_stream(trial_seed, 0, StreamPurpose::Labels);
        RngStream noise_rng = derive_stream(trial_seed, 0, StreamPurpose::Noise);
        CommunityAssignment sigma = sample_labels(sample_n, sample_opts.rho, labels_rng);
        Observation obs = sample_opts.is_ros() ? sample_ros(sample_opts.ros(), sigma, noise_rng)
                                               : sample_sbm(sample_opts.sbm(), sigma, noise_rng);
        emit(out, observation_to_text(obs));
        if (!labels_out.empty()) write_text_file(labels_out, labels_to_text(sigma.labels));
        if (channel != Channel::None) {
            RngStream side_rng = derive_stream(trial_seed, 0, StreamPurpose::SideInfo);
            auto [eps, alpha] = side_info_params({sample_opts.beta, sample_n});
            SideInformation side = channel == Channel::Bec ? apply_bec(sigma, eps, side_rng)
                                                           : apply_bsc(sigma, alpha, side_rng);
            write_text_file(side_out, labels_to_text(side.y));
        }
    });

    // recover
    auto* recover = app.add_subcommand("recover", "Run a recovery algorithm on an observation file");
    ModelOpts rec_opts;
    std::string rec_obs, rec_side, rec_labels, rec_algorithm;
    rec_opts.add_to(recover, -1.0);
    recover->add_option("--obs", rec_obs, "Observation file")->required();
    recover->add_option("--algorithm", rec_algorithm, "Recovery algorithm")
        ->check(CLI::IsMember({"genie", "spectral", "dp"}))
        ->required();
    recover->add_option("--side", rec_side, "Side-information label file (BEC/BSC)");
    recover->add_option("--labels", rec_labels, "Planted labels file (genie only)");
    recover->callback([&] {
        Observation obs = observation_from_text(read_text_file(rec_obs));
        Channel channel = rec_opts.ch();
        if (channel != Channel::None && rec_side.empty())
            throw UsageError("recover: --side is required with a channel");
        SideInformation side = load_side(rec_side, channel, rec_opts.beta, obs.n());
        Algorithm alg = algorithm_from_name(rec_algorithm);
        std::vector<std::int8_t> estimate;
        if (alg == Algorithm::Genie) {
            if (rec_labels.empty())
                throw UsageError("recover: --labels is required for the genie oracle");
            CommunityAssignment sigma =
                CommunityAssignment::from_labels(labels_from_text(read_text_file(rec_labels)));
            ScoreVector z = rec_opts.is_ros() ? genie_scores_ros(obs, sigma, rec_opts.ros())
                                              : genie_scores_sbm(obs, sigma, rec_opts.sbm());
            if (channel != Channel::None) z = apply_side_info_to_scores(z, side);
            estimate = genie_estimate(z);
        } else if (alg == Algorithm::Spectral) {
            RecoveryResult res = rec_opts.is_ros() ? spectral_ros(obs, rec_opts.ros(), side)
                                                   : spectral_sbm(obs, rec_opts.sbm(), side);
            estimate = std::move(res.estimate);
        } else {
            RecoveryResult res = rec_opts.is_ros() ? dp_ros(obs, rec_opts.ros(), side)
                                                   : dp_sbm(obs, rec_opts.sbm(), side);
            estimate = std::move(res.estimate);
        }
        emit(out, labels_to_text(estimate));
    });

    // threshold
    auto* threshold = app.add_subcommand("threshold", "Evaluate the exact-recovery threshold");
    ModelOpts thr_opts;
    thr_opts.add_to(threshold, -1.0);
    threshold->callback([&] {
        ThresholdReport report = thr_opts.is_ros()
                                     ? ros_threshold(thr_opts.ros(), thr_opts.ch(), thr_opts.beta)
                                     : sbm_threshold(thr_opts.sbm(), thr_opts.ch(), thr_opts.beta);
        emit(out, threshold_report_to_json(report));
    });

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "Phase-diagram sweep over (signal, beta)");
    SweepConfig sweep;
    std::string sweep_model = "ros", sweep_channel = "none";
    std::vector<std::string> sweep_algs = {"genie", "spectral"};
    sweep_cmd->add_option("--model", sweep_model, "Observation model")
        ->check(CLI::IsMember({"ros", "sbm"}))
        ->capture_default_str();
    sweep_cmd->add_option("--channel", sweep_channel, "Side-information channel")
        ->check(CLI::IsMember({"none", "bec", "bsc"}))
        ->capture_default_str();
    sweep_cmd->add_option("--signal-min", sweep.signal_min, "Smallest channel-None threshold value")
        ->capture_default_str();
    sweep_cmd->add_option("--signal-max", sweep.signal_max, "Largest channel-None threshold value")
        ->capture_default_str();
    sweep_cmd->add_option("--signal-steps", sweep.signal_steps, "Grid points along signal")
        ->capture_default_str();
    sweep_cmd->add_option("--beta-min", sweep.beta_min, "Smallest beta")->capture_default_str();
    sweep_cmd->add_option("--beta-max", sweep.beta_max, "Largest beta")->capture_default_str();
    sweep_cmd->add_option("--beta-steps", sweep.beta_steps, "Grid points along beta")
        ->capture_default_str();
    sweep_cmd->add_option("--n", sweep.n, "Vertices per trial");
    sweep_cmd->add_option("--trials", sweep.trials, "Trials per cell (0 = analytic only)")
        ->capture_default_str();
    sweep_cmd->add_option("--algorithms", sweep_algs, "Algorithms to run per cell")
        ->delimiter(',')
        ->capture_default_str();
    sweep_cmd->add_option("--sbm-b", sweep.sbm_b, "SBM cross-community rate held fixed")
        ->capture_default_str();
    sweep_cmd->callback([&] {
        sweep.model = sweep_model == "ros" ? ObsKind::Ros : ObsKind::Sbm;
        sweep.channel = channel_from_name(sweep_channel);
        sweep.seed = seed;
        sweep.algorithms = sweep.trials > 0 ? algorithms_from_names(sweep_algs)
                                            : std::vector<Algorithm>{};
        std::vector<SweepCell> cells = sweep_phase_diagram(sweep);
        emit(out, format == "csv" ? sweep_to_csv(cells) : sweep_to_json(cells));
    });

    // trials
    auto* trials_cmd = app.add_subcommand("trials", "Monte Carlo recovery trials");
    ModelOpts tr_opts;
    std::vector<int> tr_n;
    int tr_trials = 100;
    std::vector<std::string> tr_algs = {"genie", "spectral"};
    std::string tr_success = "exact", tr_config;
    tr_opts.add_to(trials_cmd, -1.0);
    trials_cmd->add_option("--n", tr_n, "Vertex counts (repeat or comma-separate)")->delimiter(',');
    trials_cmd->add_option("--trials", tr_trials, "Trials per n")->capture_default_str();
    trials_cmd->add_option("--algorithms", tr_algs, "Algorithms to run")
        ->delimiter(',')
        ->capture_default_str();
    trials_cmd->add_option("--success", tr_success, "Success criterion")
        ->check(CLI::IsMember({"exact", "partition"}))
        ->capture_default_str();
    trials_cmd->add_option("--config", tr_config, "JSON experiment config (overrides other flags)");
    trials_cmd->callback([&] {
        ExperimentConfig config;
        if (!tr_config.empty()) {
            config = config_from_json(tr_config);
            if (app.count("--seed") > 0) config.seed = seed;
        } else {
            if (tr_n.empty()) throw UsageError("trials: --n is required without --config");
            if (tr_opts.is_ros())
                config.params = tr_opts.ros();
            else
                config.params = tr_opts.sbm();
            config.channel = tr_opts.ch();
            config.beta = tr_opts.beta;
            config.n_list = tr_n;
            config.trials = tr_trials;
            config.seed = seed;
            config.algorithms = algorithms_from_names(tr_algs);
            config.success_criterion =
                tr_success == "exact" ? SuccessCriterion::Exact : SuccessCriterion::Partition;
        }
        std::vector<TrialRecord> records = run_trials(config);
        emit(out, format == "csv" ? trial_records_to_csv(records) : trial_records_to_json(records));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n" << app.help();
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

int cli_main(const std::vector<std::string>& args) {
    std::vector<std::string> storage;
    storage.reserve(args.size() + 1);
    storage.push_back("blockrec");
    for (const std::string& arg : args) storage.push_back(arg);
    std::vector<const char*> argv;
    argv.reserve(storage.size());
    for (const std::string& arg : storage) argv.push_back(arg.c_str());
    return cli_main(static_cast<int>(argv.size()), argv.data());
}

}  // namespace blockrec
