#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "blockrec/harness.hpp"
#include "blockrec/io.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace blockrec;

namespace {

namespace fs = std::filesystem;

struct TempDir {
    fs::path path;
    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() /
               ("blockrec_cli_" + std::to_string(::getpid()) + "_" + std::to_string(++counter));
        fs::create_directories(path);
    }
    ~TempDir() { std::error_code ec; fs::remove_all(path, ec); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

int run(const std::vector<std::string>& args) { return cli_main(args); }

std::string strip_runtime_csv(const std::string& text) {
    std::string out;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t eol = text.find('\n', pos);
        if (eol == std::string::npos) eol = text.size();
        std::string line = text.substr(pos, eol - pos);
        out += line.substr(0, line.rfind(','));
        out += '\n';
        pos = eol + 1;
    }
    return out;
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("threshold subcommand emits the exact json report") {
        TempDir dir;
        auto out = dir.file("report.json");
        CHECK(run({"threshold", "--model", "ros", "--rho", "0.5", "--a", "1", "--b", "-1",
                   "--channel", "bec", "--beta", "0.6", "--out", out}) == 0);
        CHECK(read_text_file(out) ==
              "{\"model\": \"ros\", \"channel\": \"bec\", \"beta\": 0.6, \"value\": 1.1, "
              "\"recoverable\": true, \"critical\": false, \"degenerate\": false}\n");
    }

    TEST_CASE("argument errors exit with code 2") {
        CHECK(run({"frobnicate"}) == 2);
        CHECK(run({}) == 2);                               // missing subcommand
        CHECK(run({"sample"}) == 2);                       // missing --n
        CHECK(run({"threshold", "--model", "pancake"}) == 2);
        CHECK(run({"recover", "--algorithm", "genie"}) == 2);  // missing --obs
        TempDir dir;
        CHECK(run({"sample", "--n", "12", "--channel", "bec", "--beta", "0.5", "--out",
                   dir.file("obs.txt")}) == 2);  // channel without --side-out
        CHECK(run({"trials", "--trials", "1"}) == 2);  // no --n and no --config
    }

    TEST_CASE("runtime failures exit with code 1") {
        TempDir dir;
        auto bad = dir.file("bad_obs.txt");
        write_text_file(bad, "not an observation\n");
        CHECK(run({"recover", "--obs", bad, "--algorithm", "spectral"}) == 1);
        CHECK(run({"recover", "--obs", dir.file("missing.txt"), "--algorithm", "spectral"}) == 1);
    }

    TEST_CASE("help requests succeed") {
        CHECK(run({"--help"}) == 0);
        CHECK(run({"sample", "--help"}) == 0);
    }

    TEST_CASE("sample then recover round-trips the planted labels") {
        TempDir dir;
        auto obs = dir.file("obs.txt");
        auto labels = dir.file("labels.txt");
        auto side = dir.file("side.txt");
        // strong erasure side information: nearly every label is revealed and
        // the rest sit far above the decision boundary
        CHECK(run({"sample", "--n", "120", "--model", "ros", "--rho", "0.4", "--a", "1.316",
                   "--b", "-1.316", "--channel", "bec", "--beta", "3.0", "--seed", "9",
                   "--labels-out", labels, "--side-out", side, "--out", obs}) == 0);
        auto est = dir.file("est.txt");
        CHECK(run({"recover", "--obs", obs, "--algorithm", "spectral", "--model", "ros", "--rho",
                   "0.4", "--a", "1.316", "--b", "-1.316", "--channel", "bec", "--beta", "3.0",
                   "--side", side, "--out", est}) == 0);
        auto planted = labels_from_text(read_text_file(labels));
        auto recovered = labels_from_text(read_text_file(est));
        CHECK(recovered == planted);

        // the genie path needs the planted labels and matches them here too
        auto genie_est = dir.file("genie.txt");
        CHECK(run({"recover", "--obs", obs, "--algorithm", "genie", "--model", "ros", "--rho",
                   "0.4", "--a", "1.316", "--b", "-1.316", "--channel", "bec", "--beta", "3.0",
                   "--side", side, "--labels", labels, "--out", genie_est}) == 0);
        CHECK(labels_from_text(read_text_file(genie_est)) == planted);

        // genie without --labels is an argument error
        CHECK(run({"recover", "--obs", obs, "--algorithm", "genie", "--model", "ros"}) == 2);
    }

    TEST_CASE("sampling is reproducible byte for byte") {
        TempDir dir;
        auto a = dir.file("a.txt"), b = dir.file("b.txt");
        for (auto* path : {&a, &b})
            CHECK(run({"sample", "--n", "40", "--model", "sbm", "--a1", "6", "--a2", "4", "--b",
                       "1.5", "--seed", "123", "--out", *path}) == 0);
        CHECK(read_text_file(a) == read_text_file(b));
    }

    TEST_CASE("trial tables are reproducible apart from runtimes") {
        TempDir dir;
        auto a = dir.file("a.csv"), b = dir.file("b.csv");
        std::vector<std::string> args{"trials", "--model", "ros",  "--rho", "0.45",
                                      "--a",    "1.2",     "--b",  "-1.1", "--n",
                                      "30,50",  "--trials", "3",   "--seed", "7"};
        auto run_to = [&](const std::string& path) {
            auto cmd = args;
            cmd.push_back("--out");
            cmd.push_back(path);
            CHECK(run(cmd) == 0);
        };
        run_to(a);
        run_to(b);
        auto ta = read_text_file(a), tb = read_text_file(b);
        CHECK(strip_runtime_csv(ta) == strip_runtime_csv(tb));
        CHECK(std::count(ta.begin(), ta.end(), '\n') == 1 + 2 * 3 * 2);

        // json format parses and matches the csv record count
        auto j = dir.file("a.json");
        auto cmd = args;
        cmd.insert(cmd.end(), {"--format", "json", "--out", j});
        CHECK(run(cmd) == 0);
        auto parsed = nlohmann::json::parse(read_text_file(j));
        CHECK(parsed.size() == 2 * 3 * 2);
    }

    TEST_CASE("a json config file reproduces the flag-driven run") {
        TempDir dir;
        auto cfg = dir.file("config.json");
        write_text_file(cfg, R"({
            "model": "ros", "rho": 0.45, "a": 1.2, "b": -1.1,
            "n_list": [30, 50], "trials": 3, "seed": 7,
            "algorithms": ["genie", "spectral"], "success": "exact"
        })");
        auto from_cfg = dir.file("cfg.csv"), from_flags = dir.file("flags.csv");
        CHECK(run({"trials", "--config", cfg, "--out", from_cfg}) == 0);
        CHECK(run({"trials", "--model", "ros", "--rho", "0.45", "--a", "1.2", "--b", "-1.1",
                   "--n", "30,50", "--trials", "3", "--seed", "7", "--out", from_flags}) == 0);
        CHECK(strip_runtime_csv(read_text_file(from_cfg)) ==
              strip_runtime_csv(read_text_file(from_flags)));

        // --seed on the command line overrides the config seed
        auto reseeded = dir.file("reseeded.csv");
        CHECK(run({"trials", "--config", cfg, "--seed", "8", "--out", reseeded}) == 0);
        CHECK(strip_runtime_csv(read_text_file(reseeded)) !=
              strip_runtime_csv(read_text_file(from_cfg)));
    }

    TEST_CASE("analytic sweeps are byte-deterministic") {
        TempDir dir;
        auto a = dir.file("a.csv"), b = dir.file("b.csv");
        for (auto* path : {&a, &b})
            CHECK(run({"sweep", "--model", "ros", "--channel", "bsc", "--signal-steps", "4",
                       "--beta-steps", "3", "--trials", "0", "--out", *path}) == 0);
        auto text = read_text_file(a);
        CHECK(text == read_text_file(b));
        CHECK(std::count(text.begin(), text.end(), '\n') == 1 + 4 * 3);
        CHECK(text.rfind("signal,beta,regime,threshold_value,recoverable,algorithm,"
                         "successes,trials,rate,wilson_lo,wilson_hi\n",
                         0) == 0);
    }

    TEST_CASE("monte carlo sweeps emit one row per cell and algorithm") {
        TempDir dir;
        auto out = dir.file("sweep.csv");
        CHECK(run({"sweep", "--model", "sbm", "--channel", "bec", "--signal-min", "0.5",
                   "--signal-max", "1.5", "--signal-steps", "2", "--beta-min", "0.4",
                   "--beta-max", "0.4", "--beta-steps", "1", "--n", "60", "--trials", "2",
                   "--algorithms", "spectral,dp", "--seed", "3", "--out", out}) == 0);
        auto text = read_text_file(out);
        CHECK(std::count(text.begin(), text.end(), '\n') == 1 + 2 * 1 * 2);
    }
}
