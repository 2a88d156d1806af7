#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <limits>
#include <string>

#include "blockrec/io.hpp"
#include "blockrec/model.hpp"
#include "blockrec/rng.hpp"
#include "doctest.h"

using namespace blockrec;

namespace {
std::string temp_path(const std::string& tag) {
    static int counter = 0;
    auto dir = std::filesystem::temp_directory_path();
    return (dir / ("blockrec_io_" + tag + "_" + std::to_string(++counter) + ".txt")).string();
}
}  // namespace

TEST_SUITE("io") {
    TEST_CASE("doubles survive a text round trip bit for bit") {
        for (double x : {0.0, -0.0, 0.1, 1.0 / 3.0, -2.5e-17, 1e308, 4.9e-324,
                         std::numeric_limits<double>::infinity(),
                         -std::numeric_limits<double>::infinity()}) {
            std::string s = fmt_double(x);
            double back = parse_double(s);
            CHECK(std::memcmp(&back, &x, sizeof x) == 0);
        }
        CHECK(fmt_double(std::numeric_limits<double>::infinity()) == "inf");
        CHECK(fmt_double(-std::numeric_limits<double>::infinity()) == "-inf");
        CHECK(fmt_double(0.1) == "0.1");
    }

    TEST_CASE("observation text round trip preserves every entry") {
        RngStream r(41);
        auto sigma = sample_labels(7, 0.4, r);
        auto obs = sample_ros(RosParams{0.4, 1.2, -0.8}, sigma, r);
        std::string text = observation_to_text(obs);
        CHECK(text.rfind("BLOCKREC-OBS v1 n=7 kind=ros", 0) == 0);
        auto back = observation_from_text(text);
        CHECK(back.kind == ObsKind::Ros);
        REQUIRE(back.n() == 7);
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j) CHECK(back.a(i, j) == obs.a(i, j));

        auto sbm = sample_sbm(SbmParams{0.4, 2.0, 1.5, 0.5}, sigma, r);
        auto sb = observation_from_text(observation_to_text(sbm));
        CHECK(sb.kind == ObsKind::Sbm);
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j) CHECK(sb.a(i, j) == sbm.a(i, j));
    }

    TEST_CASE("malformed observation text is rejected") {
        CHECK_THROWS_AS(observation_from_text("nonsense"), std::invalid_argument);
        CHECK_THROWS_AS(observation_from_text("BLOCKREC-OBS v2 n=2 kind=ros\n0 1\n1 0\n"),
                        std::invalid_argument);
        CHECK_THROWS_AS(observation_from_text("BLOCKREC-OBS v1 n=2 kind=tree\n0 1\n1 0\n"),
                        std::invalid_argument);
        // wrong row length
        CHECK_THROWS_AS(observation_from_text("BLOCKREC-OBS v1 n=2 kind=ros\n0 1 3\n1 0\n"),
                        std::invalid_argument);
        // asymmetric body
        CHECK_THROWS_AS(observation_from_text("BLOCKREC-OBS v1 n=2 kind=ros\n0 1\n2 0\n"),
                        std::invalid_argument);
    }

    TEST_CASE("labels round trip and reject out-of-alphabet entries") {
        std::vector<std::int8_t> labels{1, -1, 0, 1};
        auto text = labels_to_text(labels);
        CHECK(text == "1 -1 0 1\n");
        CHECK(labels_from_text(text) == labels);
        CHECK_THROWS_AS(labels_from_text("1 2 -1\n"), std::invalid_argument);
        CHECK_THROWS_AS(labels_from_text(""), std::invalid_argument);
    }

    TEST_CASE("scores round trip including infinities") {
        auto z = ScoreVector::from_values(
            {1.5, -std::numeric_limits<double>::infinity(), 0.25,
             std::numeric_limits<double>::infinity()});
        auto text = scores_to_text(z);
        CHECK(text == "1.5\n-inf\n0.25\ninf\n");
        auto back = scores_from_text(text);
        REQUIRE(back.n() == 4);
        for (int i = 0; i < 4; ++i) CHECK(back.values[size_t(i)] == z.values[size_t(i)]);
    }

    TEST_CASE("file writes read back verbatim") {
        auto path = temp_path("roundtrip");
        write_text_file(path, "line one\n-inf\n");
        CHECK(read_text_file(path) == "line one\n-inf\n");
        std::filesystem::remove(path);
        CHECK_THROWS_AS(read_text_file(path), std::runtime_error);
    }
}
