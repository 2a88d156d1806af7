#include <cmath>
#include <set>
#include <vector>

#include "blockrec/rng.hpp"
#include "doctest.h"

using namespace blockrec;

TEST_SUITE("rng") {
    TEST_CASE("identical keys reproduce the identical sequence") {
        RngStream a(42), b(42);
        for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
    }

    TEST_CASE("derive_key separates labels") {
        std::set<std::uint64_t> keys;
        for (std::uint64_t n : {100u, 200u, 300u})
            for (std::uint64_t t = 0; t < 10; ++t) keys.insert(derive_key(7, n, t));
        CHECK(keys.size() == 30);
    }

    TEST_CASE("derive_stream separates purposes") {
        std::uint64_t seed = derive_key(9, 500, 3);
        RngStream labels = derive_stream(seed, 0, StreamPurpose::Labels);
        RngStream noise = derive_stream(seed, 0, StreamPurpose::Noise);
        RngStream side = derive_stream(seed, 0, StreamPurpose::SideInfo);
        CHECK(labels.next_u64() != noise.next_u64());
        CHECK(noise.next_u64() != side.next_u64());
    }

    TEST_CASE("next_unit stays inside the open interval and has the right mean") {
        RngStream r(123);
        const int trials = 100000;
        double sum = 0.0;
        for (int i = 0; i < trials; ++i) {
            double u = r.next_unit();
            REQUIRE(u > 0.0);
            REQUIRE(u < 1.0);
            sum += u;
        }
        double mean = sum / trials;
        // sd of the mean is 1/sqrt(12 trials)
        CHECK(std::fabs(mean - 0.5) < 3.0 / std::sqrt(12.0 * trials));
    }

    TEST_CASE("next_gaussian matches the first two moments") {
        RngStream r(321);
        const int trials = 100000;
        double sum = 0.0, sumsq = 0.0;
        for (int i = 0; i < trials; ++i) {
            double g = r.next_gaussian();
            sum += g;
            sumsq += g * g;
        }
        double mean = sum / trials;
        double var = sumsq / trials - mean * mean;
        CHECK(std::fabs(mean) < 3.0 / std::sqrt(double(trials)));
        // var of the sample variance of a standard gaussian is ~2/n
        CHECK(std::fabs(var - 1.0) < 3.0 * std::sqrt(2.0 / trials));
    }

    TEST_CASE("next_bernoulli tracks its probability") {
        RngStream r(555);
        const int trials = 100000;
        int hits = 0;
        for (int i = 0; i < trials; ++i) hits += r.next_bernoulli(0.3) ? 1 : 0;
        double rate = double(hits) / trials;
        CHECK(std::fabs(rate - 0.3) < 3.0 * std::sqrt(0.3 * 0.7 / trials));
    }
}
