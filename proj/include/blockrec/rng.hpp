#pragma once

#include <cmath>
#include <cstdint>

namespace blockrec {

/// 64-bit avalanche (SplitMix64 finalizer). Bijective on uint64.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

/// Stream labels used to derive independent substreams per (trial, purpose).
enum class StreamPurpose : std::uint64_t {
    Labels = 1,
    Noise = 2,
    SideInfo = 3,
    Generic = 4,
};

/// Counter-based random stream: output i is a pure function of (key, i), so
/// streams derived from distinct keys are independent and trials can run in
/// any order (or in parallel) with bit-identical results.
class RngStream {
public:
    explicit RngStream(std::uint64_t key) : key_(key), counter_(0) {}

    std::uint64_t next_u64() {
        return mix64(key_ + 0x9e3779b97f4a7c15ULL * ++counter_);
    }

    /// Uniform on (0,1), both endpoints excluded (safe under log).
    double next_unit() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller; consumes exactly two uniforms.
    double next_gaussian() {
        double u = next_unit();
        double v = next_unit();
        return std::sqrt(-2.0 * std::log(u)) * std::cos(6.283185307179586476925286766559 * v);
    }

    bool next_bernoulli(double p) { return next_unit() < p; }

private:
    std::uint64_t key_;
    std::uint64_t counter_;
};

/// Derives the key for a (label_a, label_b) substream of a master seed.
constexpr std::uint64_t derive_key(std::uint64_t master, std::uint64_t label_a,
                                   std::uint64_t label_b = 0) {
    std::uint64_t k = mix64(master ^ 0x6a09e667f3bcc908ULL);
    k = mix64(k ^ mix64(label_a ^ 0xbb67ae8584caa73bULL));
    k = mix64(k ^ mix64(label_b ^ 0x3c6ef372fe94f82bULL));
    return k;
}

inline RngStream derive_stream(std::uint64_t master, std::uint64_t trial, StreamPurpose purpose) {
    return RngStream(derive_key(master, trial, static_cast<std::uint64_t>(purpose)));
}

}  // namespace blockrec
