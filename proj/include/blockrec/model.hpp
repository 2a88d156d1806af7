#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "blockrec/mat.hpp"
#include "blockrec/rng.hpp"

namespace blockrec {

/// Gaussian rank-one-spike observation model: A_ij ~ N(v_i v_j sqrt(log n / n), 1)
/// for i<j, where v_i = a on the +1 community and b on the -1 community.
/// Z2-synchronization is the a = -b slice; submatrix localization is b = 0.
struct RosParams {
    double rho;
    double a;
    double b;

    void validate() const;
};

/// Bernoulli two-community block model with edge probabilities
/// p1 = a1 log n / n (within +1), p2 = a2 log n / n (within -1), q = b log n / n (across).
struct SbmParams {
    double rho;
    double a1;
    double a2;
    double b;

    void validate() const;
    /// (p1, p2, q) for a given n; throws if any exceeds 1.
    struct EdgeProbs {
        double p1, p2, q;
    };
    EdgeProbs edge_probs(int n) const;
};

/// Planted labels sigma* in {+1,-1}^n. C+ and C- are the index sets of each sign.
struct CommunityAssignment {
    std::vector<std::int8_t> labels;
    int n = 0;

    static CommunityAssignment from_labels(std::vector<std::int8_t> labels);

    int plus_count() const;
    int minus_count() const { return n - plus_count(); }
};

enum class ObsKind { Ros, Sbm };

/// Symmetric zero-diagonal observation matrix. Off-diagonal entries are filled
/// for i<j and mirrored, so symmetry is exact, never approximate.
struct Observation {
    ObsKind kind = ObsKind::Ros;
    Mat a;

    int n() const { return a.n(); }

    /// Validates symmetry and zero diagonal; throws std::invalid_argument.
    static Observation from_matrix(ObsKind kind, Mat m);
};

enum class Channel { None, Bec, Bsc };

/// Side labels y in {-1,0,+1}^n. param is epsilon for BEC, alpha for BSC,
/// unused for None. BSC never produces 0.
struct SideInformation {
    Channel channel = Channel::None;
    std::vector<std::int8_t> y;
    double param = 0.0;
};

/// Strength parameterization: epsilon_n = n^(-beta), alpha_n = 1 / (n^beta + 1).
struct SideInfoStrength {
    double beta;
    int n;
};

/// (epsilon_n, alpha_n) for the given strength; ranges land in (0,1] x (0,1/2].
std::pair<double, double> side_info_params(const SideInfoStrength& strength);

/// i.i.d. labels: +1 with probability rho, else -1. Rejects n < 2 and rho
/// outside the open interval (0,1).
CommunityAssignment sample_labels(int n, double rho, RngStream& rng);

/// Draws a ROS observation. noise_stddev is a test hook: 0 yields the
/// deterministic mean matrix; production callers leave it at 1.
Observation sample_ros(const RosParams& params, const CommunityAssignment& sigma, RngStream& rng,
                       double noise_stddev = 1.0);

/// Draws an SBM observation (0/1 entries). Rejects parameter/n combinations
/// whose edge probabilities exceed 1.
Observation sample_sbm(const SbmParams& params, const CommunityAssignment& sigma, RngStream& rng);

/// Erasure channel: y_i = sigma_i with probability 1-epsilon, else 0.
SideInformation apply_bec(const CommunityAssignment& sigma, double epsilon, RngStream& rng);

/// Flip channel: y_i = sigma_i with probability 1-alpha, else -sigma_i.
SideInformation apply_bsc(const CommunityAssignment& sigma, double alpha, RngStream& rng);

/// Spike vector v*: v_i = a where sigma_i = +1, b where sigma_i = -1.
Vec spike_vector(const RosParams& params, const CommunityAssignment& sigma);

}  // namespace blockrec
