#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "blockrec/model.hpp"
#include "blockrec/scores.hpp"

namespace blockrec {

/// Coefficients of the spectral score combination.
/// ROS:        c1 = sqrt(n) log n (a-b) (rho a^2 + (1-rho) b^2)^(3/2),
///             gamma = (rho (a^2 b^2 - a^4) + (1-rho)(b^4 - a^2 b^2)) log n / 2.
/// SBM rank-2: (c1, c2) solve c1 v1/l1 + c2 v2/l2 = w with w = log(a1/b) on S,
///             log(b/a2) off S, for the two nonzero eigenpairs of the block
///             matrix B over S = {i : i <= rho n} (floor).
/// SBM rank-1: c1 = log(a1/b).
/// SBM gamma:  (rho (b - a1) + (1-rho)(a2 - b)) log n.
struct SpectralCoefficients {
    double c1 = 0.0;
    std::optional<double> c2;
    double gamma = 0.0;
};

/// One scored sign assignment: the score vector for a sign tuple plus its
/// log posterior (up to a shared additive constant).
struct Candidate {
    std::vector<int> signs;
    ScoreVector scores;
    double log_post = 0.0;
};

/// Output of a recovery algorithm. estimate = sgn of the winning candidate's
/// scores; candidates lists every sign tuple evaluated, in lexicographic
/// order; chosen_sign is the argmax-posterior tuple (ties break to the
/// lexicographically smaller tuple).
struct RecoveryResult {
    std::vector<std::int8_t> estimate;
    std::vector<Candidate> candidates;
    std::vector<int> chosen_sign;
};

/// ROS spectral coefficients at a given n.
SpectralCoefficients ros_coefficients(const RosParams& params, int n);

/// True when |a1 a2 - b^2| <= 1e-9 max(a1 a2, b^2): the rank-1 limit where
/// the weights equation degenerates.
bool sbm_rank_deficient(const SbmParams& params);

/// Solves the rank-2 weights equation via the two nonzero eigenpairs of the
/// block matrix B. Requires 1 <= floor(rho n) < n. Throws std::domain_error
/// in the rank-deficient case (callers should use the rank-1 path) and
/// std::runtime_error if the solved weights fail their 1e-10 residual check.
SpectralCoefficients find_sbm_coefficients(const SbmParams& params, int n);

/// Rank-1 coefficients: c1 = log(a1/b), no c2, same gamma as rank-2.
SpectralCoefficients sbm_rank1_coefficients(const SbmParams& params, int n);

/// Spectral recovery for ROS: z^(s) = s c1 u1 + gamma 1 over s in {-1,+1},
/// side-information transform per channel, argmax posterior.
RecoveryResult spectral_ros(const Observation& obs, const RosParams& params,
                            const SideInformation& side);

/// Spectral recovery for SBM: rank-2 enumerates s in {-1,+1}^2 over
/// z^(s) = s1 c1 u1 + s2 c2 u2 + gamma 1; rank-1 is the deterministic single
/// candidate z = c1 A 1 + gamma 1. Dispatch on sbm_rank_deficient.
RecoveryResult spectral_sbm(const Observation& obs, const SbmParams& params,
                            const SideInformation& side);

/// Degree-profiling for ROS: weighted degree sums over S+- = {i : y_i = +-1}
/// taken at face value, z_i = (a-b) sqrt(log n / n) (a sum_{S+} A_ij +
/// b sum_{S-} A_ij) + gamma, then the channel transform. Single candidate.
/// Rejects Channel::None.
RecoveryResult dp_ros(const Observation& obs, const RosParams& params,
                      const SideInformation& side);

/// Degree-profiling for SBM: z_i = log(a1/b) sum_{S+} A_ij +
/// log(b/a2) sum_{S-} A_ij + gamma, then the channel transform.
RecoveryResult dp_sbm(const Observation& obs, const SbmParams& params,
                      const SideInformation& side);

/// Log posterior of a full assignment, up to an additive constant shared by
/// all assignments at fixed (obs, side): label prior + observation likelihood
/// + side-information likelihood. BEC contradiction yields -infinity.
double log_posterior(const Observation& obs, const std::vector<std::int8_t>& sigma_hat,
                     const RosParams& params, const SideInformation& side);
double log_posterior(const Observation& obs, const std::vector<std::int8_t>& sigma_hat,
                     const SbmParams& params, const SideInformation& side);

}  // namespace blockrec
