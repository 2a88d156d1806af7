#pragma once

#include <array>
#include <optional>
#include <string>

#include "blockrec/model.hpp"

namespace blockrec {

/// Signal strength for the ROS model: Psi = (a-b)^2 (rho a^2 + (1-rho) b^2).
double psi(const RosParams& params);

using ProfilePair = std::array<double, 2>;

/// SBM community profiles theta_+ = (rho a1, (1-rho) b), theta_- = (rho b, (1-rho) a2).
struct CommunityProfile {
    ProfilePair theta_plus{};
    ProfilePair theta_minus{};
};

CommunityProfile community_profile(const SbmParams& params);

/// D_t(mu, nu) = sum_i [ t mu_i + (1-t) nu_i - mu_i^t nu_i^(1-t) ] with 0^0 = 1.
/// Rejects negative coordinates; t may be any real.
double ch_divergence(const ProfilePair& mu, const ProfilePair& nu, double t);

/// Global maximum of t |-> linear_coeff * t + D_t(theta_plus, theta_minus)
/// over [0,1]: 512-point pre-scan, then golden-section refinement to absolute
/// tolerance 1e-10 in t. A flat-zero objective (all profile coordinates equal
/// and linear_coeff = 0) returns (0, 0.5) with the degenerate flag set.
struct SupResult {
    double value = 0.0;
    double argmax_t = 0.0;
    bool degenerate = false;
};
SupResult sup_ch(const ProfilePair& theta_plus, const ProfilePair& theta_minus,
                 double linear_coeff = 0.0);

/// Threshold verdict. recoverable is the strict comparison value > 1;
/// critical flags |value - 1| <= 1e-12, where the verdict is borderline.
/// optimizer_t is present only for SBM reports.
struct ThresholdReport {
    std::string model;    // "ros" or "sbm"
    std::string channel;  // "none", "bec", "bsc"
    double beta = 0.0;
    double value = 0.0;
    bool recoverable = false;
    bool critical = false;
    std::optional<double> optimizer_t;
    bool degenerate = false;
};

/// ROS exact-recovery functional:
///   none: Psi/8;  BEC: Psi/8 + beta;
///   BSC: (Psi + 2 beta)^2 / (8 Psi) if Psi > 2 beta, else beta.
/// Never divides by zero (Psi = 0 falls in the Psi <= 2 beta branch).
ThresholdReport ros_threshold(const RosParams& params, Channel channel, double beta);
/// Same, parameterized directly by the Psi value.
ThresholdReport ros_threshold_from_psi(double psi_val, Channel channel, double beta);

/// SBM exact-recovery functional:
///   none: sup_t D_t;  BEC: beta + sup_t D_t;
///   BSC:  min( sup_t [beta t + D_t], sup_t [beta (1-t) + D_t] ).
ThresholdReport sbm_threshold(const SbmParams& params, Channel channel, double beta);

/// One of the five regime tags {"no-side-info-needed", "trivial-from-side-info",
/// "both-channels-help", "only-BEC-helps", "impossible-despite-side-info"},
/// decided from the closed-form functionals in this order:
///   Psi/8 > 1 -> no-side-info-needed; beta > 1 -> trivial-from-side-info;
///   Psi/8 + beta <= 1 -> impossible-despite-side-info;
///   BSC value > 1 -> both-channels-help; else only-BEC-helps.
std::string classify_ros_regime(double psi_val, double beta);

}  // namespace blockrec
