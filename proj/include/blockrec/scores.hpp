#pragma once

#include <cstdint>
#include <vector>

#include "blockrec/model.hpp"

namespace blockrec {

/// Per-vertex decision scores on the extended real line. Entries may be
/// +-infinity (side-information certainty) but never NaN; construction
/// enforces this.
struct ScoreVector {
    std::vector<double> values;

    static ScoreVector from_values(std::vector<double> values);
    int n() const { return static_cast<int>(values.size()); }
};

/// Signed-score diagnostics: per_index[i] = sigma_i * z_i (extended-real
/// multiplication), min_signed_score = min_i per_index[i], argmin attains it.
struct MarginReport {
    double min_signed_score = 0.0;
    int argmin = -1;
    std::vector<double> per_index;
};

/// Exact one-vertex-revealed log-posterior-ratio scores for the ROS model,
/// including the log(rho/(1-rho)) prior term. No side information; finite.
ScoreVector genie_scores_ros(const Observation& obs, const CommunityAssignment& sigma,
                             const RosParams& params);

/// Same for the SBM. Rejects edge probabilities in {0,1} at this n.
ScoreVector genie_scores_sbm(const Observation& obs, const CommunityAssignment& sigma,
                             const SbmParams& params);

/// Folds side information into scores: BEC overrides entries to +-infinity
/// where y_i = +-1 and keeps them where y_i = 0; BSC adds
/// log((1-alpha)/alpha) * y_i. Rejects Channel::None.
ScoreVector apply_side_info_to_scores(const ScoreVector& z, const SideInformation& side);

/// Thresholds scores at zero with sgn(0) = +1.
std::vector<std::int8_t> genie_estimate(const ScoreVector& z);

MarginReport margin(const ScoreVector& z, const CommunityAssignment& sigma);

/// || z - z_ref ||_inf over finite entries; infinite entries compared for
/// sign agreement only (equal infinities contribute 0, any other infinite
/// discrepancy yields +infinity).
double score_gap_inf(const ScoreVector& z, const ScoreVector& z_ref);

}  // namespace blockrec
