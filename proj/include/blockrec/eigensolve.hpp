#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "blockrec/mat.hpp"
#include "blockrec/model.hpp"

namespace blockrec {

/// Unit-norm eigenpair of a symmetric matrix.
struct Eigenpair {
    double lambda = 0.0;
    Vec vector;
};

/// Thrown when a computed eigenpair fails the residual or norm contract.
struct EigenFailure : std::runtime_error {
    double residual;
    EigenFailure(const std::string& what, double residual)
        : std::runtime_error(what), residual(residual) {}
};

/// Top-k eigenpairs of a symmetric matrix, ordered by decreasing |lambda|;
/// ties in |lambda| break by decreasing signed lambda, then by ascending index
/// of the first nonzero eigenvector entry. Each vector is unit norm (within
/// 1e-12) with its first nonzero entry positive, and satisfies
/// ||A u - lambda u||_2 <= 1e-8 * max(1, |lambda|), else EigenFailure.
std::vector<Eigenpair> top_eigenpairs(const Mat& a, int k);

/// E[A] for the ROS model given planted labels: rank-one spike with zero diagonal.
Mat expected_matrix_ros(const RosParams& params, const CommunityAssignment& sigma);

/// E[A] for the SBM given planted labels: block edge probabilities, zero diagonal.
Mat expected_matrix_sbm(const SbmParams& params, const CommunityAssignment& sigma, int n);

/// min over s in {+1,-1} of || s u - A u* / lambda* ||_inf where (lambda*, u*) is
/// the index-th eigenpair (0-based, ordered as above) of the expected matrix and
/// u the matching eigenpair of the observation. Throws std::invalid_argument if
/// |lambda*| < 1e-10.
double entrywise_gap(const Mat& observed, const Mat& expected, int index);

}  // namespace blockrec
