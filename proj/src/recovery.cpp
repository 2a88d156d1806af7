#include "blockrec/recovery.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "blockrec/eigensolve.hpp"

namespace blockrec {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

double sbm_gamma(const SbmParams& params, int n) {
    return (params.rho * (params.b - params.a1) + (1.0 - params.rho) * (params.a2 - params.b)) *
           std::log(double(n));
}

double side_log_likelihood(const std::vector<std::int8_t>& sigma_hat, const SideInformation& side) {
    if (side.channel == Channel::None) return 0.0;
    require(side.y.size() == sigma_hat.size(), "log_posterior: side information length mismatch");
    double total = 0.0;
    if (side.channel == Channel::Bec) {
        // Erasure pattern probabilities are constant in sigma_hat; only the
        // match/contradiction indicator varies.
        for (size_t i = 0; i < side.y.size(); ++i)
            if (side.y[i] != 0 && side.y[i] != sigma_hat[i]) return -kInf;
        return 0.0;
    }
    require(side.param > 0.0 && side.param <= 0.5, "log_posterior: BSC alpha must lie in (0,1/2]");
    double log_keep = std::log(1.0 - side.param), log_flip = std::log(side.param);
    for (size_t i = 0; i < side.y.size(); ++i)
        total += side.y[i] == sigma_hat[i] ? log_keep : log_flip;
    return total;
}

double prior_log_likelihood(const std::vector<std::int8_t>& sigma_hat, double rho) {
    int plus = 0;
    for (std::int8_t s : sigma_hat) plus += (s == 1);
    int minus = static_cast<int>(sigma_hat.size()) - plus;
    return double(plus) * std::log(rho) + double(minus) * std::log(1.0 - rho);
}

/// Shared candidate pipeline: channel transform, sgn, posterior, strict
/// argmax in enumeration (lexicographic) order so exact ties keep the
/// lexicographically smaller sign tuple.
template <typename Params>
RecoveryResult finish_candidates(const Observation& obs, const Params& params,
                                 const SideInformation& side,
                                 std::vector<std::pair<std::vector<int>, std::vector<double>>> raw) {
    RecoveryResult result;
    int best = -1;
    for (auto& [signs, base] : raw) {
        Candidate cand;
        cand.signs = std::move(signs);
        cand.scores = ScoreVector::from_values(std::move(base));
        if (side.channel != Channel::None) cand.scores = apply_side_info_to_scores(cand.scores, side);
        cand.log_post = log_posterior(obs, genie_estimate(cand.scores), params, side);
        result.candidates.push_back(std::move(cand));
        int last = static_cast<int>(result.candidates.size()) - 1;
        if (best < 0 || result.candidates[size_t(last)].log_post > result.candidates[size_t(best)].log_post)
            best = last;
    }
    const Candidate& winner = result.candidates[size_t(best)];
    result.chosen_sign = winner.signs;
    result.estimate = genie_estimate(winner.scores);
    return result;
}

}  // namespace

SpectralCoefficients ros_coefficients(const RosParams& params, int n) {
    params.validate();
    require(n >= 2, "ros_coefficients: n must be at least 2");
    double logn = std::log(double(n));
    double second = params.rho * params.a * params.a + (1.0 - params.rho) * params.b * params.b;
    SpectralCoefficients co;
    co.c1 = std::sqrt(double(n)) * logn * (params.a - params.b) * std::pow(second, 1.5);
    double a2 = params.a * params.a, b2 = params.b * params.b;
    co.gamma = (params.rho * (a2 * b2 - a2 * a2) + (1.0 - params.rho) * (b2 * b2 - a2 * b2)) * logn / 2.0;
    return co;
}

bool sbm_rank_deficient(const SbmParams& params) {
    params.validate();
    double prod = params.a1 * params.a2, bsq = params.b * params.b;
    return std::fabs(prod - bsq) <= 1e-9 * std::max(prod, bsq);
}

SpectralCoefficients find_sbm_coefficients(const SbmParams& params, int n) {
    if (sbm_rank_deficient(params))
        throw std::domain_error("find_sbm_coefficients: a1 a2 = b^2 is rank-1; use the rank-1 algorithm");
    require(n >= 2, "find_sbm_coefficients: n must be at least 2");
    int m = static_cast<int>(std::floor(params.rho * double(n)));
    require(m >= 1 && m < n, "find_sbm_coefficients: floor(rho n) must lie in [1, n-1]");
    int mc = n - m;
    double scale = std::log(double(n)) / double(n);

    // B is block-constant over S = {i <= rho n} (diagonal included), so its
    // two nonzero eigenpairs are those of the symmetric 2x2 reduction
    // [[p1 m, q sqrt(m m')], [q sqrt(m m'), p2 m']] with block values X/sqrt(m), Y/sqrt(m').
    double d11 = params.a1 * scale * double(m);
    double d22 = params.a2 * scale * double(mc);
    double d12 = params.b * scale * std::sqrt(double(m) * double(mc));
    double mid = 0.5 * (d11 + d22);
    double disc = std::sqrt(0.25 * (d11 - d22) * (d11 - d22) + d12 * d12);
    double lam[2] = {mid + disc, mid - disc};
    if (std::fabs(lam[1]) > std::fabs(lam[0])) std::swap(lam[0], lam[1]);

    // Per-eigenvalue block components (x on S, y off S), unit norm in R^n,
    // first component (an S entry) positive.
    double x[2], y[2];
    for (int k = 0; k < 2; ++k) {
        double vx = d12, vy = lam[k] - d11;
        double alt_x = lam[k] - d22, alt_y = d12;
        if (alt_x * alt_x + alt_y * alt_y > vx * vx + vy * vy) {
            vx = alt_x;
            vy = alt_y;
        }
        double nrm = std::sqrt(vx * vx + vy * vy);
        if (nrm == 0.0) throw std::runtime_error("find_sbm_coefficients: degenerate block eigenvector");
        vx /= nrm;
        vy /= nrm;
        if (vx < 0.0 || (vx == 0.0 && vy < 0.0)) {
            vx = -vx;
            vy = -vy;
        }
        x[k] = vx / std::sqrt(double(m));
        y[k] = vy / std::sqrt(double(mc));
    }

    // Solve c1 v1/l1 + c2 v2/l2 = w at the two block representatives.
    double w_plus = std::log(params.a1 / params.b), w_minus = std::log(params.b / params.a2);
    double a11 = x[0] / lam[0], a12 = x[1] / lam[1];
    double a21 = y[0] / lam[0], a22 = y[1] / lam[1];
    double det = a11 * a22 - a12 * a21;
    if (det == 0.0) throw std::runtime_error("find_sbm_coefficients: singular weights system");
    SpectralCoefficients co;
    co.c1 = (w_plus * a22 - w_minus * a12) / det;
    co.c2 = (w_minus * a11 - w_plus * a21) / det;
    co.gamma = sbm_gamma(params, n);

    double r1 = co.c1 * a11 + *co.c2 * a12 - w_plus;
    double r2 = co.c1 * a21 + *co.c2 * a22 - w_minus;
    if (std::fabs(r1) > 1e-10 || std::fabs(r2) > 1e-10)
        throw std::runtime_error("find_sbm_coefficients: weights residual exceeds 1e-10");
    return co;
}

SpectralCoefficients sbm_rank1_coefficients(const SbmParams& params, int n) {
    params.validate();
    require(n >= 2, "sbm_rank1_coefficients: n must be at least 2");
    SpectralCoefficients co;
    co.c1 = std::log(params.a1 / params.b);
    co.gamma = sbm_gamma(params, n);
    return co;
}

RecoveryResult spectral_ros(const Observation& obs, const RosParams& params,
                            const SideInformation& side) {
    int n = obs.n();
    require(n >= 2, "spectral_ros: n must be at least 2");
    SpectralCoefficients co = ros_coefficients(params, n);
    const Vec u1 = top_eigenpairs(obs.a, 1)[0].vector;
    std::vector<std::pair<std::vector<int>, std::vector<double>>> raw;
    for (int s : {-1, +1}) {
        std::vector<double> base(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) base[size_t(i)] = double(s) * co.c1 * u1[size_t(i)] + co.gamma;
        raw.emplace_back(std::vector<int>{s}, std::move(base));
    }
    return finish_candidates(obs, params, side, std::move(raw));
}

RecoveryResult spectral_sbm(const Observation& obs, const SbmParams& params,
                            const SideInformation& side) {
    int n = obs.n();
    require(n >= 2, "spectral_sbm: n must be at least 2");
    std::vector<std::pair<std::vector<int>, std::vector<double>>> raw;
    if (sbm_rank_deficient(params)) {
        SpectralCoefficients co = sbm_rank1_coefficients(params, n);
        std::vector<double> base(static_cast<size_t>(n), co.gamma);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) base[size_t(i)] += co.c1 * obs.a(i, j);
        raw.emplace_back(std::vector<int>{}, std::move(base));
    } else {
        SpectralCoefficients co = find_sbm_coefficients(params, n);
        auto pairs = top_eigenpairs(obs.a, 2);
        for (int s1 : {-1, +1})
            for (int s2 : {-1, +1}) {
                std::vector<double> base(static_cast<size_t>(n));
                for (int i = 0; i < n; ++i)
                    base[size_t(i)] = double(s1) * co.c1 * pairs[0].vector[size_t(i)] +
                                      double(s2) * *co.c2 * pairs[1].vector[size_t(i)] + co.gamma;
                raw.emplace_back(std::vector<int>{s1, s2}, std::move(base));
            }
    }
    return finish_candidates(obs, params, side, std::move(raw));
}

RecoveryResult dp_ros(const Observation& obs, const RosParams& params, const SideInformation& side) {
    require(side.channel != Channel::None, "dp_ros: side information channel required");
    int n = obs.n();
    require(static_cast<size_t>(n) == side.y.size(), "dp_ros: side information length mismatch");
    SpectralCoefficients co = ros_coefficients(params, n);
    double edge = (params.a - params.b) * std::sqrt(std::log(double(n)) / double(n));
    std::vector<double> base(static_cast<size_t>(n), co.gamma);
    for (int i = 0; i < n; ++i) {
        double sum_plus = 0.0, sum_minus = 0.0;
        for (int j = 0; j < n; ++j) {
            if (side.y[size_t(j)] == 1)
                sum_plus += obs.a(i, j);
            else if (side.y[size_t(j)] == -1)
                sum_minus += obs.a(i, j);
        }
        base[size_t(i)] += edge * (params.a * sum_plus + params.b * sum_minus);
    }
    std::vector<std::pair<std::vector<int>, std::vector<double>>> raw;
    raw.emplace_back(std::vector<int>{}, std::move(base));
    return finish_candidates(obs, params, side, std::move(raw));
}

RecoveryResult dp_sbm(const Observation& obs, const SbmParams& params, const SideInformation& side) {
    require(side.channel != Channel::None, "dp_sbm: side information channel required");
    int n = obs.n();
    require(static_cast<size_t>(n) == side.y.size(), "dp_sbm: side information length mismatch");
    params.validate();
    double w_plus = std::log(params.a1 / params.b), w_minus = std::log(params.b / params.a2);
    std::vector<double> base(static_cast<size_t>(n), sbm_gamma(params, n));
    for (int i = 0; i < n; ++i) {
        double sum_plus = 0.0, sum_minus = 0.0;
        for (int j = 0; j < n; ++j) {
            if (side.y[size_t(j)] == 1)
                sum_plus += obs.a(i, j);
            else if (side.y[size_t(j)] == -1)
                sum_minus += obs.a(i, j);
        }
        base[size_t(i)] += w_plus * sum_plus + w_minus * sum_minus;
    }
    std::vector<std::pair<std::vector<int>, std::vector<double>>> raw;
    raw.emplace_back(std::vector<int>{}, std::move(base));
    return finish_candidates(obs, params, side, std::move(raw));
}

double log_posterior(const Observation& obs, const std::vector<std::int8_t>& sigma_hat,
                     const RosParams& params, const SideInformation& side) {
    params.validate();
    int n = obs.n();
    require(static_cast<size_t>(n) == sigma_hat.size(), "log_posterior: label length mismatch");
    double side_ll = side_log_likelihood(sigma_hat, side);
    if (side_ll == -kInf) return -kInf;
    double scale = std::sqrt(std::log(double(n)) / double(n));
    Vec v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[size_t(i)] = sigma_hat[size_t(i)] == 1 ? params.a : params.b;
    double ll = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double r = obs.a(i, j) - v[size_t(i)] * v[size_t(j)] * scale;
            ll -= 0.5 * r * r;
        }
    return prior_log_likelihood(sigma_hat, params.rho) + ll + side_ll;
}

double log_posterior(const Observation& obs, const std::vector<std::int8_t>& sigma_hat,
                     const SbmParams& params, const SideInformation& side) {
    int n = obs.n();
    require(static_cast<size_t>(n) == sigma_hat.size(), "log_posterior: label length mismatch");
    double side_ll = side_log_likelihood(sigma_hat, side);
    if (side_ll == -kInf) return -kInf;
    auto p = params.edge_probs(n);
    double ll = 0.0;
    for (int i = 0; i < n; ++i) {
        bool ip = sigma_hat[size_t(i)] == 1;
        for (int j = i + 1; j < n; ++j) {
            bool jp = sigma_hat[size_t(j)] == 1;
            double prob = ip == jp ? (ip ? p.p1 : p.p2) : p.q;
            // Branch on the entry so p = 1 cannot produce 0 * log(0).
            ll += obs.a(i, j) != 0.0 ? std::log(prob) : std::log1p(-prob);
        }
    }
    return prior_log_likelihood(sigma_hat, params.rho) + ll + side_ll;
}

}  // namespace blockrec
