#include "blockrec/scores.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace blockrec {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

ScoreVector ScoreVector::from_values(std::vector<double> values) {
    for (double x : values) require(!std::isnan(x), "ScoreVector: NaN entry");
    ScoreVector z;
    z.values = std::move(values);
    return z;
}

ScoreVector genie_scores_ros(const Observation& obs, const CommunityAssignment& sigma,
                             const RosParams& params) {
    params.validate();
    int n = obs.n();
    require(sigma.n == n, "genie_scores_ros: dimension mismatch");
    double logn = std::log(double(n));
    double edge = (params.a - params.b) * std::sqrt(logn / double(n));
    double count_plus = (logn / (2.0 * double(n))) *
                        (params.a * params.a * params.b * params.b -
                         params.a * params.a * params.a * params.a);
    double count_minus = (logn / (2.0 * double(n))) *
                         (params.b * params.b * params.b * params.b -
                          params.a * params.a * params.b * params.b);
    double prior = std::log(params.rho / (1.0 - params.rho));
    std::vector<double> z(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double sum_plus = 0.0, sum_minus = 0.0;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            if (sigma.labels[size_t(j)] == 1)
                sum_plus += obs.a(i, j);
            else
                sum_minus += obs.a(i, j);
        }
        int np = sigma.plus_count() - (sigma.labels[size_t(i)] == 1);
        int nm = (n - sigma.plus_count()) - (sigma.labels[size_t(i)] == -1);
        z[size_t(i)] = edge * (params.a * sum_plus + params.b * sum_minus) + double(np) * count_plus +
                       double(nm) * count_minus + prior;
    }
    return ScoreVector::from_values(std::move(z));
}

ScoreVector genie_scores_sbm(const Observation& obs, const CommunityAssignment& sigma,
                             const SbmParams& params) {
    int n = obs.n();
    require(sigma.n == n, "genie_scores_sbm: dimension mismatch");
    auto p = params.edge_probs(n);
    require(p.p1 < 1.0 && p.p2 < 1.0 && p.q < 1.0,
            "genie_scores_sbm: edge probability 1 degenerates the log ratios");
    double w_plus = std::log(p.p1 * (1.0 - p.q) / (p.q * (1.0 - p.p1)));
    double w_minus = std::log(p.q * (1.0 - p.p2) / (p.p2 * (1.0 - p.q)));
    double count_plus = std::log((1.0 - p.p1) / (1.0 - p.q));
    double count_minus = std::log((1.0 - p.q) / (1.0 - p.p2));
    double prior = std::log(params.rho / (1.0 - params.rho));
    std::vector<double> z(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double sum_plus = 0.0, sum_minus = 0.0;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            if (sigma.labels[size_t(j)] == 1)
                sum_plus += obs.a(i, j);
            else
                sum_minus += obs.a(i, j);
        }
        int np = sigma.plus_count() - (sigma.labels[size_t(i)] == 1);
        int nm = (n - sigma.plus_count()) - (sigma.labels[size_t(i)] == -1);
        z[size_t(i)] = w_plus * sum_plus + w_minus * sum_minus + double(np) * count_plus +
                       double(nm) * count_minus + prior;
    }
    return ScoreVector::from_values(std::move(z));
}

ScoreVector apply_side_info_to_scores(const ScoreVector& z, const SideInformation& side) {
    require(side.channel != Channel::None, "apply_side_info_to_scores: channel must be BEC or BSC");
    require(static_cast<size_t>(z.n()) == side.y.size(), "apply_side_info_to_scores: length mismatch");
    std::vector<double> out = z.values;
    if (side.channel == Channel::Bec) {
        for (size_t i = 0; i < out.size(); ++i) {
            if (side.y[i] == 1)
                out[i] = kInf;
            else if (side.y[i] == -1)
                out[i] = -kInf;
        }
    } else {
        require(side.param > 0.0 && side.param <= 0.5,
                "apply_side_info_to_scores: BSC alpha must lie in (0,1/2]");
        double trust = std::log((1.0 - side.param) / side.param);
        for (size_t i = 0; i < out.size(); ++i) {
            require(side.y[i] == 1 || side.y[i] == -1,
                    "apply_side_info_to_scores: BSC labels must be +-1");
            out[i] += trust * double(side.y[i]);
        }
    }
    return ScoreVector::from_values(std::move(out));
}

std::vector<std::int8_t> genie_estimate(const ScoreVector& z) {
    std::vector<std::int8_t> est(z.values.size());
    for (size_t i = 0; i < z.values.size(); ++i)
        est[i] = z.values[i] >= 0.0 ? std::int8_t(1) : std::int8_t(-1);
    return est;
}

MarginReport margin(const ScoreVector& z, const CommunityAssignment& sigma) {
    require(z.n() == sigma.n, "margin: dimension mismatch");
    MarginReport report;
    report.per_index.resize(z.values.size());
    report.min_signed_score = kInf;
    for (size_t i = 0; i < z.values.size(); ++i) {
        double s = double(sigma.labels[i]) * z.values[i];
        report.per_index[i] = s;
        if (s < report.min_signed_score) {
            report.min_signed_score = s;
            report.argmin = static_cast<int>(i);
        }
    }
    return report;
}

double score_gap_inf(const ScoreVector& z, const ScoreVector& z_ref) {
    require(z.n() == z_ref.n(), "score_gap_inf: dimension mismatch");
    double gap = 0.0;
    for (size_t i = 0; i < z.values.size(); ++i) {
        double a = z.values[i], b = z_ref.values[i];
        bool ia = std::isinf(a), ib = std::isinf(b);
        if (ia || ib) {
            if (ia && ib && (a > 0) == (b > 0)) continue;  // equal infinities differ by 0
            return kInf;
        }
        gap = std::max(gap, std::fabs(a - b));
    }
    return gap;
}

}  // namespace blockrec
