#include "blockrec/model.hpp"

#include <cmath>
#include <stdexcept>

namespace blockrec {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

void RosParams::validate() const {
    require(rho > 0.0 && rho < 1.0, "RosParams: rho must lie in (0,1)");
    require(std::max(std::fabs(a), std::fabs(b)) > 0.0, "RosParams: a and b cannot both be zero");
    require(std::isfinite(a) && std::isfinite(b), "RosParams: a, b must be finite");
}

void SbmParams::validate() const {
    require(rho > 0.0 && rho < 1.0, "SbmParams: rho must lie in (0,1)");
    require(a1 > 0.0 && a2 > 0.0 && b > 0.0, "SbmParams: a1, a2, b must be positive");
    require(std::isfinite(a1) && std::isfinite(a2) && std::isfinite(b),
            "SbmParams: a1, a2, b must be finite");
}

SbmParams::EdgeProbs SbmParams::edge_probs(int n) const {
    validate();
    require(n >= 2, "SbmParams: n must be at least 2");
    double scale = std::log(double(n)) / double(n);
    EdgeProbs p{a1 * scale, a2 * scale, b * scale};
    require(p.p1 <= 1.0 && p.p2 <= 1.0 && p.q <= 1.0,
            "SbmParams: an edge probability exceeds 1 at this n");
    return p;
}

CommunityAssignment CommunityAssignment::from_labels(std::vector<std::int8_t> labels) {
    require(!labels.empty(), "CommunityAssignment: labels must be nonempty");
    for (std::int8_t v : labels) require(v == 1 || v == -1, "CommunityAssignment: labels must be +-1");
    CommunityAssignment sigma;
    sigma.n = static_cast<int>(labels.size());
    sigma.labels = std::move(labels);
    return sigma;
}

int CommunityAssignment::plus_count() const {
    int c = 0;
    for (std::int8_t v : labels) c += (v == 1);
    return c;
}

Observation Observation::from_matrix(ObsKind kind, Mat m) {
    require(m.is_symmetric(), "Observation: matrix must be exactly symmetric");
    require(m.has_zero_diagonal(), "Observation: diagonal must be exactly zero");
    Observation obs;
    obs.kind = kind;
    obs.a = std::move(m);
    return obs;
}

std::pair<double, double> side_info_params(const SideInfoStrength& strength) {
    require(strength.beta >= 0.0, "SideInfoStrength: beta must be nonnegative");
    require(strength.n >= 2, "SideInfoStrength: n must be at least 2");
    double nb = std::pow(double(strength.n), strength.beta);
    return {1.0 / nb, 1.0 / (nb + 1.0)};
}

CommunityAssignment sample_labels(int n, double rho, RngStream& rng) {
    require(n >= 2, "sample_labels: n must be at least 2");
    require(rho > 0.0 && rho < 1.0, "sample_labels: rho must lie in (0,1)");
    std::vector<std::int8_t> labels(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) labels[size_t(i)] = rng.next_bernoulli(rho) ? 1 : -1;
    return CommunityAssignment::from_labels(std::move(labels));
}

Vec spike_vector(const RosParams& params, const CommunityAssignment& sigma) {
    Vec v(static_cast<size_t>(sigma.n));
    for (int i = 0; i < sigma.n; ++i) v[size_t(i)] = sigma.labels[size_t(i)] == 1 ? params.a : params.b;
    return v;
}

Observation sample_ros(const RosParams& params, const CommunityAssignment& sigma, RngStream& rng,
                       double noise_stddev) {
    params.validate();
    require(sigma.n >= 2, "sample_ros: n must be at least 2");
    require(noise_stddev >= 0.0, "sample_ros: noise_stddev must be nonnegative");
    int n = sigma.n;
    Vec v = spike_vector(params, sigma);
    double scale = std::sqrt(std::log(double(n)) / double(n));
    Mat a(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double noise = rng.next_gaussian();
            double x = v[size_t(i)] * v[size_t(j)] * scale + noise_stddev * noise;
            a(i, j) = x;
            a(j, i) = x;
        }
    }
    return Observation::from_matrix(ObsKind::Ros, std::move(a));
}

Observation sample_sbm(const SbmParams& params, const CommunityAssignment& sigma, RngStream& rng) {
    require(sigma.n >= 2, "sample_sbm: n must be at least 2");
    int n = sigma.n;
    auto p = params.edge_probs(n);
    Mat a(n);
    for (int i = 0; i < n; ++i) {
        bool ip = sigma.labels[size_t(i)] == 1;
        for (int j = i + 1; j < n; ++j) {
            bool jp = sigma.labels[size_t(j)] == 1;
            double prob = ip == jp ? (ip ? p.p1 : p.p2) : p.q;
            double x = rng.next_bernoulli(prob) ? 1.0 : 0.0;
            a(i, j) = x;
            a(j, i) = x;
        }
    }
    return Observation::from_matrix(ObsKind::Sbm, std::move(a));
}

SideInformation apply_bec(const CommunityAssignment& sigma, double epsilon, RngStream& rng) {
    require(epsilon > 0.0 && epsilon <= 1.0, "apply_bec: epsilon must lie in (0,1]");
    SideInformation side;
    side.channel = Channel::Bec;
    side.param = epsilon;
    side.y.resize(static_cast<size_t>(sigma.n));
    for (int i = 0; i < sigma.n; ++i)
        side.y[size_t(i)] = rng.next_bernoulli(epsilon) ? std::int8_t(0) : sigma.labels[size_t(i)];
    return side;
}

SideInformation apply_bsc(const CommunityAssignment& sigma, double alpha, RngStream& rng) {
    require(alpha > 0.0 && alpha <= 0.5, "apply_bsc: alpha must lie in (0,1/2]");
    SideInformation side;
    side.channel = Channel::Bsc;
    side.param = alpha;
    side.y.resize(static_cast<size_t>(sigma.n));
    for (int i = 0; i < sigma.n; ++i) {
        std::int8_t s = sigma.labels[size_t(i)];
        side.y[size_t(i)] = rng.next_bernoulli(alpha) ? std::int8_t(-s) : s;
    }
    return side;
}

}  // namespace blockrec
