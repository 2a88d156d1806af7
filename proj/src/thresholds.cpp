#include "blockrec/thresholds.hpp"

#include <cmath>
#include <stdexcept>

namespace blockrec {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

const char* channel_tag(Channel ch) {
    switch (ch) {
        case Channel::None: return "none";
        case Channel::Bec: return "bec";
        case Channel::Bsc: return "bsc";
    }
    return "none";
}

void finish(ThresholdReport& report) {
    report.critical = std::fabs(report.value - 1.0) <= 1e-12;
    report.recoverable = report.value > 1.0;
}

double ros_value(double psi_val, Channel channel, double beta) {
    switch (channel) {
        case Channel::None: return psi_val / 8.0;
        case Channel::Bec: return psi_val / 8.0 + beta;
        case Channel::Bsc:
            // The Psi <= 2 beta branch also covers Psi = 0: no division by zero.
            if (psi_val > 2.0 * beta) {
                double s = psi_val + 2.0 * beta;
                return s * s / (8.0 * psi_val);
            }
            return beta;
    }
    return 0.0;
}

}  // namespace

double psi(const RosParams& params) {
    params.validate();
    double d = params.a - params.b;
    return d * d * (params.rho * params.a * params.a + (1.0 - params.rho) * params.b * params.b);
}

CommunityProfile community_profile(const SbmParams& params) {
    params.validate();
    CommunityProfile profile;
    profile.theta_plus = {params.rho * params.a1, (1.0 - params.rho) * params.b};
    profile.theta_minus = {params.rho * params.b, (1.0 - params.rho) * params.a2};
    return profile;
}

double ch_divergence(const ProfilePair& mu, const ProfilePair& nu, double t) {
    double total = 0.0;
    for (int i = 0; i < 2; ++i) {
        require(mu[size_t(i)] >= 0.0 && nu[size_t(i)] >= 0.0,
                "ch_divergence: profile coordinates must be nonnegative");
        // IEEE pow matches the 0^0 = 1 limit convention.
        total += t * mu[size_t(i)] + (1.0 - t) * nu[size_t(i)] -
                 std::pow(mu[size_t(i)], t) * std::pow(nu[size_t(i)], 1.0 - t);
    }
    return total;
}

SupResult sup_ch(const ProfilePair& theta_plus, const ProfilePair& theta_minus, double linear_coeff) {
    if (theta_plus == theta_minus && linear_coeff == 0.0) return {0.0, 0.5, true};

    auto f = [&](double t) { return linear_coeff * t + ch_divergence(theta_plus, theta_minus, t); };

    // Pre-scan locates the global bracket; the objective is concave for real
    // profiles, but the scan keeps boundary and degenerate shapes honest.
    constexpr int kScan = 512;
    double best_t = 0.0, best_v = f(0.0);
    for (int i = 1; i < kScan; ++i) {
        double t = double(i) / double(kScan - 1);
        double v = f(t);
        if (v > best_v) {
            best_v = v;
            best_t = t;
        }
    }
    double lo = std::max(0.0, best_t - 1.0 / double(kScan - 1));
    double hi = std::min(1.0, best_t + 1.0 / double(kScan - 1));

    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - invphi * (hi - lo);
    double x2 = lo + invphi * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    while (hi - lo > 1e-10) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + invphi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - invphi * (hi - lo);
            f1 = f(x1);
        }
    }
    double t = 0.5 * (lo + hi);
    double v = f(t);
    if (v < best_v) {
        v = best_v;
        t = best_t;
    }
    return {v, t, false};
}

ThresholdReport ros_threshold_from_psi(double psi_val, Channel channel, double beta) {
    require(psi_val >= 0.0, "ros_threshold: psi must be nonnegative");
    require(beta >= 0.0, "ros_threshold: beta must be nonnegative");
    ThresholdReport report;
    report.model = "ros";
    report.channel = channel_tag(channel);
    report.beta = channel == Channel::None ? 0.0 : beta;
    report.value = ros_value(psi_val, channel, report.beta);
    finish(report);
    return report;
}

ThresholdReport ros_threshold(const RosParams& params, Channel channel, double beta) {
    return ros_threshold_from_psi(psi(params), channel, beta);
}

ThresholdReport sbm_threshold(const SbmParams& params, Channel channel, double beta) {
    require(beta >= 0.0, "sbm_threshold: beta must be nonnegative");
    CommunityProfile profile = community_profile(params);
    ThresholdReport report;
    report.model = "sbm";
    report.channel = channel_tag(channel);
    report.beta = channel == Channel::None ? 0.0 : beta;
    switch (channel) {
        case Channel::None: {
            SupResult r = sup_ch(profile.theta_plus, profile.theta_minus, 0.0);
            report.value = r.value;
            report.optimizer_t = r.argmax_t;
            report.degenerate = r.degenerate;
            break;
        }
        case Channel::Bec: {
            SupResult r = sup_ch(profile.theta_plus, profile.theta_minus, 0.0);
            report.value = beta + r.value;
            report.optimizer_t = r.argmax_t;
            report.degenerate = r.degenerate;
            break;
        }
        case Channel::Bsc: {
            SupResult r1 = sup_ch(profile.theta_plus, profile.theta_minus, beta);
            // sup_t beta (1-t) + D_t  ==  beta + sup_t (-beta) t + D_t, same t axis.
            SupResult r2 = sup_ch(profile.theta_plus, profile.theta_minus, -beta);
            double v2 = beta + r2.value;
            if (r1.value <= v2) {
                report.value = r1.value;
                report.optimizer_t = r1.argmax_t;
            } else {
                report.value = v2;
                report.optimizer_t = r2.argmax_t;
            }
            report.degenerate = r1.degenerate || r2.degenerate;
            break;
        }
    }
    finish(report);
    return report;
}

std::string classify_ros_regime(double psi_val, double beta) {
    if (psi_val / 8.0 > 1.0) return "no-side-info-needed";
    if (beta > 1.0) return "trivial-from-side-info";
    if (psi_val / 8.0 + beta <= 1.0) return "impossible-despite-side-info";
    if (ros_value(psi_val, Channel::Bsc, beta) > 1.0) return "both-channels-help";
    return "only-BEC-helps";
}

}  // namespace blockrec
