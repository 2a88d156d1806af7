#include "blockrec/eigensolve.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace blockrec {

namespace {

int first_nonzero(const Vec& v) {
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0.0) return static_cast<int>(i);
    return static_cast<int>(v.size());
}

void normalize_sign(Vec& v) {
    int i = first_nonzero(v);
    if (i < static_cast<int>(v.size()) && v[size_t(i)] < 0.0)
        for (double& x : v) x = -x;
}

void validate_pair(const Mat& a, const Eigenpair& p) {
    double nrm = std::sqrt(dot(p.vector, p.vector));
    if (std::fabs(nrm - 1.0) > 1e-12)
        throw EigenFailure("eigenvector norm deviates from 1", std::fabs(nrm - 1.0));
    Vec av = a.matvec(p.vector);
    double res = 0.0;
    for (size_t i = 0; i < av.size(); ++i) {
        double r = av[i] - p.lambda * p.vector[i];
        res += r * r;
    }
    res = std::sqrt(res);
    double bound = 1e-8 * std::max(1.0, std::fabs(p.lambda));
    if (res > bound) throw EigenFailure("eigenpair residual exceeds tolerance", res);
}

}  // namespace

std::vector<Eigenpair> top_eigenpairs(const Mat& a, int k) {
    int n = a.n();
    if (k < 1 || k > n) throw std::invalid_argument("top_eigenpairs: k must lie in [1, n]");
    if (!a.is_symmetric()) throw std::invalid_argument("top_eigenpairs: matrix must be symmetric");

    std::vector<double> z(a.data(), a.data() + size_t(n) * size_t(n));
    std::vector<double> w(static_cast<size_t>(n));
    int info = LAPACKE_dsyevd(LAPACK_ROW_MAJOR, 'V', 'U', n, z.data(), n, w.data());
    if (info != 0)
        throw EigenFailure("symmetric eigensolver failed (info=" + std::to_string(info) + ")",
                           std::numeric_limits<double>::infinity());

    // Column j of z is the eigenvector for w[j]; extract, sign-normalize, sort.
    std::vector<Eigenpair> pairs(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        Eigenpair p;
        p.lambda = w[size_t(j)];
        p.vector.resize(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) p.vector[size_t(i)] = z[size_t(i) * size_t(n) + size_t(j)];
        normalize_sign(p.vector);
        pairs[size_t(j)] = std::move(p);
    }
    std::sort(pairs.begin(), pairs.end(), [](const Eigenpair& x, const Eigenpair& y) {
        double ax = std::fabs(x.lambda), ay = std::fabs(y.lambda);
        if (ax != ay) return ax > ay;
        if (x.lambda != y.lambda) return x.lambda > y.lambda;
        return first_nonzero(x.vector) < first_nonzero(y.vector);
    });
    pairs.resize(static_cast<size_t>(k));
    for (const Eigenpair& p : pairs) validate_pair(a, p);
    return pairs;
}

Mat expected_matrix_ros(const RosParams& params, const CommunityAssignment& sigma) {
    params.validate();
    int n = sigma.n;
    Vec v = spike_vector(params, sigma);
    double scale = std::sqrt(std::log(double(n)) / double(n));
    Mat m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = i == j ? 0.0 : v[size_t(i)] * v[size_t(j)] * scale;
    return m;
}

Mat expected_matrix_sbm(const SbmParams& params, const CommunityAssignment& sigma, int n) {
    if (n != sigma.n) throw std::invalid_argument("expected_matrix_sbm: size mismatch");
    auto p = params.edge_probs(n);
    Mat m(n);
    for (int i = 0; i < n; ++i) {
        bool ip = sigma.labels[size_t(i)] == 1;
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                m(i, j) = 0.0;
                continue;
            }
            bool jp = sigma.labels[size_t(j)] == 1;
            m(i, j) = ip == jp ? (ip ? p.p1 : p.p2) : p.q;
        }
    }
    return m;
}

double entrywise_gap(const Mat& observed, const Mat& expected, int index) {
    if (observed.n() != expected.n()) throw std::invalid_argument("entrywise_gap: size mismatch");
    auto star = top_eigenpairs(expected, index + 1);
    const Eigenpair& ref = star[size_t(index)];
    if (std::fabs(ref.lambda) < 1e-10)
        throw std::invalid_argument("entrywise_gap: reference eigenvalue too close to zero");
    auto obs = top_eigenpairs(observed, index + 1);
    const Vec& u = obs[size_t(index)].vector;
    Vec r = observed.matvec(ref.vector);
    double plus = 0.0, minus = 0.0;
    for (size_t i = 0; i < r.size(); ++i) {
        double ri = r[i] / ref.lambda;
        plus = std::max(plus, std::fabs(u[i] - ri));
        minus = std::max(minus, std::fabs(-u[i] - ri));
    }
    return std::min(plus, minus);
}

}  // namespace blockrec
