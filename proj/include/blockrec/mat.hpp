#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace blockrec {

using Vec = std::vector<double>;

/// Dense square matrix, row-major doubles. Desk-scale (n up to a few thousand),
/// so full storage beats any sparse or packed scheme for the eigensolves here.
class Mat {
public:
    Mat() = default;
    explicit Mat(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, 0.0) {
        if (n < 1) throw std::invalid_argument("Mat: n must be positive");
    }

    int n() const { return n_; }

    double& operator()(int i, int j) { return d_[static_cast<std::size_t>(i) * n_ + j]; }
    double operator()(int i, int j) const { return d_[static_cast<std::size_t>(i) * n_ + j]; }

    const double* data() const { return d_.data(); }
    double* data() { return d_.data(); }

    bool is_symmetric() const {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    bool has_zero_diagonal() const {
        for (int i = 0; i < n_; ++i)
            if ((*this)(i, i) != 0.0) return false;
        return true;
    }

    Vec matvec(const Vec& x) const {
        if (static_cast<int>(x.size()) != n_)
            throw std::invalid_argument("Mat::matvec: dimension mismatch");
        Vec y(n_, 0.0);
        for (int i = 0; i < n_; ++i) {
            const double* row = d_.data() + static_cast<std::size_t>(i) * n_;
            double acc = 0.0;
            for (int j = 0; j < n_; ++j) acc += row[j] * x[j];
            y[i] = acc;
        }
        return y;
    }

private:
    int n_ = 0;
    std::vector<double> d_;
};

inline double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(const Vec& a) { return std::sqrt(dot(a, a)); }

inline double norm_inf(const Vec& a) {
    double m = 0.0;
    for (double x : a) m = std::max(m, std::fabs(x));
    return m;
}

}  // namespace blockrec
