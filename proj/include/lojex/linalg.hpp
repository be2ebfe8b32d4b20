#ifndef LOJEX_LINALG_HPP
#define LOJEX_LINALG_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace lojex {

using Vec = std::vector<double>;

// Dense row-major matrix; small sizes only (constraint Jacobians, linear maps).
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<double> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0.0) {}

    double& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    double at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
        return m;
    }
};

inline double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

inline double dist2(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

inline double dist(std::span<const double> a, std::span<const double> b) {
    return std::sqrt(dist2(a, b));
}

inline void axpy(double alpha, std::span<const double> x, Vec& y) {
    for (size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

// Solve A x = b in place by Gaussian elimination with partial pivoting.
// A is n x n; returns false when the pivot falls below the ridge threshold,
// in which case the caller should retry with regularization.
bool solve_dense(Mat A, Vec b, Vec& x);

// Least-norm solution of J d = -r via d = -J^T (J J^T + ridge I)^{-1} r.
// J is m x n with m <= n typical (few constraints, more variables).
bool solve_least_norm(const Mat& J, const Vec& r, Vec& d, double ridge = 0.0);

// Simple linear regression of y against x: returns (slope, intercept, stderr of slope).
struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_stderr = 0.0;
    int n = 0;
};
LineFit fit_line(std::span<const double> x, std::span<const double> y);

}  // namespace lojex

#endif
