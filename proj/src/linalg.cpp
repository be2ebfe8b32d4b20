#include "lojex/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace lojex {

bool solve_dense(Mat A, Vec b, Vec& x) {
    const int n = A.rows;
    if (n == 0) {
        x.clear();
        return true;
    }
    for (int col = 0; col < n; ++col) {
        int piv = col;
        double best = std::fabs(A.at(col, col));
        for (int i = col + 1; i < n; ++i) {
            double v = std::fabs(A.at(i, col));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best < 1e-300) return false;
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(A.at(piv, j), A.at(col, j));
            std::swap(b[piv], b[col]);
        }
        double inv = 1.0 / A.at(col, col);
        for (int i = col + 1; i < n; ++i) {
            double f = A.at(i, col) * inv;
            if (f == 0.0) continue;
            for (int j = col; j < n; ++j) A.at(i, j) -= f * A.at(col, j);
            b[i] -= f * b[col];
        }
    }
    x.assign(n, 0.0);
    for (int i = n - 1; i >= 0; --i) {
        double s = b[i];
        for (int j = i + 1; j < n; ++j) s -= A.at(i, j) * x[j];
        x[i] = s / A.at(i, i);
    }
    return true;
}

bool solve_least_norm(const Mat& J, const Vec& r, Vec& d, double ridge) {
    const int m = J.rows;
    const int n = J.cols;
    d.assign(n, 0.0);
    if (m == 0) return true;
    Mat G(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) s += J.at(i, k) * J.at(j, k);
            G.at(i, j) = s;
            G.at(j, i) = s;
        }
    if (ridge > 0.0)
        for (int i = 0; i < m; ++i) G.at(i, i) += ridge;
    Vec rhs(m);
    for (int i = 0; i < m; ++i) rhs[i] = -r[i];
    Vec lambda;
    if (!solve_dense(G, rhs, lambda)) {
        if (ridge == 0.0) return solve_least_norm(J, r, d, 1e-12);
        return false;
    }
    for (int k = 0; k < n; ++k) {
        double s = 0.0;
        for (int i = 0; i < m; ++i) s += J.at(i, k) * lambda[i];
        d[k] = s;
    }
    return true;
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
    LineFit f;
    f.n = static_cast<int>(x.size());
    if (f.n < 2) return f;
    double mx = 0.0, my = 0.0;
    for (int i = 0; i < f.n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= f.n;
    my /= f.n;
    double sxx = 0.0, sxy = 0.0;
    for (int i = 0; i < f.n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0) return f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    if (f.n > 2) {
        double ss = 0.0;
        for (int i = 0; i < f.n; ++i) {
            double r = y[i] - (f.intercept + f.slope * x[i]);
            ss += r * r;
        }
        f.slope_stderr = std::sqrt(ss / ((f.n - 2) * sxx));
    }
    return f;
}

}  // namespace lojex
