#ifndef LOJEX_INTERNAL_UTIL_HPP
#define LOJEX_INTERNAL_UTIL_HPP

// Shared internals of the numeric modules; not part of the public headers.

#include <functional>
#include <optional>
#include <span>
#include <thread>
#include <vector>

#include "lojex/distance.hpp"
#include "lojex/polynomial.hpp"
#include "lojex/rng.hpp"
#include "lojex/semiset.hpp"

namespace lojex::detail {

// map evaluation with cached gradient polynomials
struct MapEval {
    const PolyMap* F;
    std::vector<std::vector<Polynomial>> grads;

    explicit MapEval(const PolyMap& f) : F(&f) {
        grads.reserve(f.components.size());
        for (const Polynomial& p : f.components) grads.push_back(p.gradient());
    }

    double norm(std::span<const double> x) const { return F->norm_at(x); }

    double norm2(std::span<const double> x) const {
        double v = F->norm_at(x);
        return v * v;
    }

    Vec norm2_grad(std::span<const double> x) const {
        Vec g(F->num_vars, 0.0);
        for (size_t i = 0; i < F->components.size(); ++i) {
            double v = F->components[i].eval(x);
            if (v == 0.0) continue;
            for (int k = 0; k < F->num_vars; ++k) g[k] += 2.0 * v * grads[i][k].eval(x);
        }
        return g;
    }

    // Gauss-Newton direction for min |F|^2; follows curved least-squares
    // valleys where plain gradient descent zigzags
    std::optional<Vec> gn_dir(std::span<const double> x) const {
        const int n = F->num_vars;
        const int m = static_cast<int>(F->components.size());
        Mat J(m, n);
        Vec r(m);
        for (int i = 0; i < m; ++i) {
            r[i] = F->components[i].eval(x);
            for (int k = 0; k < n; ++k) J.at(i, k) = grads[i][k].eval(x);
        }
        Mat A(n, n);
        Vec b(n, 0.0);
        double scale = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                double s = 0.0;
                for (int q = 0; q < m; ++q) s += J.at(q, i) * J.at(q, j);
                A.at(i, j) = s;
                A.at(j, i) = s;
                if (i == j) scale = std::max(scale, s);
            }
        if (scale <= 0.0) return std::nullopt;
        for (int i = 0; i < n; ++i) {
            A.at(i, i) += 1e-12 * scale;
            double s = 0.0;
            for (int q = 0; q < m; ++q) s += J.at(q, i) * r[q];
            b[i] = -s;
        }
        Vec d;
        if (!solve_dense(A, b, d)) return std::nullopt;
        return d;
    }
};

inline bool set_is_full_space(const SemialgebraicSet& S) {
    for (const BasicSet& p : S.pieces)
        if (p.unconstrained()) return true;
    return false;
}

// One attempt to draw a point of X in the annulus [lo, hi] around center.
inline std::optional<Vec> draw_on_set(const SemialgebraicSet& X, std::span<const double> center,
                                      double lo, double hi, Rng& rng, const DistanceConfig& dc,
                                      long attempt) {
    const int n = X.num_vars;
    Vec x = rng.annulus(n, lo, hi);
    for (int k = 0; k < n; ++k) x[k] += center[k];
    const BasicSet& piece = X.pieces[attempt % X.pieces.size()];
    if (!piece.unconstrained()) {
        if (!restore_to_piece(piece, x, dc)) return std::nullopt;
        if (!membership(X, x, dc.restore_tol)) return std::nullopt;
    }
    return x;
}

// static partition over independent indexed jobs; results must be written to
// per-index slots so the outcome is byte-identical for any thread count
inline void run_indexed(int count, int threads, const std::function<void(int)>& work) {
    if (threads <= 1 || count <= 1) {
        for (int k = 0; k < count; ++k) work(k);
        return;
    }
    int nt = std::min(threads, count);
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (int t = 0; t < nt; ++t)
        pool.emplace_back([&, t]() {
            for (int k = t; k < count; k += nt) work(k);
        });
    for (std::thread& th : pool) th.join();
}

}  // namespace lojex::detail

#endif
