#include "lojex/distance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lojex/errors.hpp"
#include "lojex/rng.hpp"

namespace lojex {

namespace {

// constraint block with precomputed gradient polynomials
struct PieceWork {
    const BasicSet* piece;
    std::vector<std::vector<Polynomial>> ineq_grads;
    std::vector<std::vector<Polynomial>> eq_grads;

    explicit PieceWork(const BasicSet& p) : piece(&p) {
        ineq_grads.reserve(p.ineqs.size());
        for (const Polynomial& g : p.ineqs) ineq_grads.push_back(g.gradient());
        eq_grads.reserve(p.eqs.size());
        for (const Polynomial& h : p.eqs) eq_grads.push_back(h.gradient());
    }

    double viol(std::span<const double> x) const { return violation(*piece, x); }

    // gradient of the violation function
    Vec viol_grad(std::span<const double> x) const {
        const int n = piece->num_vars;
        Vec g(n, 0.0);
        for (size_t i = 0; i < piece->ineqs.size(); ++i) {
            double v = piece->ineqs[i].eval(x);
            if (v >= 0.0) continue;
            for (int k = 0; k < n; ++k) g[k] += 2.0 * v * ineq_grads[i][k].eval(x);
        }
        for (size_t i = 0; i < piece->eqs.size(); ++i) {
            double v = piece->eqs[i].eval(x);
            if (v == 0.0) continue;
            for (int k = 0; k < n; ++k) g[k] += 2.0 * v * eq_grads[i][k].eval(x);
        }
        return g;
    }

    bool feasible(std::span<const double> x, double tol) const {
        return membership(*piece, x, tol);
    }
};

// Gauss-Newton step toward {h = 0, violated g -> boundary}; quadratic near the
// manifold, so it usually lands far below restore_tol.
bool gauss_newton_restore(const PieceWork& w, Vec& x, double tol, int max_iters) {
    const int n = w.piece->num_vars;
    if (w.piece->unconstrained()) return true;
    double best = w.viol(x);
    const double floor2 = 1e-30;
    std::vector<double> res;
    std::vector<const std::vector<Polynomial>*> grads;
    Vec d, xt;
    for (int it = 0; it < max_iters; ++it) {
        if (best <= floor2) break;
        res.clear();
        grads.clear();
        for (size_t i = 0; i < w.piece->ineqs.size(); ++i) {
            double v = w.piece->ineqs[i].eval(x);
            if (v < 0.0) {
                res.push_back(v);
                grads.push_back(&w.ineq_grads[i]);
            }
        }
        for (size_t i = 0; i < w.piece->eqs.size(); ++i) {
            double v = w.piece->eqs[i].eval(x);
            res.push_back(v);
            grads.push_back(&w.eq_grads[i]);
        }
        if (res.empty()) break;
        double rmax = 0.0;
        for (double r : res) rmax = std::max(rmax, std::fabs(r));
        // drive below tol while progress lasts: witnesses of degenerate
        // constraints (multiple roots) otherwise stop at tol^(1/multiplicity)
        if (rmax <= std::max(tol * 1e-2, 1e-20)) break;
        Mat J(static_cast<int>(res.size()), n);
        for (size_t i = 0; i < res.size(); ++i)
            for (int k = 0; k < n; ++k) J.at(static_cast<int>(i), k) = (*grads[i])[k].eval(x);
        bool have_step = solve_least_norm(J, res, d, 0.0) || solve_least_norm(J, res, d, 1e-10);
        bool accepted = false;
        if (have_step) {
            // overstepping the Newton length repairs the slow linear rate at
            // multiple roots (a root of multiplicity m wants t = m)
            double best_t = 0.0, best_v = best;
            for (double t : {1.0, 2.0, 3.0}) {
                xt = x;
                axpy(t, d, xt);
                double v = w.viol(xt);
                if (v < best_v) {
                    best_v = v;
                    best_t = t;
                }
            }
            if (best_t > 0.0) {
                axpy(best_t, d, x);
                best = best_v;
                accepted = true;
            } else {
                double t = 0.5;
                for (int ls = 0; ls < 24; ++ls) {
                    xt = x;
                    axpy(t, d, xt);
                    double v = w.viol(xt);
                    if (v < best) {
                        x = xt;
                        best = v;
                        accepted = true;
                        break;
                    }
                    t *= 0.5;
                }
            }
        }
        if (!accepted) {
            // near-parallel constraint gradients can defeat the least-norm
            // step; plain descent on the violation still makes progress
            Vec vg = w.viol_grad(x);
            double vn2 = dot(vg, vg);
            if (vn2 < 1e-300) break;
            double t = best / vn2;
            for (int ls = 0; ls < 30; ++ls) {
                xt = x;
                axpy(-t, vg, xt);
                double v = w.viol(xt);
                if (v < best) {
                    x = xt;
                    best = v;
                    accepted = true;
                    break;
                }
                t *= 0.5;
            }
        }
        if (!accepted) break;
    }
    return w.feasible(x, tol);
}

// Scale-free backtracking descent on f(s) = |query - s|^2 + rho * violation(s).
void penalty_stage(const PieceWork& w, std::span<const double> query, Vec& s, double rho,
                   int iters, double step0) {
    const int n = static_cast<int>(s.size());
    auto fval = [&](std::span<const double> p) { return dist2(query, p) + rho * w.viol(p); };
    double f = fval(s);
    double step = step0;
    for (int it = 0; it < iters; ++it) {
        Vec g = w.viol_grad(s);
        for (int k = 0; k < n; ++k) g[k] = 2.0 * (s[k] - query[k]) + rho * g[k];
        double gn = norm(g);
        if (gn < 1e-300) break;
        Vec dir(n);
        for (int k = 0; k < n; ++k) dir[k] = -g[k] / gn;
        bool accepted = false;
        double t = step;
        for (int ls = 0; ls < 30; ++ls) {
            Vec st = s;
            axpy(t, dir, st);
            double ft = fval(st);
            if (ft < f - 1e-4 * t * gn) {
                s = std::move(st);
                f = ft;
                step = std::min(t * 2.0, step0 * 4.0);
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if (!accepted) {
            step *= 0.25;
            if (step < 1e-14 * (1.0 + norm(s))) break;
        }
    }
}

// Tangential polish: projected-gradient steps for min |query - s|^2 on the
// feasible set, restoring after every trial step. Also tries the raw
// (unprojected) step so active inequalities can release.
void polish(const PieceWork& w, std::span<const double> query, Vec& s,
            const DistanceConfig& cfg) {
    const int n = static_cast<int>(s.size());
    if (w.piece->unconstrained()) {
        s.assign(query.begin(), query.end());
        return;
    }
    double best = dist2(query, s);
    for (int it = 0; it < cfg.polish_iters; ++it) {
        Vec d(n);
        for (int k = 0; k < n; ++k) d[k] = s[k] - query[k];
        double dn = norm(d);
        if (dn < 1e-300) break;

        // active constraint Jacobian
        std::vector<const std::vector<Polynomial>*> grads;
        for (size_t i = 0; i < w.piece->ineqs.size(); ++i) {
            double v = w.piece->ineqs[i].eval(s);
            if (v <= 1e-7 * (1.0 + std::fabs(v))) grads.push_back(&w.ineq_grads[i]);
        }
        for (size_t i = 0; i < w.piece->eqs.size(); ++i) grads.push_back(&w.eq_grads[i]);

        Vec dt = d;
        if (!grads.empty()) {
            Mat J(static_cast<int>(grads.size()), n);
            for (size_t i = 0; i < grads.size(); ++i)
                for (int k = 0; k < n; ++k) J.at(static_cast<int>(i), k) = (*grads[i])[k].eval(s);
            Vec Jd(grads.size(), 0.0);
            for (size_t i = 0; i < grads.size(); ++i)
                for (int k = 0; k < n; ++k) Jd[i] += J.at(static_cast<int>(i), k) * d[k];
            Vec corr;
            if (solve_least_norm(J, Jd, corr, 1e-12)) {
                for (int k = 0; k < n; ++k) dt[k] = d[k] + corr[k];
            }
        }

        bool improved = false;
        bool same_dir = dist2(dt, d) <= 1e-24 * dot(d, d);
        for (const Vec* dir : {&dt, &d}) {
            double t = 1.0;
            for (int ls = 0; ls < 6 && !improved; ++ls) {
                Vec st = s;
                axpy(-t, *dir, st);
                if (gauss_newton_restore(w, st, cfg.restore_tol, 18)) {
                    double v = dist2(query, st);
                    if (v < best * (1.0 - 1e-12)) {
                        s = std::move(st);
                        best = v;
                        improved = true;
                    }
                }
                t *= 0.5;
            }
            if (improved || same_dir) break;
        }
        if (!improved) break;
    }
}

// additive-recurrence lattice for box starts (deterministic low-discrepancy)
Vec lattice_point(int n, uint64_t index) {
    // generalized golden-ratio sequence
    double phi = 1.0;
    for (int i = 0; i < 24; ++i) phi = std::pow(1.0 + phi, 1.0 / (n + 1));
    Vec v(n);
    double a = 1.0 / phi;
    double alpha = a;
    for (int k = 0; k < n; ++k) {
        double val = std::fmod(0.5 + alpha * static_cast<double>(index + 1), 1.0);
        v[k] = 2.0 * val - 1.0;
        alpha *= a;
    }
    return v;
}

struct PieceOutcome {
    bool feasible = false;
    double value = std::numeric_limits<double>::infinity();
    Vec witness;
    double best_violation = std::numeric_limits<double>::infinity();
};

PieceOutcome piece_distance(const PieceWork& w, std::span<const double> query,
                            const DistanceConfig& cfg, std::span<const Vec> warm_starts) {
    PieceOutcome out;
    const int n = w.piece->num_vars;
    if (w.piece->unconstrained()) {
        out.feasible = true;
        out.value = 0.0;
        out.witness.assign(query.begin(), query.end());
        return out;
    }
    if (w.viol(query) == 0.0) {
        out.feasible = true;
        out.value = 0.0;
        out.witness.assign(query.begin(), query.end());
        return out;
    }

    auto consider = [&](Vec s) {
        double v = w.viol(s);
        out.best_violation = std::min(out.best_violation, v);
        if (!w.feasible(s, cfg.restore_tol)) return;
        double val = dist(query, s);
        if (val < out.value) {
            out.value = val;
            out.witness = std::move(s);
            out.feasible = true;
        }
    };

    std::vector<Vec> starts;
    starts.emplace_back(query.begin(), query.end());
    for (const Vec& wp : warm_starts)
        if (static_cast<int>(wp.size()) == n) starts.push_back(wp);
    // starts up to here sit at or near the set already: restoration plus
    // polish is enough, the penalty sweep only helps the scattered starts
    const size_t near_starts = starts.size();
    double qn = norm(query);
    for (int i = static_cast<int>(starts.size()); i < cfg.starts; ++i) {
        double width = cfg.box_scale * (0.25 + qn) * std::pow(2.0, (i % 4) - 1);
        Vec p = lattice_point(n, static_cast<uint64_t>(i) * 977 + cfg.seed % 977);
        for (int k = 0; k < n; ++k) p[k] = query[k] + width * p[k];
        starts.push_back(std::move(p));
    }

    for (size_t si = 0; si < starts.size(); ++si) {
        Vec s = starts[si];
        if (si >= near_starts) {
            double step0 = 0.1 * (0.1 + dist(query, s) + 0.01 * qn);
            for (double rho = 10.0; rho <= cfg.penalty_max * 1.0000001; rho *= 100.0)
                penalty_stage(w, query, s, rho, cfg.descent_iters, step0);
        }
        if (!gauss_newton_restore(w, s, cfg.restore_tol, 60)) {
            out.best_violation = std::min(out.best_violation, w.viol(s));
            continue;
        }
        polish(w, query, s, cfg);
        consider(std::move(s));
        // a query on (or nearly on) the set cannot be improved upon
        if (out.feasible && out.value <= cfg.restore_tol) break;
    }
    return out;
}

}  // namespace

bool restore_to_piece(const BasicSet& piece, Vec& x, const DistanceConfig& cfg) {
    PieceWork w(piece);
    return gauss_newton_restore(w, x, cfg.restore_tol, 60);
}

DistanceResult approx_distance(const SemialgebraicSet& S, std::span<const double> x,
                               const DistanceConfig& cfg, std::span<const Vec> warm_starts) {
    if (static_cast<int>(x.size()) != S.num_vars)
        throw input_error("approx_distance: point dimension differs from ambient");
    DistanceResult best;
    best.value = std::numeric_limits<double>::infinity();
    double best_violation = std::numeric_limits<double>::infinity();
    bool any = false;
    for (size_t pi = 0; pi < S.pieces.size(); ++pi) {
        PieceWork w(S.pieces[pi]);
        DistanceConfig piece_cfg = cfg;
        piece_cfg.seed = cfg.seed + pi;
        PieceOutcome o = piece_distance(w, x, piece_cfg, warm_starts);
        best_violation = std::min(best_violation, o.best_violation);
        if (o.feasible && o.value < best.value) {
            best.value = o.value;
            best.witness = std::move(o.witness);
            best.residual = violation(S.pieces[pi], best.witness);
            any = true;
        }
        if (any && best.value == 0.0) break;
    }
    if (!any)
        throw infeasible_error("no feasible point found for distance query", best_violation);
    return best;
}

std::vector<Vec> sample_near(const SemialgebraicSet& S, std::span<const double> center,
                             double radius, int count, uint64_t seed,
                             const DistanceConfig& cfg, bool* partial) {
    if (static_cast<int>(center.size()) != S.num_vars)
        throw input_error("sample_near: point dimension differs from ambient");
    if (radius <= 0.0) throw input_error("sample_near: radius must be positive");
    if (count <= 0) throw input_error("sample_near: count must be positive");

    std::vector<PieceWork> works;
    works.reserve(S.pieces.size());
    for (const BasicSet& p : S.pieces) works.emplace_back(p);

    Rng rng(seed);
    std::vector<Vec> points;
    points.reserve(count);
    const int n = S.num_vars;
    const long attempts = std::max<long>(60L * count, 240);
    for (long i = 0; i < attempts && static_cast<int>(points.size()) < count; ++i) {
        const PieceWork& w = works[i % works.size()];
        Vec x = rng.ball(n, radius);
        for (int k = 0; k < n; ++k) x[k] += center[k];
        if (!gauss_newton_restore(w, x, cfg.restore_tol, 60)) continue;
        if (dist(center, x) > radius * (1.0 + 1e-9)) continue;
        if (!membership(S, x, cfg.restore_tol)) continue;
        points.push_back(std::move(x));
    }
    if (partial) *partial = static_cast<int>(points.size()) < count;
    return points;
}

}  // namespace lojex
