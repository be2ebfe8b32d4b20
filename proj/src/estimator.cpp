#include "lojex/estimator.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <thread>

#include "internal_util.hpp"
#include "lojex/errors.hpp"
#include "lojex/rng.hpp"

namespace lojex {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();


struct ShellBand {
    double lo = 0.0;
    double hi = 0.0;
    double scale = 0.0;
};

std::vector<ShellBand> local_bands(const SamplingConfig& cfg) {
    std::vector<ShellBand> bands(cfg.shell_count);
    double top = cfg.min_scale * std::pow(cfg.shell_base, cfg.shell_count);
    for (int k = 0; k < cfg.shell_count; ++k) {
        double hi = top * std::pow(cfg.shell_base, -k);
        bands[k] = {hi / cfg.shell_base, hi, hi};
    }
    return bands;
}

std::vector<ShellBand> outward_bands(const SamplingConfig& cfg) {
    std::vector<ShellBand> bands(cfg.shell_count);
    for (int k = 0; k < cfg.shell_count; ++k) {
        double lo = cfg.min_scale * std::pow(cfg.shell_base, k);
        bands[k] = {lo, lo * cfg.shell_base, lo};
    }
    return bands;
}

// Distance queries with witness reuse: the previous witness seeds the next
// call, which keeps restoration nearly free along a descent path. One
// instance per shell keeps the call sequence deterministic.
class WarmOracle {
public:
    WarmOracle(const SemialgebraicSet& S, const DistanceConfig& cfg)
        : S_(&S), cfg_(cfg), trivial_(detail::set_is_full_space(S)) {}

    std::optional<DistanceResult> operator()(std::span<const double> x) const {
        if (trivial_) {
            DistanceResult r;
            r.value = 0.0;
            r.witness.assign(x.begin(), x.end());
            return r;
        }
        try {
            DistanceResult r = approx_distance(*S_, x, cfg_, warm_);
            warm_.assign(1, r.witness);
            return r;
        } catch (const infeasible_error&) {
            return std::nullopt;
        }
    }

private:
    const SemialgebraicSet* S_;
    DistanceConfig cfg_;
    bool trivial_;
    mutable std::vector<Vec> warm_;
};

struct Candidate {
    Vec x;
    double value = kInf;
};

// Best candidate per stratum. Minima often sit on a band edge and descents
// can stall in basins, so starts are spread across the band (and, where it
// costs nothing, across coordinate-dominance classes) instead of pooling the
// globally best few.
struct BestPool {
    double lo, hi;
    int radial;
    int classes;
    std::vector<Candidate> strata;

    BestPool(int radial_, double lo_, double hi_, int classes_ = 1)
        : lo(lo_), hi(hi_), radial(std::max(radial_, 1)), classes(std::max(classes_, 1)),
          strata(static_cast<size_t>(std::max(radial_, 1) * std::max(classes_, 1))) {}

    void add(Vec x, double v, double band_coord, int cls = 0) {
        double f = (band_coord - lo) / (hi - lo);
        int s = std::clamp(static_cast<int>(f * radial), 0, radial - 1);
        int idx = s * classes + std::clamp(cls, 0, classes - 1);
        if (v < strata[idx].value) strata[idx] = {std::move(x), v};
    }

    bool empty() const {
        for (const Candidate& c : strata)
            if (c.value < kInf) return false;
        return true;
    }
};

int dominant_coordinate(const Vec& x) {
    int arg = 0;
    double best = -1.0;
    for (size_t i = 0; i < x.size(); ++i)
        if (std::fabs(x[i]) > best) {
            best = std::fabs(x[i]);
            arg = static_cast<int>(i);
        }
    return arg;
}

// Backtracking descent for the shell minimum. Tries the steepest direction
// first and falls back to coordinate directions, which rescues badly scaled
// valleys (for example x^2 + y^6). `snap(x, inner)` probes the band edges
// directly since the minimum usually sits on one of them. Acceptance demands
// a relative improvement, so microscopic gains along a dead direction cannot
// starve the others. Accepted iterates are always projected, so the final
// value is feasible.
template <class ValueFn, class GradFn, class ProjectFn, class SnapFn, class ExtraDirFn>
double refine_min(Vec& x, double fx, ValueFn&& value, GradFn&& grad, ProjectFn&& project,
                  SnapFn&& snap, ExtraDirFn&& extra_dir, double band_width, int iters) {
    double step = 0.2 * band_width;
    const double floor_step = band_width * 1e-12;
    double best = fx;
    const int n = static_cast<int>(x.size());

    // edge probes run during and after the descent, never before it: a fresh
    // start teleported to an edge would defeat the stratified start layout
    auto try_snap = [&](bool inner) {
        Vec xs = x;
        if (snap(xs, inner)) {
            double fs = value(xs);
            if (fs < best * (1.0 - 1e-9)) {
                x = std::move(xs);
                best = fs;
            }
        }
    };

    auto improved = [&](double ft) { return ft < best * (1.0 - 1e-6); };

    for (int it = 0; it < iters; ++it) {
        if (it % 8 == 7) {
            try_snap(true);
            try_snap(false);
        }
        Vec g = grad(x);
        double gn = norm(g);
        if (gn < 1e-300) break;
        bool accepted = false;
        double t_used = 0.0;
        Vec dir(n, 0.0);
        // direction candidates: Gauss-Newton style (when available), steepest
        // descent, then single coordinates for badly scaled valleys
        for (int di = -1; di <= n && !accepted; ++di) {
            if (di == -1) {
                auto ed = extra_dir(x);
                if (!ed) continue;
                double en = norm(*ed);
                if (en < 1e-300) continue;
                for (int c = 0; c < n; ++c) dir[c] = (*ed)[c] / en;
            } else if (di == 0) {
                for (int c = 0; c < n; ++c) dir[c] = -g[c] / gn;
            } else {
                std::fill(dir.begin(), dir.end(), 0.0);
                if (g[di - 1] == 0.0) continue;
                dir[di - 1] = g[di - 1] > 0.0 ? -1.0 : 1.0;
            }
            double t = step;
            for (int ls = 0; ls < 32 && t >= floor_step; ++ls, t *= 0.5) {
                Vec xt = x;
                for (int c = 0; c < n; ++c) xt[c] += t * dir[c];
                if (!improved(value(xt)) || !project(xt)) continue;
                double ft = value(xt);
                if (improved(ft)) {
                    x = std::move(xt);
                    best = ft;
                    accepted = true;
                    t_used = t;
                    break;
                }
            }
        }
        if (accepted) {
            step = std::min(t_used * 2.0, 0.2 * band_width);
        } else {
            step *= 0.25;
            if (step < floor_step) break;
        }
    }
    try_snap(true);
    try_snap(false);
    return best;
}

std::optional<Vec> no_extra_dir(const Vec&) { return std::nullopt; }

struct FitOutcome {
    double slope = 0.0;
    double stderr_ = 0.0;
    double admissible = 0.0;
    int used = 0;
};

FitOutcome fit_shells(const std::vector<ShellRecord>& shells) {
    std::vector<double> xs, ys;
    for (const ShellRecord& s : shells) {
        if (s.sample_count <= 0 || !(s.min_value > 0.0)) continue;
        xs.push_back(std::log(s.scale));
        ys.push_back(std::log(s.min_value));
    }
    FitOutcome out;
    out.used = static_cast<int>(xs.size());
    if (out.used < 2) return out;
    LineFit lf = fit_line(xs, ys);
    out.slope = lf.slope;
    out.stderr_ = lf.slope_stderr;
    double logc = kInf;
    for (size_t i = 0; i < xs.size(); ++i) logc = std::min(logc, ys[i] - lf.slope * xs[i]);
    out.admissible = std::exp(logc);
    return out;
}

void finish_estimate(ExponentEstimate& est) {
    int nonempty = 0;
    for (const ShellRecord& s : est.shells)
        if (s.sample_count > 0) ++nonempty;
    if (nonempty == 0) {
        est.isolated_zero = true;
        est.value = 0.0;
        est.warnings.push_back(
            "all shells empty: treated as an isolated point of the sampled locus (exponent 0)");
        return;
    }
    FitOutcome fo = fit_shells(est.shells);
    if (fo.used < 2) {
        est.isolated_zero = true;
        est.value = 0.0;
        est.warnings.push_back("fewer than two usable shells; no slope fitted (exponent 0)");
        return;
    }
    if (fo.used < 4)
        est.warnings.push_back("fit uses fewer than four shells; exponent is noisy");
    est.value = fo.slope;
    est.fit_stderr = fo.stderr_;
    est.admissible_constant = fo.admissible;
}

DistanceConfig refine_config(const DistanceConfig& base) {
    DistanceConfig c = base;
    c.starts = 2;
    c.descent_iters = std::min(c.descent_iters, 40);
    c.polish_iters = std::min(c.polish_iters, 40);
    return c;
}

// Shell rejection only needs branch-local accuracy: the query sits near the
// set by construction, so the restore-from-query start does the work.
DistanceConfig rejection_config(const DistanceConfig& base) {
    DistanceConfig c = base;
    c.starts = 1;
    c.descent_iters = std::min(c.descent_iters, 20);
    c.polish_iters = std::min(c.polish_iters, 8);
    return c;
}

// Shell-aware residual tolerance for the distance that defines the shells.
// A residual tau on a degree-kappa constraint inflates the presented set by
// roughly tau^(1/kappa); keep that inflation far below the shell floor, or
// the inner shells dissolve into the feasibility tube.
DistanceConfig denominator_config(const DistanceConfig& base, int kappa, double shell_lo) {
    DistanceConfig c = base;
    double tau = std::pow(0.03 * shell_lo, static_cast<double>(std::max(1, kappa)));
    c.restore_tol = std::min(c.restore_tol, std::max(tau, 1e-250));
    return c;
}

}  // namespace

const char* estimate_kind_name(EstimateKind k) {
    switch (k) {
        case EstimateKind::LOCAL: return "local";
        case EstimateKind::AT_INFINITY: return "infinity";
        case EstimateKind::SEPARATION_LOCAL: return "separation-local";
        case EstimateKind::SEPARATION_GLOBAL: return "separation-global";
    }
    return "?";
}

void SamplingConfig::validate() const {
    if (shell_count < 4) throw input_error("sampling config: shell_count must be >= 4");
    if (!(shell_base > 1.0)) throw input_error("sampling config: shell_base must be > 1");
    if (samples_per_shell < 1) throw input_error("sampling config: samples_per_shell must be >= 1");
    if (!(min_scale > 0.0)) throw input_error("sampling config: min_scale must be positive");
    if (!(fit_tol > 0.0)) throw input_error("sampling config: fit_tol must be positive");
}

ExponentEstimate estimate_local_map_exponent(const PolyMap& F, const SemialgebraicSet& X,
                                             std::span<const double> a,
                                             const std::optional<SemialgebraicSet>& Z_opt,
                                             const SamplingConfig& cfg) {
    cfg.validate();
    if (F.num_vars != X.num_vars)
        throw input_error("estimate_local_map_exponent: map and set dimensions differ");
    if (static_cast<int>(a.size()) != X.num_vars)
        throw input_error("estimate_local_map_exponent: base point dimension differs");
    if (!membership(X, a, std::max(cfg.distance.restore_tol * 100, 1e-7)))
        throw input_error("estimate_local_map_exponent: base point is not on X");

    SemialgebraicSet Z = Z_opt ? *Z_opt : zero_set_on(F, X);
    const int z_kappa = complexity(Z).kappa;
    detail::MapEval feval(F);

    ExponentEstimate est;
    est.direction = EstimateKind::LOCAL;
    std::vector<ShellBand> bands = local_bands(cfg);
    est.shells.resize(bands.size());
    std::vector<std::vector<std::string>> shell_notes(bands.size());
    std::atomic<bool> z_infeasible_seen{false};

    Rng root(cfg.seed);
    const bool x_trivial = detail::set_is_full_space(X);

    detail::run_indexed(static_cast<int>(bands.size()), cfg.threads, [&](int k) {
        const ShellBand band = bands[k];
        Rng rng = root.child(k);
        DistanceConfig zc = denominator_config(cfg.distance, z_kappa, band.lo);
        WarmOracle distZ(Z, rejection_config(zc));
        WarmOracle distZ_fast(Z, refine_config(zc));
        BestPool pool(cfg.refine_starts, band.lo, band.hi);
        int accepted = 0;
        bool zero_seen = false;

        auto in_band = [&](double d) {
            return d >= band.lo * (1.0 - 1e-9) && d <= band.hi * (1.0 + 1e-9);
        };
        auto project = [&](Vec& x) {
            for (int round = 0; round < 4; ++round) {
                if (!x_trivial) {
                    const BasicSet& piece = X.pieces[round % X.pieces.size()];
                    if (!restore_to_piece(piece, x, cfg.distance)) return false;
                    if (!membership(X, x, cfg.distance.restore_tol)) return false;
                }
                auto dz = distZ_fast(x);
                if (!dz) return false;
                double d = dz->value;
                if (in_band(d)) return true;
                if (!(d > 0.0)) return false;
                double target = d < band.lo ? band.lo * (1.0 + 1e-7) : band.hi * (1.0 - 1e-7);
                for (size_t i = 0; i < x.size(); ++i)
                    x[i] = dz->witness[i] + (x[i] - dz->witness[i]) * (target / d);
            }
            return false;
        };
        auto snap = [&](Vec& x, bool inner) {
            auto dz = distZ_fast(x);
            if (!dz || !(dz->value > 0.0)) return false;
            double target = inner ? band.lo * (1.0 + 1e-7) : band.hi * (1.0 - 1e-7);
            for (size_t i = 0; i < x.size(); ++i)
                x[i] = dz->witness[i] + (x[i] - dz->witness[i]) * (target / dz->value);
            return project(x);
        };

        for (int i = 0; i < cfg.samples_per_shell; ++i) {
            auto xo = detail::draw_on_set(X, a, band.lo * 0.5, band.hi * 1.25, rng, cfg.distance, i);
            if (!xo) continue;
            auto dz = distZ(*xo);
            if (!dz) {
                z_infeasible_seen = true;
                continue;
            }
            if (!in_band(dz->value)) continue;
            double v = feval.norm(*xo);
            ++accepted;
            if (v == 0.0) {
                zero_seen = true;
                continue;
            }
            pool.add(std::move(*xo), v, dz->value);
        }

        double shell_min = kInf;
        for (const Candidate& c : pool.strata) {
            if (!(c.value < kInf)) continue;
            Vec arg = c.x;
            double refined = refine_min(
                arg, c.value * c.value, [&](const Vec& x) { return feval.norm2(x); },
                [&](const Vec& x) { return feval.norm2_grad(x); },
                [&](Vec& x) { return project(x); },
                [&](Vec& x, bool inner) { return snap(x, inner); },
                [&](const Vec& x) { return feval.gn_dir(x); }, band.hi - band.lo,
                cfg.refine_iters);
            shell_min = std::min(shell_min, std::sqrt(std::max(refined, 0.0)));
        }
        if (pool.empty() && accepted > 0) shell_min = 0.0;
        est.shells[k] = {band.scale, std::isfinite(shell_min) ? shell_min : 0.0, accepted};
        if (zero_seen)
            shell_notes[k].push_back("shell " + std::to_string(k) +
                                     ": zero-valued samples excluded from the minimum");
    });

    for (auto& notes : shell_notes)
        for (auto& s : notes) est.warnings.push_back(std::move(s));
    if (z_infeasible_seen.load())
        est.warnings.push_back(
            "zero-set distance queries were infeasible for some samples (dist = 1 convention)");
    finish_estimate(est);
    return est;
}

ExponentEstimate estimate_separation_exponent(const SemialgebraicSet& X,
                                              const SemialgebraicSet& Y,
                                              std::span<const double> a,
                                              const SamplingConfig& cfg) {
    cfg.validate();
    if (X.num_vars != Y.num_vars)
        throw input_error("estimate_separation_exponent: ambient dimensions differ");
    double atol = std::max(cfg.distance.restore_tol * 100, 1e-7);
    if (!membership(X, a, atol) || !membership(Y, a, atol))
        throw input_error("estimate_separation_exponent: base point must lie on X and Y");

    SemialgebraicSet XY = intersect(X, Y);

    ExponentEstimate est;
    est.direction = EstimateKind::SEPARATION_LOCAL;
    std::vector<ShellBand> bands = local_bands(cfg);
    est.shells.resize(bands.size());

    const int n = X.num_vars;
    Rng root(cfg.seed);

    const int xy_kappa = complexity(XY).kappa;

    detail::run_indexed(static_cast<int>(bands.size()), cfg.threads, [&](int k) {
        const ShellBand band = bands[k];
        Rng rng = root.child(k);
        DistanceConfig xyc = denominator_config(cfg.distance, xy_kappa, band.lo);
        DistanceConfig rj = rejection_config(cfg.distance);
        WarmOracle distX(X, rj), distY(Y, rj), distXY(XY, rejection_config(xyc));
        DistanceConfig rc = refine_config(cfg.distance);
        WarmOracle fastX(X, rc), fastY(Y, rc), fastXY(XY, refine_config(xyc));
        int accepted = 0;

        auto in_band = [&](double d) {
            return d >= band.lo * (1.0 - 1e-9) && d <= band.hi * (1.0 + 1e-9);
        };

        // candidates remember which set they were drawn on: refinement then
        // slides along that set, where its own distance term vanishes exactly
        // and the left side is a single clean oracle value
        struct Tagged {
            Vec x;
            double value = kInf;
            int piece = -1;  // index into X.pieces / Y.pieces
            int side = 2;    // 0: on X, 1: on Y, 2: ambient
        };
        // best candidate per (side, radial stratum); ambient keeps one slot
        // (it only wins when the sets coincide near the base point)
        const int strata = std::max(1, cfg.refine_starts / 2);
        std::vector<Tagged> pool(2 * strata + 1);
        auto pool_add = [&](Vec x, double v, int side, int piece, double dcoord) {
            int idx = 2 * strata;
            if (side != 2) {
                double f = (dcoord - band.lo) / (band.hi - band.lo);
                int st = std::clamp(static_cast<int>(f * strata), 0, strata - 1);
                idx = side * strata + st;
            }
            if (v < pool[idx].value) pool[idx] = {std::move(x), v, piece, side};
        };

        auto consider = [&](Vec x, int side, int piece) {
            auto dxy = distXY(x);
            if (!dxy || !in_band(dxy->value)) return;
            // a candidate drawn on X sits at restoration depth from X, far
            // below every scale in play; only the other distance matters
            double v = 0.0;
            if (side != 0) {
                auto dx = distX(x);
                if (!dx) return;
                v += dx->value;
            }
            if (side != 1) {
                auto dy = distY(x);
                if (!dy) return;
                v += dy->value;
            }
            ++accepted;
            if (v == 0.0) return;
            pool_add(std::move(x), v, side, piece, dxy->value);
        };

        const int ambient_draws = std::max(1, cfg.samples_per_shell / 6);
        const int side_draws = std::max(1, (cfg.samples_per_shell * 5) / 12);
        for (int i = 0; i < ambient_draws; ++i) {
            Vec x = rng.annulus(n, band.lo, band.hi);
            for (int j = 0; j < n; ++j) x[j] += a[j];
            consider(std::move(x), 2, -1);
        }
        // the joint distance is smallest near the sets themselves
        for (int side = 0; side < 2; ++side) {
            const SemialgebraicSet& S = side == 0 ? X : Y;
            for (int i = 0; i < side_draws; ++i) {
                int piece = static_cast<int>(i % S.pieces.size());
                auto xo = detail::draw_on_set(S, a, band.lo * 0.5, band.hi * 1.25, rng,
                                              cfg.distance, piece);
                if (xo) consider(std::move(*xo), side, piece);
            }
        }

        auto band_project = [&](Vec& x, const BasicSet* piece) {
            for (int round = 0; round < 4; ++round) {
                if (piece && !piece->unconstrained()) {
                    if (!restore_to_piece(*piece, x, rc)) return false;
                }
                auto dxy = fastXY(x);
                if (!dxy) return false;
                double d = dxy->value;
                if (in_band(d)) return true;
                if (!(d > 0.0)) return false;
                double target = d < band.lo ? band.lo * (1.0 + 1e-7) : band.hi * (1.0 - 1e-7);
                for (size_t i = 0; i < x.size(); ++i)
                    x[i] = dxy->witness[i] + (x[i] - dxy->witness[i]) * (target / d);
            }
            return false;
        };
        auto band_snap = [&](Vec& x, bool inner, const BasicSet* piece) {
            auto dxy = fastXY(x);
            if (!dxy || !(dxy->value > 0.0)) return false;
            double target = inner ? band.lo * (1.0 + 1e-7) : band.hi * (1.0 - 1e-7);
            for (size_t i = 0; i < x.size(); ++i)
                x[i] = dxy->witness[i] + (x[i] - dxy->witness[i]) * (target / dxy->value);
            return band_project(x, piece);
        };

        double shell_min = kInf;
        for (const Tagged& c : pool) {
            if (!(c.value < kInf)) continue;
            const BasicSet* piece = nullptr;
            WarmOracle* other = nullptr;
            if (c.side == 0) {
                piece = &X.pieces[c.piece];
                other = &fastY;
            } else if (c.side == 1) {
                piece = &Y.pieces[c.piece];
                other = &fastX;
            }
            double refined;
            Vec arg = c.x;
            if (piece) {
                // restricted: x stays on its set, objective is the other distance
                auto value = [&](const Vec& x) -> double {
                    auto d = (*other)(x);
                    return d ? d->value : kInf;
                };
                auto grad = [&](const Vec& x) -> Vec {
                    Vec g(n, 0.0);
                    auto d = (*other)(x);
                    if (d && d->value > 0.0)
                        for (int j = 0; j < n; ++j) g[j] = (x[j] - d->witness[j]) / d->value;
                    return g;
                };
                refined = refine_min(
                    arg, c.value, value, grad, [&](Vec& x) { return band_project(x, piece); },
                    [&](Vec& x, bool inner) { return band_snap(x, inner, piece); },
                    no_extra_dir, band.hi - band.lo, cfg.refine_iters);
            } else {
                auto value = [&](const Vec& x) -> double {
                    auto dx = fastX(x);
                    auto dy = fastY(x);
                    if (!dx || !dy) return kInf;
                    return dx->value + dy->value;
                };
                auto grad = [&](const Vec& x) -> Vec {
                    Vec g(n, 0.0);
                    auto dx = fastX(x);
                    auto dy = fastY(x);
                    double tiny = 1e-13 * band.lo;
                    if (dx && dx->value > tiny)
                        for (int j = 0; j < n; ++j) g[j] += (x[j] - dx->witness[j]) / dx->value;
                    if (dy && dy->value > tiny)
                        for (int j = 0; j < n; ++j) g[j] += (x[j] - dy->witness[j]) / dy->value;
                    return g;
                };
                refined = refine_min(
                    arg, c.value, value, grad, [&](Vec& x) { return band_project(x, nullptr); },
                    [&](Vec& x, bool inner) { return band_snap(x, inner, nullptr); },
                    no_extra_dir, band.hi - band.lo, cfg.refine_iters);
            }
            shell_min = std::min(shell_min, refined);
        }
        est.shells[k] = {band.scale, std::isfinite(shell_min) ? shell_min : 0.0, accepted};
    });

    finish_estimate(est);
    return est;
}

ExponentEstimate estimate_infinity_exponent(const PolyMap& F, const SemialgebraicSet& X,
                                            const SamplingConfig& cfg) {
    cfg.validate();
    if (F.num_vars != X.num_vars)
        throw input_error("estimate_infinity_exponent: map and set dimensions differ");

    detail::MapEval feval(F);
    ExponentEstimate est;
    est.direction = EstimateKind::AT_INFINITY;
    std::vector<ShellBand> bands = outward_bands(cfg);
    est.shells.resize(bands.size());

    const int n = X.num_vars;
    const Vec origin(n, 0.0);
    Rng root(cfg.seed);
    const bool x_trivial = detail::set_is_full_space(X);

    detail::run_indexed(static_cast<int>(bands.size()), cfg.threads, [&](int k) {
        const ShellBand band = bands[k];
        Rng rng = root.child(k);
        // objective evaluations are pure polynomials out here, so breadth
        // and depth are nearly free
        BestPool pool(std::max(cfg.refine_starts, 12), band.lo, band.hi, n);
        const int deep_iters = std::max(cfg.refine_iters, 300);
        int accepted = 0;
        bool zero_seen = false;

        auto in_band = [&](double r) {
            return r >= band.lo * (1.0 - 1e-9) && r <= band.hi * (1.0 + 1e-9);
        };
        auto project = [&](Vec& x) {
            for (int round = 0; round < 4; ++round) {
                if (!x_trivial) {
                    const BasicSet& piece = X.pieces[round % X.pieces.size()];
                    if (!restore_to_piece(piece, x, cfg.distance)) return false;
                    if (!membership(X, x, cfg.distance.restore_tol)) return false;
                }
                double r = norm(x);
                if (in_band(r)) return true;
                if (!(r > 0.0)) return false;
                double target = r < band.lo ? band.lo * (1.0 + 1e-7) : band.hi * (1.0 - 1e-7);
                for (double& c : x) c *= target / r;
            }
            return false;
        };
        auto snap = [&](Vec& x, bool inner) {
            double r = norm(x);
            if (!(r > 0.0)) return false;
            double target = inner ? band.lo * (1.0 + 1e-7) : band.hi * (1.0 - 1e-7);
            for (double& c : x) c *= target / r;
            return project(x);
        };

        for (int i = 0; i < cfg.samples_per_shell; ++i) {
            auto xo = detail::draw_on_set(X, origin, band.lo, band.hi, rng, cfg.distance, i);
            if (!xo) continue;
            double r = norm(*xo);
            if (!in_band(r)) continue;
            double v = feval.norm(*xo);
            ++accepted;
            if (v == 0.0) {
                zero_seen = true;
                continue;
            }
            int cls = dominant_coordinate(*xo);
            pool.add(std::move(*xo), v, r, cls);
        }

        double shell_min = kInf;
        auto run_refine = [&](Vec& arg, double fv) {
            return refine_min(
                arg, fv, [&](const Vec& x) { return feval.norm2(x); },
                [&](const Vec& x) { return feval.norm2_grad(x); },
                [&](Vec& x) { return project(x); },
                [&](Vec& x, bool inner) { return snap(x, inner); },
                [&](const Vec& x) { return feval.gn_dir(x); }, band.hi - band.lo,
                deep_iters);
        };
        for (const Candidate& c : pool.strata) {
            if (!(c.value < kInf)) continue;
            Vec arg = c.x;
            double refined = run_refine(arg, c.value * c.value);
            // restart from both band edges: a descent that converged against
            // the wrong edge gets a second chance on the other one
            for (bool inner : {true, false}) {
                Vec edge = arg;
                if (!snap(edge, inner)) continue;
                double r2 = run_refine(edge, feval.norm2(edge));
                refined = std::min(refined, r2);
            }
            shell_min = std::min(shell_min, std::sqrt(std::max(refined, 0.0)));
        }
        if (pool.empty() && accepted > 0) shell_min = 0.0;
        (void)zero_seen;
        est.shells[k] = {band.scale, std::isfinite(shell_min) ? shell_min : 0.0, accepted};
    });

    int nonempty = 0;
    for (const ShellRecord& s : est.shells)
        if (s.sample_count > 0) ++nonempty;
    if (nonempty == 0)
        throw infeasible_error(
            "estimate_infinity_exponent: no points of X in any outer shell "
            "(the set looks bounded at the sampled scales)",
            0.0);
    for (const ShellRecord& s : est.shells)
        if (s.sample_count > 0 && !(s.min_value > 0.0)) {
            est.warnings.push_back(
                "outer shells contain zeros of F: the zero set looks unbounded and the "
                "fitted exponent ignores those shells");
            break;
        }
    finish_estimate(est);
    return est;
}

GlobalSeparationReport estimate_global_separation(const SemialgebraicSet& X,
                                                  const SemialgebraicSet& Y, long denom_degree,
                                                  double exponent, const SamplingConfig& cfg) {
    cfg.validate();
    if (X.num_vars != Y.num_vars)
        throw input_error("estimate_global_separation: ambient dimensions differ");
    if (denom_degree < 0)
        throw input_error("estimate_global_separation: denominator degree must be >= 0");
    if (!(exponent > 0.0))
        throw input_error("estimate_global_separation: exponent must be positive");

    SemialgebraicSet XY = intersect(X, Y);
    WarmOracle distX(X, cfg.distance), distY(Y, cfg.distance), distXY(XY, cfg.distance);

    GlobalSeparationReport rep;
    const int n = X.num_vars;
    Rng root(cfg.seed);

    double min_log_ratio = kInf;
    bool counterexample = false;
    int xy_feasible = 0, xy_queries = 0;

    auto consider = [&](const Vec& x) {
        auto dx = distX(x);
        auto dy = distY(x);
        if (!dx || !dy) return;
        double lhs = dx->value + dy->value;
        double dxy;
        ++xy_queries;
        if (auto r = distXY(x)) {
            dxy = r->value;
            ++xy_feasible;
        } else {
            dxy = 1.0;  // empty-intersection convention
        }
        if (dxy < 1e-12) return;  // both sides vanish together
        double xn = lojex::norm(x);
        double log_denom =
            denom_degree == 0 ? 0.0
                              : std::log1p(std::pow(xn, static_cast<double>(denom_degree)));
        double log_rhs_base = std::log(dxy) - log_denom;
        if (!(lhs > 0.0)) {
            counterexample = true;
            min_log_ratio = -kInf;
            rep.worst_point = x;
            rep.worst_lhs = lhs;
            rep.worst_rhs_base = std::exp(log_rhs_base);
            rep.warnings.push_back(
                "zero left side against a positive normalized distance: oracle failure "
                "or presentation bug (the inequality itself is proved)");
            return;
        }
        double log_ratio = std::log(lhs) - exponent * log_rhs_base;
        ++rep.samples_used;
        if (log_ratio < min_log_ratio) {
            min_log_ratio = log_ratio;
            rep.worst_point = x;
            rep.worst_lhs = lhs;
            rep.worst_rhs_base = std::exp(log_rhs_base);
        }
    };

    const int ladder = 2 * cfg.shell_count;
    const int per_rung = std::max(4, cfg.samples_per_shell / 8);
    for (int k = 0; k < ladder; ++k) {
        double s = cfg.min_scale * std::pow(cfg.shell_base, k);
        Rng rng = root.child(k);
        for (int i = 0; i < per_rung; ++i) {
            Vec x = rng.annulus(n, s, s * cfg.shell_base);
            consider(x);
        }
        for (const SemialgebraicSet* S : {&X, &Y}) {
            for (int i = 0; i < per_rung / 2 + 1; ++i) {
                Vec center(n, 0.0);
                auto xo = detail::draw_on_set(*S, center, s, s * cfg.shell_base, rng, cfg.distance, i);
                if (!xo) continue;
                Vec dir = rng.direction(n);
                for (int j = 0; j < n; ++j) (*xo)[j] += 0.01 * s * dir[j];
                consider(*xo);
            }
        }
    }

    if (xy_queries > 0 && xy_feasible == 0) {
        rep.intersection_empty = true;
        rep.warnings.push_back(
            "every intersection distance query was infeasible; applied dist = 1 convention");
    }
    if (rep.samples_used == 0 && !counterexample)
        throw infeasible_error("estimate_global_separation: no usable samples", 0.0);
    rep.log10_constant = min_log_ratio / std::log(10.0);
    rep.constant = std::exp(min_log_ratio);
    return rep;
}

VerifyReport verify_bound(const ExponentEstimate& est, const BoundReport& bound,
                          double fit_tol) {
    bool upper_kind = est.direction == EstimateKind::LOCAL ||
                      est.direction == EstimateKind::SEPARATION_LOCAL ||
                      est.direction == EstimateKind::SEPARATION_GLOBAL;
    if (upper_kind != (bound.direction == Direction::UPPER))
        throw input_error("verify_bound: estimate and bound directions are incompatible");
    VerifyReport rep;
    rep.estimate = est.value;
    rep.bound = bound.value.get_d();
    rep.direction = bound.direction;
    if (bound.direction == Direction::UPPER) {
        rep.verdict = est.value <= rep.bound + fit_tol ? Verdict::PASS : Verdict::FAIL;
        rep.slack = rep.bound - est.value;
    } else {
        rep.verdict = est.value >= rep.bound - fit_tol ? Verdict::PASS : Verdict::FAIL;
        rep.slack = est.value - rep.bound;
    }
    return rep;
}

}  // namespace lojex
