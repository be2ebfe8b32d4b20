#include "lojex/projection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "internal_util.hpp"
#include "lojex/errors.hpp"
#include "lojex/rng.hpp"

namespace lojex {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

uint64_t mix_seed(uint64_t seed, uint64_t salt) {
    uint64_t s = seed ^ (0x9e3779b97f4a7c15ULL * (salt + 1));
    splitmix64(s);
    return s;
}

bool degrees_sorted_positive(const PolyMap& F) {
    int prev = std::numeric_limits<int>::max();
    for (const Polynomial& f : F.components) {
        auto d = f.degree();
        if (!d || *d < 1) return false;
        if (*d > prev) return false;
        prev = *d;
    }
    return true;
}

}  // namespace

TriangularLinearMap::TriangularLinearMap(int m_, int k_, std::vector<double> alpha_)
    : m(m_), k(k_), alpha(std::move(alpha_)) {
    if (k < 1 || k > m) throw input_error("triangular map needs 1 <= k <= m");
    if (alpha.size() != static_cast<size_t>(k) * (m - k))
        throw input_error("triangular map alpha must be k x (m-k)");
}

Mat TriangularLinearMap::matrix() const {
    Mat L(k, m);
    for (int i = 0; i < k; ++i) {
        L.at(i, i) = 1.0;
        for (int j = k; j < m; ++j) L.at(i, j) = alpha_at(i, j - k);
    }
    return L;
}

TriangularLinearMap sample_generic(int m, int k, uint64_t seed) {
    if (k < 1 || k > m) throw input_error("sample_generic: need 1 <= k <= m");
    Rng rng(seed);
    return TriangularLinearMap(m, k, rng.normal_vec(k * (m - k)));
}

PolyMap reduce_map(const PolyMap& F, const TriangularLinearMap& L) {
    if (L.m != F.arity())
        throw input_error("reduce_map: map arity differs from the linear map source dimension");
    return compose_linear(F, L.matrix());
}

DegreeCheck degree_preservation_check(const PolyMap& F, const TriangularLinearMap& L) {
    DegreeCheck chk;
    chk.applicable = degrees_sorted_positive(F);
    PolyMap LF = reduce_map(F, L);
    chk.expected.reserve(L.k);
    chk.actual.reserve(L.k);
    bool all = true;
    for (int j = 0; j < L.k; ++j) {
        auto de = F.components[j].degree();
        auto da = LF.components[j].degree();
        chk.expected.push_back(de ? *de : -1);
        chk.actual.push_back(da ? *da : -1);
        if (chk.expected.back() != chk.actual.back()) all = false;
    }
    chk.preserved = all;
    return chk;
}

ZeroPreservationReport zero_preservation_check(const PolyMap& F, const Mat& L,
                                               const SemialgebraicSet& X, const Locality& loc,
                                               int samples, uint64_t seed, double tol) {
    if (samples < 1) throw input_error("zero_preservation_check: samples must be >= 1");
    if (!(tol > 0.0)) throw input_error("zero_preservation_check: tol must be positive");
    PolyMap LF = compose_linear(F, L);
    SemialgebraicSet Zl = zero_set_on(LF, X);
    detail::MapEval feval(F), lfeval(LF);

    DistanceConfig dc = DistanceConfig::cheap(seed);
    dc.restore_tol = std::min(1e-9, tol);
    Rng rng(seed);

    ZeroPreservationReport rep;
    const double f_floor = std::sqrt(tol);
    const int n = X.num_vars;

    struct Region {
        Vec center;
        double lo, hi;
        bool outermost = false;
    };
    std::vector<Region> regions;
    if (loc.kind == Locality::Kind::LOCAL) {
        Vec c = loc.center;
        if (static_cast<int>(c.size()) != n)
            throw input_error("zero_preservation_check: locality center dimension differs");
        regions.push_back({c, 0.0, loc.radius, true});
    } else {
        Vec origin(n, 0.0);
        double r = std::max(loc.radius, 1e-6);
        int levels = std::max(loc.levels, 2);
        for (int j = 0; j < levels; ++j) {
            regions.push_back({origin, r, r * 2.0, j >= levels - 2});
            r *= 2.0;
        }
    }

    const int per_region = std::max(1, samples / static_cast<int>(regions.size()));
    for (const Region& reg : regions) {
        for (int i = 0; i < per_region; ++i) {
            auto z = detail::draw_on_set(Zl, reg.center, reg.lo, reg.hi, rng, dc, i);
            if (!z) continue;
            double lf = lfeval.norm(*z);
            if (lf > tol) continue;  // restoration did not actually reach the zero set
            ++rep.samples;
            double fv = feval.norm(*z);
            if (fv > f_floor) {
                rep.max_zero_radius = std::max(rep.max_zero_radius, norm(*z));
                // locally, any extra zero breaks the condition; at infinity
                // only zeros persisting into the outermost annuli do
                if (reg.outermost) {
                    rep.pass = false;
                    rep.witness = std::move(*z);
                    rep.witness_lf = lf;
                    rep.witness_f = fv;
                    return rep;
                }
            }
        }
    }
    return rep;
}

SandwichEstimate norm_sandwich_estimate(const PolyMap& F, const Mat& L,
                                        const SemialgebraicSet& X, std::span<const double> a,
                                        double radius, int samples, uint64_t seed) {
    if (samples < 2) throw input_error("norm_sandwich_estimate: samples must be >= 2");
    if (!(radius > 0.0)) throw input_error("norm_sandwich_estimate: radius must be positive");
    PolyMap LF = compose_linear(F, L);
    detail::MapEval feval(F), lfeval(LF);
    DistanceConfig dc = DistanceConfig::cheap(seed);
    Rng rng(seed);

    SandwichEstimate est;
    est.c1 = kInf;
    est.c2 = -kInf;
    for (int i = 0; i < samples; ++i) {
        auto x = detail::draw_on_set(X, a, 0.0, radius, rng, dc, i);
        if (!x) continue;
        double fv = feval.norm(*x);
        if (fv == 0.0) continue;
        double ratio = lfeval.norm(*x) / fv;
        est.c1 = std::min(est.c1, ratio);
        est.c2 = std::max(est.c2, ratio);
        ++est.used;
    }
    if (est.used == 0)
        throw infeasible_error("norm_sandwich_estimate: every sample had |F(x)| = 0", 0.0);
    return est;
}

PerturbationReport perturbation_stability_check(const PolyMap& F, const PolyMap& G,
                                                const SemialgebraicSet& X,
                                                std::span<const double> a,
                                                const SamplingConfig& cfg) {
    if (F.num_vars != G.num_vars || F.arity() != G.arity())
        throw input_error("perturbation_stability_check: F and G shapes differ");
    cfg.validate();

    PerturbationReport rep;
    ExponentEstimate ef = estimate_local_map_exponent(F, X, a, std::nullopt, cfg);
    rep.exponent_f = ef.value;

    // difference map D = F - G; its vanishing order at a from shell maxima
    std::vector<Polynomial> diff;
    diff.reserve(F.components.size());
    for (int i = 0; i < F.arity(); ++i) diff.push_back(F.components[i] - G.components[i]);
    bool diff_zero = true;
    for (const Polynomial& p : diff)
        if (!p.is_zero()) diff_zero = false;

    if (diff_zero) {
        rep.applicable = true;
        rep.order_estimate = kInf;
    } else {
        PolyMap D(F.num_vars, std::move(diff));
        detail::MapEval deval(D);
        DistanceConfig dc = cfg.distance;
        Rng root(cfg.seed);
        std::vector<double> xs, ys;
        for (int k = 0; k < cfg.shell_count; ++k) {
            double hi = cfg.min_scale * std::pow(cfg.shell_base, cfg.shell_count - k);
            double lo = hi / cfg.shell_base;
            Rng rng = root.child(k);
            double mx = 0.0;
            int got = 0;
            for (int i = 0; i < std::max(8, cfg.samples_per_shell / 4); ++i) {
                auto x = detail::draw_on_set(X, a, lo, hi, rng, dc, i);
                if (!x) continue;
                mx = std::max(mx, deval.norm(*x));
                ++got;
            }
            if (got > 0 && mx > 0.0) {
                xs.push_back(std::log(hi));
                ys.push_back(std::log(mx));
            }
        }
        if (xs.size() < 2) {
            rep.note = "could not estimate the vanishing order of F - G";
            return rep;
        }
        rep.order_estimate = fit_line(xs, ys).slope;
        if (rep.order_estimate <= rep.exponent_f - cfg.fit_tol) {
            rep.note = "order precondition violated: ord(F-G) <= exponent of F";
            return rep;
        }
    }
    rep.applicable = true;

    ExponentEstimate eg = estimate_local_map_exponent(G, X, a, std::nullopt, cfg);
    rep.exponent_g = eg.value;

    // two-sided ratio |G|/|F| across shrinking shells
    detail::MapEval feval(F), geval(G);
    Rng root(cfg.seed + 1);
    rep.ratio_min = kInf;
    rep.ratio_max = -kInf;
    for (int k = 0; k < cfg.shell_count; ++k) {
        double hi = cfg.min_scale * std::pow(cfg.shell_base, cfg.shell_count - k);
        double lo = hi / cfg.shell_base;
        Rng rng = root.child(k);
        for (int i = 0; i < std::max(8, cfg.samples_per_shell / 4); ++i) {
            auto x = detail::draw_on_set(X, a, lo, hi, rng, cfg.distance, i);
            if (!x) continue;
            double fv = feval.norm(*x);
            if (fv == 0.0) continue;
            double r = geval.norm(*x) / fv;
            rep.ratio_min = std::min(rep.ratio_min, r);
            rep.ratio_max = std::max(rep.ratio_max, r);
        }
    }
    double tol = std::max({cfg.fit_tol, 2.0 * ef.fit_stderr, 2.0 * eg.fit_stderr});
    rep.pass = std::isfinite(rep.ratio_max) && rep.ratio_min > 0.0 &&
               std::fabs(rep.exponent_f - rep.exponent_g) <= tol;
    return rep;
}

ReductionReport reduction_experiment(const PolyMap& F, const SemialgebraicSet& X, int dim_hint,
                                     int k, int trials, const Locality& loc,
                                     const SamplingConfig& cfg) {
    const int m = F.arity();
    if (dim_hint < 0 || dim_hint > X.num_vars)
        throw input_error("reduction_experiment: dim hint must satisfy 0 <= n <= N");
    if (k < dim_hint)
        throw input_error(
            "reduction_experiment: the reduction theorems require dim X <= k <= m; "
            "k is below the supplied dimension hint");
    if (k > m)
        throw input_error("reduction_experiment: the reduction theorems require k <= m");
    if (trials < 1) throw input_error("reduction_experiment: trials must be >= 1");
    cfg.validate();

    ReductionReport rep;
    rep.k = k;
    rep.locality = loc;
    {
        std::ostringstream os;
        os << "(";
        for (int i = 0; i < m; ++i) os << (i ? ", " : "") << F.components[i].to_string();
        os << ")";
        rep.map_desc = os.str();
    }

    const bool local = loc.kind == Locality::Kind::LOCAL;
    Vec center = local ? loc.center : Vec(X.num_vars, 0.0);
    std::optional<SemialgebraicSet> Z;
    if (local) Z = zero_set_on(F, X);

    // the sampled window realizes the theorem's neighbourhood: local shells
    // top out at the locality radius, so the zero-preservation ball and the
    // estimates cover the same region
    SamplingConfig base_cfg = cfg;
    if (local)
        base_cfg.min_scale = loc.radius * std::pow(cfg.shell_base, -cfg.shell_count);
    Locality scan = loc;
    if (!local) {
        scan.radius = base_cfg.min_scale;
        scan.levels = cfg.shell_count + 2;
    }

    ExponentEstimate base;
    if (local)
        base = estimate_local_map_exponent(F, X, center, Z, base_cfg);
    else
        base = estimate_infinity_exponent(F, X, base_cfg);
    rep.baseline = base.value;
    rep.baseline_stderr = base.fit_stderr;

    rep.trials.resize(trials);
    double eq_tol_max = 0.0;
    detail::run_indexed(trials, cfg.threads, [&](int t) {
        TrialRecord& rec = rep.trials[t];
        rec.alpha_seed = mix_seed(cfg.seed, static_cast<uint64_t>(t) + 101);
        TriangularLinearMap L = sample_generic(m, k, rec.alpha_seed);
        Mat LM = L.matrix();
        PolyMap LF = reduce_map(F, L);

        ZeroPreservationReport zp = zero_preservation_check(
            F, LM, X, scan, 96, mix_seed(rec.alpha_seed, 7), 1e-9);
        rec.zero_preserved = zp.pass;

        DegreeCheck dchk = degree_preservation_check(F, L);
        if (dchk.applicable) rec.degree_preserved = dchk.preserved;

        double mid_radius = base_cfg.min_scale * std::pow(cfg.shell_base, cfg.shell_count / 2);
        try {
            SandwichEstimate sw = norm_sandwich_estimate(F, LM, X, center, mid_radius, 128,
                                                         mix_seed(rec.alpha_seed, 13));
            rec.sandwich_c1 = sw.c1;
            rec.sandwich_c2 = sw.c2;
        } catch (const infeasible_error&) {
            rec.sandwich_c1 = rec.sandwich_c2 = 0.0;
        }

        // same estimator seed as the baseline: identical shells and samples,
        // so the identity reduction reproduces the baseline exactly and the
        // trials share common random numbers. At infinity, bounded extra
        // zeros of L o F push the window outward (the exponent at infinity
        // only concerns what happens beyond them).
        SamplingConfig tc = base_cfg;
        tc.threads = 1;
        if (!local && zp.max_zero_radius > 0.0)
            tc.min_scale = std::max(tc.min_scale, 4.0 * zp.max_zero_radius);
        ExponentEstimate et;
        if (local)
            et = estimate_local_map_exponent(LF, X, center, Z, tc);
        else
            et = estimate_infinity_exponent(LF, X, tc);
        rec.exponent = et.value;
        rec.exponent_stderr = et.fit_stderr;

        rec.inequality_ok = local ? et.value >= base.value - cfg.fit_tol
                                  : et.value <= base.value + cfg.fit_tol;
    });

    rep.all_inequalities_hold = true;
    for (TrialRecord& rec : rep.trials) {
        double eq_tol = std::max({0.1, 2.0 * base.fit_stderr, 2.0 * rec.exponent_stderr});
        rec.equality_ok = std::fabs(rec.exponent - base.value) <= eq_tol;
        eq_tol_max = std::max(eq_tol_max, eq_tol);
        if (rec.zero_preserved && !rec.inequality_ok) rep.all_inequalities_hold = false;
        if (rec.equality_ok) ++rep.equality_passes;
    }
    rep.equality_tol = eq_tol_max;
    return rep;
}

}  // namespace lojex
