#include "lojex/lifting.hpp"

#include <algorithm>
#include <cmath>

#include "lojex/errors.hpp"

namespace lojex {

SemialgebraicSet AlgebraicLift::as_set() const {
    return SemialgebraicSet(ambient_vars, {BasicSet(ambient_vars, {}, equations)});
}

int AlgebraicLift::degree_cap() const {
    int cap = 0;
    for (const Polynomial& e : equations)
        if (auto d = e.degree()) cap = std::max(cap, *d);
    return cap;
}

namespace {

AlgebraicLift build_lift(const BasicSet& src, int slack_offset, int r_total) {
    AlgebraicLift L;
    L.source = src;
    L.ambient_vars = src.num_vars + r_total;
    L.slack_range = {slack_offset, static_cast<int>(src.ineqs.size())};
    L.equations.reserve(src.ineqs.size() + src.eqs.size());
    for (size_t j = 0; j < src.ineqs.size(); ++j)
        L.equations.push_back(subtract_square_slack(
            src.ineqs[j], slack_offset + static_cast<int>(j) + 1, r_total));
    for (const Polynomial& h : src.eqs) L.equations.push_back(h.extended(L.ambient_vars));
    return L;
}

}  // namespace

std::pair<AlgebraicLift, AlgebraicLift> algebraize_pair(const BasicSet& X, const BasicSet& Y) {
    if (X.num_vars != Y.num_vars)
        throw input_error("algebraize_pair: ambient dimensions differ");
    const int r1 = static_cast<int>(X.ineqs.size());
    const int r2 = static_cast<int>(Y.ineqs.size());
    const int r = r1 + r2;
    return {build_lift(X, 0, r), build_lift(Y, r1, r)};
}

Vec lift_point(const AlgebraicLift& L, std::span<const double> x, double tol) {
    if (static_cast<int>(x.size()) != L.source.num_vars)
        throw input_error("lift_point: point dimension differs from source ambient");
    Vec y(L.total_slacks(), 0.0);
    for (size_t j = 0; j < L.source.ineqs.size(); ++j) {
        double g = L.source.ineqs[j].eval(x);
        if (g < -tol)
            throw input_error("lift_point: point violates an inequality of the source set");
        y[L.slack_range.offset + j] = std::sqrt(std::max(g, 0.0));
    }
    for (const Polynomial& h : L.source.eqs)
        if (std::fabs(h.eval(x)) > tol)
            throw input_error("lift_point: point violates an equation of the source set");
    return y;
}

Vec joint_lift(const AlgebraicLift& A, const AlgebraicLift& B, std::span<const double> x1,
               std::span<const double> x2, double tol) {
    if (A.ambient_vars != B.ambient_vars)
        throw input_error("joint_lift: lifts disagree on ambient dimension");
    Vec ya = lift_point(A, x1, tol);
    Vec yb = lift_point(B, x2, tol);
    for (size_t i = 0; i < ya.size(); ++i) ya[i] += yb[i];  // disjoint supports
    return ya;
}

TransferReport distance_transfer_check(const AlgebraicLift& A, std::span<const double> x,
                                       int trials, uint64_t seed, const DistanceConfig& cfg) {
    if (trials < 1) throw input_error("distance_transfer_check: trials must be >= 1");
    SemialgebraicSet X = SemialgebraicSet::basic(A.source);
    if (membership(X, x, cfg.restore_tol))
        throw input_error("distance_transfer_check: x must lie outside the source set");
    SemialgebraicSet lifted = A.as_set();

    TransferReport rep;
    rep.trials = trials;
    rep.min_margin = std::numeric_limits<double>::infinity();
    for (int t = 0; t < trials; ++t) {
        DistanceConfig dc = cfg;
        dc.seed = seed + 1315423911ULL * static_cast<uint64_t>(t);
        DistanceResult dx = approx_distance(X, x, dc);
        Vec y = lift_point(A, dx.witness, std::max(cfg.restore_tol * 16, 1e-8));

        Vec xy(x.begin(), x.end());
        xy.insert(xy.end(), y.begin(), y.end());
        // the lifted nearest point is a feasible warm start, so the lifted
        // distance estimate can never exceed |x - x1|
        Vec warm(dx.witness);
        warm.insert(warm.end(), y.begin(), y.end());
        std::vector<Vec> warms{std::move(warm)};
        DistanceResult da = approx_distance(lifted, xy, dc, warms);

        double margin = dx.value - da.value;
        rep.margins.push_back(margin);
        rep.min_margin = std::min(rep.min_margin, margin);
        rep.dist_x = dx.value;
        rep.dist_lifted = da.value;
    }
    return rep;
}

}  // namespace lojex
