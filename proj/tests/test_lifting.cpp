#include <doctest.h>

#include <cmath>

#include "lojex/errors.hpp"
#include "lojex/lifting.hpp"
#include "lojex/rng.hpp"
#include "oracles.hpp"

using namespace lojex;

namespace {

Polynomial from_terms(int nv, std::vector<std::pair<double, std::vector<int>>> ts) {
    std::vector<Monomial> ms;
    for (auto& [c, e] : ts) ms.push_back({c, e});
    return Polynomial(nv, std::move(ms));
}

double residual_inf(const AlgebraicLift& L, const Vec& point) {
    double r = 0;
    for (const Polynomial& e : L.equations) r = std::max(r, std::fabs(e.eval(point)));
    return r;
}

Vec join(std::span<const double> x, const Vec& y) {
    Vec p(x.begin(), x.end());
    p.insert(p.end(), y.begin(), y.end());
    return p;
}

}  // namespace

TEST_CASE("algebraize_pair") {
    SUBCASE("half lines") {
        auto x = Polynomial::variable(1, 0);
        BasicSet X(1, {x}, {});
        BasicSet Y(1, {-1.0 * x}, {});
        auto [A, B] = algebraize_pair(X, Y);
        CHECK(A.ambient_vars == 3);
        CHECK(B.ambient_vars == 3);
        CHECK(A.slack_range.offset == 0);
        CHECK(A.slack_range.count == 1);
        CHECK(B.slack_range.offset == 1);
        CHECK(B.slack_range.count == 1);
        // A = {x - y1^2 = 0}: contains (4, 2, anything)
        CHECK(std::fabs(A.equations[0].eval(Vec{4, 2, 7})) <= 1e-12);
        CHECK(std::fabs(B.equations[0].eval(Vec{-9, 5, 3})) <= 1e-12);
        CHECK(A.equations.size() == 1);
        CHECK(B.equations.size() == 1);
    }
    SUBCASE("algebraic inputs need no slacks") {
        auto h = Polynomial::variable(2, 1);
        BasicSet X(2, {}, {h});
        auto [A, B] = algebraize_pair(X, X);
        CHECK(A.ambient_vars == 2);
        CHECK(A.total_slacks() == 0);
        CHECK(A.equations.size() == 1);
    }
    SUBCASE("disc and half plane") {
        auto disc = from_terms(2, {{1, {0, 0}}, {-1, {2, 0}}, {-1, {0, 2}}});
        auto xm1 = from_terms(2, {{1, {1, 0}}, {-1, {0, 0}}});
        auto [A, B] = algebraize_pair(BasicSet(2, {disc}, {}), BasicSet(2, {xm1}, {}));
        CHECK(A.ambient_vars == 4);
        // A: 1 - x^2 - y^2 - s1^2 = 0 at (0.6, 0, 0.8, anything)
        CHECK(std::fabs(A.equations[0].eval(Vec{0.6, 0, 0.8, 9})) <= 1e-12);
        // B: x - 1 - s2^2 = 0 at (5, 0, anything, 2)
        CHECK(std::fabs(B.equations[0].eval(Vec{5, 0, 9, 2})) <= 1e-12);
    }
    SUBCASE("dimension mismatch") {
        BasicSet X(1, {}, {});
        BasicSet Y(2, {}, {});
        CHECK_THROWS_AS(algebraize_pair(X, Y), input_error);
    }
}

TEST_CASE("lift_point") {
    auto x = Polynomial::variable(1, 0);
    BasicSet X(1, {x}, {});
    auto [A, B] = algebraize_pair(X, BasicSet(1, {}, {}));

    CHECK(lift_point(A, Vec{4.0})[0] == doctest::Approx(2.0));
    CHECK(lift_point(A, Vec{0.0})[0] == 0.0);

    auto disc = from_terms(1, {{1, {0}}, {-1, {2}}});  // 1 - x^2
    auto [C, D] = algebraize_pair(BasicSet(1, {disc}, {}), BasicSet(1, {}, {}));
    CHECK(lift_point(C, Vec{0.6})[0] == doctest::Approx(0.8));

    CHECK_THROWS_AS(lift_point(A, Vec{-1.0}), input_error);
}

TEST_CASE("joint_lift assembles on disjoint ranges") {
    auto x = Polynomial::variable(1, 0);
    BasicSet X(1, {x}, {});
    BasicSet Y(1, {-1.0 * x}, {});
    auto [A, B] = algebraize_pair(X, Y);

    Vec y = joint_lift(A, B, Vec{1.0}, Vec{-4.0});
    REQUIRE(y.size() == 2);
    CHECK(y[0] == doctest::Approx(1.0));
    CHECK(y[1] == doctest::Approx(2.0));

    // both points lie on their lifts with the common slack vector
    CHECK(residual_inf(A, join(Vec{1.0}, y)) <= 1e-9);
    CHECK(residual_inf(B, join(Vec{-4.0}, y)) <= 1e-9);

    // boundary case
    BasicSet Y2(1, {from_terms(1, {{1, {1}}, {-1, {0}}})}, {});  // x - 1 >= 0
    auto [A2, B2] = algebraize_pair(X, Y2);
    Vec y2 = joint_lift(A2, B2, Vec{0.0}, Vec{1.0});
    CHECK(y2[0] == 0.0);
    CHECK(y2[1] == 0.0);
}

TEST_CASE("lift invariants on random sets and points") {
    Rng rng(101);
    DistanceConfig dc;
    for (int trial = 0; trial < 20; ++trial) {
        int n = 1 + static_cast<int>(rng.next_u64() % 3);
        // constraints satisfied strictly at a random anchor
        Vec anchor(n);
        for (double& c : anchor) c = rng.uniform(-1, 1);
        int n_ineq = 1 + static_cast<int>(rng.next_u64() % 3);
        std::vector<Polynomial> gs;
        for (int i = 0; i < n_ineq; ++i) {
            std::vector<Monomial> ms;
            int nt = 1 + static_cast<int>(rng.next_u64() % 4);
            for (int t = 0; t < nt; ++t) {
                Monomial m;
                m.coef = rng.uniform(-1, 1);
                m.exps.assign(n, 0);
                for (int v = 0; v < n; ++v) m.exps[v] = static_cast<int>(rng.next_u64() % 3);
                ms.push_back(m);
            }
            Polynomial p(n, ms);
            gs.push_back(p - Polynomial::constant(n, p.eval(anchor) - rng.uniform(0.1, 0.6)));
        }
        BasicSet X(n, gs, {});
        auto [A, B] = algebraize_pair(X, X);
        SemialgebraicSet S = SemialgebraicSet::basic(X);

        auto pts = sample_near(S, anchor, 0.5, 5, rng.next_u64(), dc);
        for (const Vec& p : pts) {
            Vec y = lift_point(A, p, 1e-7);
            Vec lifted = join(p, y);
            // the lifted point lies on A, and projecting it back returns p
            CHECK(residual_inf(A, lifted) <= 1e-9 * (1.0 + std::fabs(residual_inf(A, lifted))));
            for (int i = 0; i < n; ++i) CHECK(lifted[i] == p[i]);
            // sign symmetry: flipping any slack stays on A
            for (int j = 0; j < A.total_slacks(); ++j) {
                Vec flipped = lifted;
                flipped[n + j] = -flipped[n + j];
                CHECK(residual_inf(A, flipped) <= 1e-9 + 1e-9 * std::fabs(flipped[n + j]));
            }
        }
    }
}

TEST_CASE("degree cap") {
    auto g2 = from_terms(2, {{1, {0, 0}}, {-1, {2, 0}}, {-1, {0, 2}}});  // degree 2
    auto g1 = Polynomial::variable(2, 0);                                // degree 1
    auto h3 = from_terms(2, {{1, {3, 0}}, {1, {0, 1}}});                 // degree 3

    auto [A1, B1] = algebraize_pair(BasicSet(2, {g1}, {}), BasicSet(2, {}, {}));
    CHECK(A1.degree_cap() == 2);  // max(kappa, 2) with kappa = 1

    auto [A2, B2] = algebraize_pair(BasicSet(2, {g2}, {h3}), BasicSet(2, {}, {}));
    CHECK(A2.degree_cap() == 3);  // max(kappa, 2) with kappa = 3

    auto [A3, B3] = algebraize_pair(BasicSet(2, {}, {h3}), BasicSet(2, {}, {}));
    CHECK(A3.degree_cap() == 3);  // no inequalities: kappa itself
}

TEST_CASE("distance transfer") {
    auto x = Polynomial::variable(1, 0);
    BasicSet X(1, {x}, {});
    auto [A, B] = algebraize_pair(X, BasicSet(1, {}, {}));

    // oracle for dist((-1,0), {x = y^2}): dense sweep over (u^2, u)
    double oracle = oracles::curve_distance_sweep(
        -1.0, 0.0, [](double u) { return u * u; }, [](double u) { return u; }, -2.0, 2.0, 1e-6);
    CHECK(oracle == doctest::Approx(1.0).epsilon(1e-9));

    DistanceConfig cfg;
    TransferReport rep = distance_transfer_check(A, Vec{-1.0}, 3, 5, cfg);
    CHECK(rep.trials == 3);
    CHECK(rep.dist_x == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(rep.dist_lifted <= rep.dist_x + 1e-9);
    CHECK(rep.min_margin >= -1e-6);

    // x inside the set is rejected
    CHECK_THROWS_AS(distance_transfer_check(A, Vec{2.0}, 1, 5, cfg), input_error);

    // purely algebraic source: the lift is the set itself, margins stay ~0
    auto yvar = Polynomial::variable(2, 1);
    BasicSet L(2, {}, {yvar});
    auto [AL, BL] = algebraize_pair(L, L);
    TransferReport rl = distance_transfer_check(AL, Vec{0.0, 1.0}, 2, 5, cfg);
    CHECK(rl.dist_x == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(rl.min_margin >= -1e-9);
    CHECK(rl.min_margin <= 1e-6);
}
