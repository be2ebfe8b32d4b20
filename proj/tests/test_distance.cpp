#include <doctest.h>

#include <cmath>

#include "lojex/distance.hpp"
#include "lojex/errors.hpp"
#include "lojex/rng.hpp"
#include "oracles.hpp"

using namespace lojex;

namespace {

Polynomial from_terms(int nv, std::vector<std::pair<double, std::vector<int>>> ts) {
    std::vector<Monomial> ms;
    for (auto& [c, e] : ts) ms.push_back({c, e});
    return Polynomial(nv, std::move(ms));
}

SemialgebraicSet line_y0() {  // {y = 0} in R^2
    return SemialgebraicSet::basic(BasicSet(2, {}, {Polynomial::variable(2, 1)}));
}

SemialgebraicSet cusp_curve() {  // {y - x^3 = 0}
    return SemialgebraicSet::basic(
        BasicSet(2, {}, {from_terms(2, {{1, {0, 1}}, {-1, {3, 0}}})}));
}

}  // namespace

TEST_CASE("distance to a line") {
    DistanceConfig cfg;
    DistanceResult r = approx_distance(line_y0(), Vec{0, 1}, cfg);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(std::fabs(r.witness[1]) <= 1e-9);
}

TEST_CASE("distance to the cusp curve near the flat spot") {
    // oracle: dense sweep over (u, u^3), u in [-1, 1], step 1e-6
    double oracle = oracles::curve_distance_sweep(
        0.1, 0.0, [](double u) { return u; }, [](double u) { return u * u * u; }, -1.0, 1.0,
        1e-6);
    CHECK(oracle == doctest::Approx(0.000999550573736656).epsilon(1e-6));

    DistanceConfig cfg;
    DistanceResult r = approx_distance(cusp_curve(), Vec{0.1, 0.0}, cfg);
    CHECK(r.value == doctest::Approx(oracle).epsilon(0.05));
    // never below the true distance by more than the restoration slack
    CHECK(r.value >= oracle * (1.0 - 1e-6));
}

TEST_CASE("distance to a half line") {
    SemialgebraicSet H = SemialgebraicSet::basic(BasicSet(1, {Polynomial::variable(1, 0)}, {}));
    DistanceConfig cfg;
    DistanceResult r = approx_distance(H, Vec{-2.0}, cfg);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("zero distance for members") {
    DistanceConfig cfg;
    SemialgebraicSet S = cusp_curve();
    Rng rng(5);
    for (int i = 0; i < 10; ++i) {
        double t = rng.uniform(-1, 1);
        DistanceResult r = approx_distance(S, Vec{t, t * t * t}, cfg);
        CHECK(r.value <= 1e-9);
    }
}

TEST_CASE("distance upper bound is realized by a member witness") {
    DistanceConfig cfg;
    cfg.seed = 2;
    SemialgebraicSet S = cusp_curve();
    Rng rng(17);
    for (int i = 0; i < 8; ++i) {
        Vec x{rng.uniform(-2, 2), rng.uniform(-2, 2)};
        DistanceResult r = approx_distance(S, x, cfg);
        CHECK(membership(S, r.witness, cfg.restore_tol * 10));
        double d = 0;
        for (int j = 0; j < 2; ++j) d += (x[j] - r.witness[j]) * (x[j] - r.witness[j]);
        CHECK(std::sqrt(d) == doctest::Approx(r.value).epsilon(1e-12));
    }
}

TEST_CASE("triangle property on random pairs") {
    DistanceConfig cfg;
    SemialgebraicSet S = line_y0();
    Rng rng(23);
    for (int i = 0; i < 10; ++i) {
        Vec x{rng.uniform(-2, 2), rng.uniform(-2, 2)};
        Vec y{rng.uniform(-2, 2), rng.uniform(-2, 2)};
        double dx = approx_distance(S, x, cfg).value;
        double dy = approx_distance(S, y, cfg).value;
        double dxy = std::hypot(x[0] - y[0], x[1] - y[1]);
        CHECK(std::fabs(dx - dy) <= dxy + 2e-6);
    }
}

TEST_CASE("sample_near") {
    DistanceConfig cfg;

    SUBCASE("free space gives ball samples") {
        bool partial = false;
        auto pts = sample_near(SemialgebraicSet::full_space(2), Vec{0, 0}, 1.0, 50, 9, cfg,
                               &partial);
        CHECK(pts.size() == 50);
        CHECK_FALSE(partial);
        for (const Vec& p : pts) CHECK(std::hypot(p[0], p[1]) <= 1.0 + 1e-12);
    }
    SUBCASE("line") {
        auto pts = sample_near(line_y0(), Vec{0, 0}, 1.0, 30, 9, cfg);
        CHECK(pts.size() == 30);
        for (const Vec& p : pts) {
            CHECK(std::fabs(p[1]) <= 1e-9);
            CHECK(std::fabs(p[0]) <= 1.0 + 1e-9);
        }
    }
    SUBCASE("parabola residuals after restoration") {
        auto parab = from_terms(2, {{1, {0, 1}}, {-1, {2, 0}}});  // y - x^2
        SemialgebraicSet P = SemialgebraicSet::basic(BasicSet(2, {}, {parab}));
        auto pts = sample_near(P, Vec{0, 0}, 0.5, 40, 11, cfg);
        CHECK(pts.size() >= 30);
        for (const Vec& p : pts) CHECK(std::fabs(p[1] - p[0] * p[0]) <= 1e-8);
    }
    SUBCASE("determinism") {
        auto a = sample_near(cusp_curve(), Vec{0, 0}, 1.0, 20, 33, cfg);
        auto b = sample_near(cusp_curve(), Vec{0, 0}, 1.0, 20, 33, cfg);
        REQUIRE(a.size() == b.size());
        for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
    }
}

TEST_CASE("distance to a union takes the nearest piece") {
    SemialgebraicSet S(2, {BasicSet(2, {}, {Polynomial::variable(2, 1)}),
                           BasicSet(2, {}, {Polynomial::variable(2, 0)})});
    DistanceConfig cfg;
    CHECK(approx_distance(S, Vec{1, 2}, cfg).value == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(approx_distance(S, Vec{3, 0.5}, cfg).value == doctest::Approx(0.5).epsilon(1e-9));
    // sample_near draws from both pieces
    auto pts = sample_near(S, Vec{0, 0}, 1.0, 40, 3, cfg);
    bool on_x_axis = false, on_y_axis = false;
    for (const Vec& p : pts) {
        if (std::fabs(p[1]) <= 1e-9) on_x_axis = true;
        if (std::fabs(p[0]) <= 1e-9) on_y_axis = true;
    }
    CHECK(on_x_axis);
    CHECK(on_y_axis);
}

TEST_CASE("infeasible search reports best violation") {
    // x^2 + y^2 + 1 = 0 has no real points
    auto p = from_terms(2, {{1, {2, 0}}, {1, {0, 2}}, {1, {0, 0}}});
    SemialgebraicSet S = SemialgebraicSet::basic(BasicSet(2, {}, {p}));
    DistanceConfig cfg;
    cfg.starts = 8;
    try {
        approx_distance(S, Vec{0, 0}, cfg);
        FAIL("expected infeasible_error");
    } catch (const infeasible_error& e) {
        CHECK(e.best_violation() > 0.0);
    }
}

TEST_CASE("warm starts sharpen the bound") {
    SemialgebraicSet S = cusp_curve();
    DistanceConfig cfg;
    cfg.starts = 2;
    Vec q{0.5, -0.25};
    std::vector<Vec> warm{Vec{0.3, 0.027}};
    DistanceResult r = approx_distance(S, q, cfg, warm);
    double to_warm = std::hypot(q[0] - 0.3, q[1] - 0.027);
    CHECK(r.value <= to_warm + 1e-12);
}
