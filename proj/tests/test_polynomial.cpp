#include <doctest.h>

#include <cmath>

#include "lojex/errors.hpp"
#include "lojex/polynomial.hpp"
#include "lojex/rng.hpp"

using namespace lojex;

namespace {

Polynomial from_terms(int nv, std::vector<std::pair<double, std::vector<int>>> ts) {
    std::vector<Monomial> ms;
    for (auto& [c, e] : ts) ms.push_back({c, e});
    return Polynomial(nv, std::move(ms));
}

}  // namespace

TEST_CASE("eval") {
    auto p = from_terms(2, {{1, {2, 0}}, {1, {0, 2}}});  // x^2 + y^2
    CHECK(p.eval(Vec{1, 2}) == doctest::Approx(5.0));

    Polynomial zero(2);
    CHECK(zero.eval(Vec{3, 4}) == 0.0);

    auto q = from_terms(2, {{1, {3, 2}}, {1, {1, 0}}});  // x^3 y^2 + x
    CHECK(q.eval(Vec{2, 1}) == doctest::Approx(10.0));

    CHECK_THROWS_AS(p.eval(Vec{1.0}), input_error);
}

TEST_CASE("degree and zero sentinel") {
    auto q = from_terms(2, {{1, {3, 2}}, {1, {1, 0}}});
    CHECK(q.degree() == 5);
    CHECK(Polynomial::constant(1, 7.0).degree() == 0);
    CHECK_FALSE(Polynomial(3).degree().has_value());
    CHECK(Polynomial(3).is_zero());
}

TEST_CASE("gradient") {
    auto p = from_terms(2, {{1, {2, 0}}, {1, {0, 2}}});
    auto g = p.gradient();
    CHECK(g[0] == from_terms(2, {{2, {1, 0}}}));
    CHECK(g[1] == from_terms(2, {{2, {0, 1}}}));

    auto c = Polynomial::constant(3, 4.0);
    for (const auto& d : c.gradient()) CHECK(d.is_zero());

    auto m = from_terms(2, {{1, {3, 2}}});  // x^3 y^2
    auto gm = m.gradient();
    CHECK(gm[0] == from_terms(2, {{3, {2, 2}}}));
    CHECK(gm[1] == from_terms(2, {{2, {3, 1}}}));
}

TEST_CASE("gradient matches central finite differences") {
    Rng rng(42);
    // a mildly messy polynomial in 3 vars
    auto p = from_terms(3, {{0.7, {2, 1, 0}}, {-1.3, {0, 3, 1}}, {2.0, {1, 1, 1}}, {0.5, {0, 0, 0}}});
    auto g = p.gradient();
    const double h = 1e-5;
    for (int trial = 0; trial < 100; ++trial) {
        Vec x = {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
        for (int i = 0; i < 3; ++i) {
            Vec xp = x, xm = x;
            xp[i] += h;
            xm[i] -= h;
            double fd = (p.eval(xp) - p.eval(xm)) / (2 * h);
            double an = g[i].eval(x);
            CHECK(std::fabs(fd - an) <= 1e-6 * (1.0 + std::fabs(an)));
        }
    }
}

TEST_CASE("compose_linear") {
    auto x2 = from_terms(1, {{1, {2}}});
    auto x3 = from_terms(1, {{1, {3}}});
    auto x5 = from_terms(1, {{1, {5}}});
    PolyMap F(1, {x2, x3});

    SUBCASE("linear combination") {
        Mat L(1, 2);
        L.at(0, 0) = 1.0;
        L.at(0, 1) = 0.5;
        PolyMap R = compose_linear(F, L);
        CHECK(R.arity() == 1);
        CHECK(R.components[0] == from_terms(1, {{0.5, {3}}, {1, {2}}}));
    }
    SUBCASE("identity") {
        PolyMap R = compose_linear(F, Mat::identity(2));
        CHECK(R.components[0] == x2);
        CHECK(R.components[1] == x3);
    }
    SUBCASE("coordinate projection") {
        PolyMap G(1, {x2, x3, x5});
        Mat L(1, 3);
        L.at(0, 2) = 1.0;
        PolyMap R = compose_linear(G, L);
        CHECK(R.components[0] == x5);
    }
    SUBCASE("dimension mismatch") {
        CHECK_THROWS_AS(compose_linear(F, Mat(1, 3)), input_error);
    }
}

TEST_CASE("compose_linear eval property") {
    Rng rng(7);
    auto f1 = from_terms(2, {{1.5, {2, 1}}, {-0.25, {0, 1}}});
    auto f2 = from_terms(2, {{-2, {1, 1}}, {1, {0, 0}}});
    auto f3 = from_terms(2, {{0.75, {3, 0}}});
    PolyMap F(2, {f1, f2, f3});
    Mat L(2, 3);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) L.at(i, j) = rng.normal();
    PolyMap LF = compose_linear(F, L);
    for (int t = 0; t < 50; ++t) {
        Vec x = {rng.uniform(-2, 2), rng.uniform(-2, 2)};
        Vec fx(3);
        F.eval(x, fx);
        for (int i = 0; i < 2; ++i) {
            double want = 0;
            for (int j = 0; j < 3; ++j) want += L.at(i, j) * fx[j];
            double got = LF.components[i].eval(x);
            CHECK(std::fabs(got - want) <= 1e-12 * (1.0 + std::fabs(want)));
        }
    }
    // degree never grows under composition
    CHECK(*LF.degree() <= *F.degree());
}

TEST_CASE("subtract_square_slack") {
    auto g = Polynomial::variable(1, 0);  // g = x, N = 1
    auto lifted = subtract_square_slack(g, 1, 1);
    CHECK(lifted.num_vars() == 2);
    CHECK(lifted == from_terms(2, {{1, {1, 0}}, {-1, {0, 2}}}));
    CHECK(lifted.degree() == 2);

    // 1 - x^2 - y^2 with slack 2 of 2 lives in R^4
    auto disc = from_terms(2, {{1, {0, 0}}, {-1, {2, 0}}, {-1, {0, 2}}});
    auto l2 = subtract_square_slack(disc, 2, 2);
    CHECK(l2.num_vars() == 4);
    CHECK(l2.eval(Vec{0.1, 0.2, 9.0, 0.3}) ==
          doctest::Approx(1 - 0.01 - 0.04 - 0.09));

    auto zero_lift = subtract_square_slack(Polynomial(1), 1, 2);
    CHECK(zero_lift == from_terms(3, {{-1, {0, 2, 0}}}));
    CHECK(zero_lift.degree() == 2);

    CHECK_THROWS_AS(subtract_square_slack(g, 3, 2), input_error);
    CHECK_THROWS_AS(subtract_square_slack(g, 0, 2), input_error);
}

TEST_CASE("canonical form is idempotent and deterministic") {
    Rng rng(11);
    for (int t = 0; t < 40; ++t) {
        std::vector<Monomial> ms;
        int nv = 1 + static_cast<int>(rng.next_u64() % 3);
        int nt = 1 + static_cast<int>(rng.next_u64() % 8);
        for (int i = 0; i < nt; ++i) {
            Monomial m;
            m.coef = rng.uniform(-2, 2);
            for (int v = 0; v < nv; ++v)
                m.exps.push_back(static_cast<int>(rng.next_u64() % 4));
            ms.push_back(m);
        }
        Polynomial p(nv, ms);
        Polynomial again(nv, p.terms());
        CHECK(p == again);
        // no duplicate exponent vectors, no zero coefficients
        for (size_t i = 0; i < p.terms().size(); ++i) {
            CHECK(p.terms()[i].coef != 0.0);
            for (size_t j = i + 1; j < p.terms().size(); ++j)
                CHECK(p.terms()[i].exps != p.terms()[j].exps);
        }
    }
}

TEST_CASE("map basics") {
    auto x2 = from_terms(1, {{1, {2}}});
    CHECK_THROWS_AS(PolyMap(1, {}), input_error);
    PolyMap F(1, {x2, Polynomial(1)});
    CHECK(F.degree() == 2);
    CHECK(F.norm_at(Vec{2.0}) == doctest::Approx(4.0));
}
