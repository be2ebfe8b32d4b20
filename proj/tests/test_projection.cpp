#include <doctest.h>

#include <cmath>

#include "lojex/errors.hpp"
#include "lojex/jsonio.hpp"
#include "lojex/projection.hpp"
#include "lojex/rng.hpp"

using namespace lojex;

namespace {

Polynomial from_terms(int nv, std::vector<std::pair<double, std::vector<int>>> ts) {
    std::vector<Monomial> ms;
    for (auto& [c, e] : ts) ms.push_back({c, e});
    return Polynomial(nv, std::move(ms));
}

Polynomial xpow(int e) { return from_terms(1, {{1, {e}}}); }

SamplingConfig trial_cfg(uint64_t seed) {
    SamplingConfig cfg;
    cfg.seed = seed;
    cfg.samples_per_shell = 64;
    cfg.shell_count = 8;
    cfg.min_scale = 1e-3;
    return cfg;
}

}  // namespace

TEST_CASE("sample_generic") {
    TriangularLinearMap id = sample_generic(3, 3, 5);
    CHECK(id.alpha.empty());
    Mat m = id.matrix();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(m.at(i, j) == (i == j ? 1.0 : 0.0));

    TriangularLinearMap L = sample_generic(3, 1, 42);
    CHECK(L.alpha.size() == 2);
    Mat lm = L.matrix();
    CHECK(lm.at(0, 0) == 1.0);
    CHECK(lm.at(0, 1) == L.alpha[0]);
    CHECK(lm.at(0, 2) == L.alpha[1]);

    TriangularLinearMap L2 = sample_generic(3, 1, 42);
    CHECK(L.alpha == L2.alpha);  // deterministic per seed
    CHECK_THROWS_AS(sample_generic(2, 3, 1), input_error);
}

TEST_CASE("reduce_map and degree preservation") {
    PolyMap F(1, {xpow(3), xpow(2)});  // degrees sorted nonincreasing
    TriangularLinearMap L = sample_generic(2, 1, 7);
    PolyMap LF = reduce_map(F, L);
    CHECK(LF.arity() == 1);
    CHECK(LF.components[0].degree() == 3);

    DegreeCheck chk = degree_preservation_check(F, L);
    CHECK(chk.applicable);
    CHECK(chk.preserved);
    CHECK(chk.expected == std::vector<int>{3});
    CHECK(chk.actual == std::vector<int>{3});

    SUBCASE("cancellation flags a degree drop") {
        // F = (x^2 - 1, x^2) with alpha = -1: the quadratic terms cancel
        PolyMap G(1, {from_terms(1, {{1, {2}}, {-1, {0}}}), xpow(2)});
        TriangularLinearMap bad(2, 1, {-1.0});
        DegreeCheck dchk = degree_preservation_check(G, bad);
        CHECK(dchk.applicable);
        CHECK_FALSE(dchk.preserved);
        CHECK(dchk.actual[0] == 0);  // the difference is the constant -1
    }
    SUBCASE("unsorted degrees are not applicable") {
        PolyMap H(1, {xpow(2), xpow(3)});
        DegreeCheck dchk = degree_preservation_check(H, sample_generic(2, 1, 9));
        CHECK_FALSE(dchk.applicable);
    }
}

TEST_CASE("degree preservation over random sorted maps") {
    Rng rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        int m = 2 + static_cast<int>(rng.next_u64() % 3);
        int k = 1 + static_cast<int>(rng.next_u64() % m);
        int nv = 1 + static_cast<int>(rng.next_u64() % 2);
        std::vector<int> degs(m);
        for (int& d : degs) d = 1 + static_cast<int>(rng.next_u64() % 5);
        std::sort(degs.rbegin(), degs.rend());
        std::vector<Polynomial> comps;
        for (int d : degs) {
            // guaranteed top-degree term plus random lower-order noise
            std::vector<Monomial> ms;
            Monomial top;
            top.coef = rng.uniform(0.5, 2.0);
            top.exps.assign(nv, 0);
            top.exps[0] = d;
            ms.push_back(top);
            Monomial low;
            low.coef = rng.uniform(-1, 1);
            low.exps.assign(nv, 0);
            low.exps[nv - 1] = static_cast<int>(rng.next_u64() % d);
            ms.push_back(low);
            comps.emplace_back(nv, ms);
        }
        PolyMap F(nv, std::move(comps));
        TriangularLinearMap L = sample_generic(m, k, rng.next_u64());
        DegreeCheck chk = degree_preservation_check(F, L);
        CHECK(chk.applicable);
        CHECK(chk.preserved);
    }
}

TEST_CASE("zero preservation") {
    Locality local{Locality::Kind::LOCAL, Vec{0.0}, 0.5};

    SUBCASE("generic reduction of (x^2, x^3) passes") {
        PolyMap F(1, {xpow(2), xpow(3)});
        Mat L = sample_generic(2, 1, 3).matrix();
        auto rep = zero_preservation_check(F, L, SemialgebraicSet::full_space(1), local, 64, 5,
                                           1e-9);
        CHECK(rep.pass);
    }
    SUBCASE("coordinate projection (y2) also preserves zeros here") {
        PolyMap F(1, {xpow(2), xpow(3)});
        Mat L(1, 2);
        L.at(0, 1) = 1.0;
        auto rep = zero_preservation_check(F, L, SemialgebraicSet::full_space(1), local, 64, 5,
                                           1e-9);
        CHECK(rep.pass);
    }
    SUBCASE("projection of (x, 1-xy) onto the first coordinate fails locally") {
        PolyMap F(2, {Polynomial::variable(2, 0), from_terms(2, {{1, {0, 0}}, {-1, {1, 1}}})});
        Mat L(1, 2);
        L.at(0, 0) = 1.0;
        Locality at0{Locality::Kind::LOCAL, Vec{0.0, 0.0}, 0.5};
        auto rep = zero_preservation_check(F, L, SemialgebraicSet::full_space(2), at0, 96, 5,
                                           1e-9);
        CHECK_FALSE(rep.pass);
        REQUIRE(rep.witness.has_value());
        CHECK(rep.witness_f > std::sqrt(1e-9));
    }
    SUBCASE("the same projection fails the global compactness scan") {
        PolyMap F(2, {Polynomial::variable(2, 0), from_terms(2, {{1, {0, 0}}, {-1, {1, 1}}})});
        Mat L(1, 2);
        L.at(0, 0) = 1.0;
        Locality glob{Locality::Kind::GLOBAL, {}, 4.0};
        auto rep = zero_preservation_check(F, L, SemialgebraicSet::full_space(2), glob, 96, 5,
                                           1e-9);
        CHECK_FALSE(rep.pass);
    }
}

TEST_CASE("norm sandwich") {
    PolyMap F(1, {xpow(2), xpow(3)});

    SUBCASE("identity is exactly 1") {
        auto est = norm_sandwich_estimate(F, Mat::identity(2), SemialgebraicSet::full_space(1),
                                          Vec{0.0}, 0.01, 128, 5);
        CHECK(est.c1 == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(est.c2 == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("triangular map near the origin") {
        TriangularLinearMap L(2, 1, {0.7});
        auto est = norm_sandwich_estimate(F, L.matrix(), SemialgebraicSet::full_space(1),
                                          Vec{0.0}, 0.01, 128, 5);
        CHECK(est.c1 >= 0.9);
        CHECK(est.c2 <= 1.1);
    }
    SUBCASE("constructed degeneracy witnesses c1 = 0") {
        PolyMap G(1, {xpow(2), Polynomial(1)});  // second component is zero
        Mat L(1, 2);
        L.at(0, 1) = 1.0;
        auto est = norm_sandwich_estimate(G, L, SemialgebraicSet::full_space(1), Vec{0.0}, 0.01,
                                          64, 5);
        CHECK(est.c1 == 0.0);
    }
    SUBCASE("all-zero samples raise") {
        PolyMap Z(1, {Polynomial(1)});
        CHECK_THROWS_AS(norm_sandwich_estimate(Z, Mat::identity(1),
                                               SemialgebraicSet::full_space(1), Vec{0.0}, 0.01,
                                               16, 5),
                        infeasible_error);
    }
}

TEST_CASE("perturbation stability") {
    SemialgebraicSet X = SemialgebraicSet::full_space(1);
    PolyMap F(1, {xpow(2)});

    SUBCASE("higher-order perturbation keeps the exponent") {
        PolyMap G(1, {from_terms(1, {{1, {2}}, {1, {5}}})});
        auto rep = perturbation_stability_check(F, G, X, Vec{0.0}, trial_cfg(3));
        CHECK(rep.applicable);
        CHECK(rep.pass);
        CHECK(std::fabs(rep.exponent_f - 2.0) <= 0.1);
        CHECK(std::fabs(rep.exponent_g - 2.0) <= 0.1);
    }
    SUBCASE("scaling perturbation has constant ratio") {
        PolyMap G(1, {from_terms(1, {{1.001, {2}}})});
        auto rep = perturbation_stability_check(F, G, X, Vec{0.0}, trial_cfg(3));
        CHECK(rep.applicable);
        CHECK(rep.pass);
        CHECK(rep.ratio_min == doctest::Approx(1.001).epsilon(1e-6));
        CHECK(rep.ratio_max == doctest::Approx(1.001).epsilon(1e-6));
    }
    SUBCASE("low-order perturbation is diagnosed and skipped") {
        PolyMap G(1, {from_terms(1, {{1, {2}}, {1, {1}}})});
        auto rep = perturbation_stability_check(F, G, X, Vec{0.0}, trial_cfg(3));
        CHECK_FALSE(rep.applicable);
        CHECK(rep.order_estimate < 1.5);
        CHECK_FALSE(rep.note.empty());
    }
}

TEST_CASE("reduction experiment, local") {
    PolyMap F(1, {xpow(2), xpow(3)});
    SemialgebraicSet X = SemialgebraicSet::full_space(1);
    Locality local{Locality::Kind::LOCAL, Vec{0.0}, 0.5};
    ReductionReport rep = reduction_experiment(F, X, 1, 1, 3, local, trial_cfg(7));
    CHECK(std::fabs(rep.baseline - 2.0) <= 0.1);
    CHECK(rep.trials.size() == 3);
    CHECK(rep.all_inequalities_hold);
    CHECK(rep.equality_passes == 3);
    for (const TrialRecord& t : rep.trials) {
        CHECK(t.zero_preserved);
        CHECK(std::fabs(t.exponent - rep.baseline) <= rep.equality_tol);
        CHECK(t.sandwich_c1 > 0.5);
        CHECK(t.sandwich_c2 < 2.0);
    }

    SUBCASE("identity reduction reproduces the baseline exactly") {
        ReductionReport idrep =
            reduction_experiment(F, X, 1, 2, 1, local, trial_cfg(7));
        CHECK(idrep.trials[0].exponent == idrep.baseline);
    }
    SUBCASE("k below the dimension hint is refused") {
        PolyMap G(2, {Polynomial::variable(2, 0), from_terms(2, {{1, {0, 0}}, {-1, {1, 1}}})});
        Locality glob{Locality::Kind::GLOBAL, {}, 1.0};
        CHECK_THROWS_AS(
            reduction_experiment(G, SemialgebraicSet::full_space(2), 2, 1, 2, glob, trial_cfg(7)),
            input_error);
    }
    SUBCASE("k above the arity is refused") {
        CHECK_THROWS_AS(reduction_experiment(F, X, 1, 3, 2, local, trial_cfg(7)), input_error);
    }
}

TEST_CASE("reduction report is reproducible from its seeds") {
    PolyMap F(1, {xpow(2), xpow(3)});
    SemialgebraicSet X = SemialgebraicSet::full_space(1);
    Locality local{Locality::Kind::LOCAL, Vec{0.0}, 0.5};
    ReductionReport a = reduction_experiment(F, X, 1, 1, 2, local, trial_cfg(21));
    ReductionReport b = reduction_experiment(F, X, 1, 1, 2, local, trial_cfg(21));
    CHECK(to_json(a).dump() == to_json(b).dump());
}
