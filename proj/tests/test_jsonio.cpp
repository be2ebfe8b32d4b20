#include <doctest.h>

#include "lojex/jsonio.hpp"
#include "lojex/manifest.hpp"
#include "lojex/rng.hpp"

using namespace lojex;

namespace {

Polynomial from_terms(int nv, std::vector<std::pair<double, std::vector<int>>> ts) {
    std::vector<Monomial> ms;
    for (auto& [c, e] : ts) ms.push_back({c, e});
    return Polynomial(nv, std::move(ms));
}

Polynomial random_poly(Rng& rng) {
    int nv = 1 + static_cast<int>(rng.next_u64() % 3);
    int nt = 1 + static_cast<int>(rng.next_u64() % 6);
    std::vector<Monomial> ms;
    for (int i = 0; i < nt; ++i) {
        Monomial m;
        m.coef = rng.uniform(-10, 10);
        m.exps.assign(nv, 0);
        for (int v = 0; v < nv; ++v) m.exps[v] = static_cast<int>(rng.next_u64() % 5);
        ms.push_back(m);
    }
    return Polynomial(nv, std::move(ms));
}

}  // namespace

TEST_CASE("polynomial json round trip is bit stable") {
    Rng rng(303);
    for (int i = 0; i < 30; ++i) {
        Polynomial p = random_poly(rng);
        json j = to_json(p);
        Polynomial q = poly_from_json(j);
        CHECK(p == q);
        CHECK(j.dump() == to_json(q).dump());
        // a second decode-encode pass changes nothing
        CHECK(to_json(poly_from_json(json::parse(j.dump()))).dump() == j.dump());
    }
}

TEST_CASE("polynomial json matches the documented shape") {
    auto p = from_terms(2, {{1.5, {2, 0}}, {-2, {0, 1}}});
    json j = to_json(p);
    CHECK(j.at("vars") == 2);
    REQUIRE(j.at("terms").size() == 2);
    CHECK(j.at("terms")[0][0] == 1.5);
    CHECK(j.at("terms")[0][1] == json::array({2, 0}));
}

TEST_CASE("set and map round trips") {
    auto g = from_terms(2, {{1, {0, 0}}, {-1, {2, 0}}, {-1, {0, 2}}});
    auto h = Polynomial::variable(2, 1);
    SemialgebraicSet S(2, {BasicSet(2, {g}, {h}), BasicSet(2, {}, {h})});
    SemialgebraicSet S2 = set_from_json(to_json(S));
    CHECK(to_json(S2).dump() == to_json(S).dump());
    CHECK(S2.pieces.size() == 2);
    CHECK(S2.pieces[0].ineqs[0] == g);

    PolyMap F(2, {g, h});
    PolyMap F2 = map_from_json(to_json(F));
    CHECK(to_json(F2).dump() == to_json(F).dump());
}

TEST_CASE("bound report round trip keeps exact rationals") {
    BoundReport b = infinity_polynomial_map_bound(1, 0, 3, 3);
    CHECK(b.value_string() == "-9/2");
    BoundReport c = bound_report_from_json(to_json(b));
    CHECK(c.value == b.value);
    CHECK(c.formula_id == b.formula_id);
    CHECK(c.direction == b.direction);
    CHECK(c.denominator_degree == b.denominator_degree);

    BoundReport big = local_map_bound(5, 3, 3, 6, 6, false);
    CHECK(bound_report_from_json(to_json(big)).value == big.value);
}

TEST_CASE("estimate round trip") {
    ExponentEstimate e;
    e.value = -1.25;
    e.direction = EstimateKind::AT_INFINITY;
    e.shells = {{1.0, 0.5, 10}, {2.0, 0.25, 12}};
    e.fit_stderr = 0.01;
    e.admissible_constant = 0.4;
    e.warnings = {"note"};
    ExponentEstimate f = estimate_from_json(to_json(e));
    CHECK(to_json(f).dump() == to_json(e).dump());
}

TEST_CASE("csv output follows rfc 4180") {
    ExponentEstimate e;
    e.shells = {{0.5, 0.125, 9}};
    std::string csv = shells_to_csv(e);
    CHECK(csv == "scale,min_value,samples\r\n0.5,0.125,9\r\n");
}

TEST_CASE("digest and manifest payload") {
    CHECK(fnv1a64_hex("") == "cbf29ce484222325");
    CHECK(fnv1a64_hex("a") != fnv1a64_hex("b"));

    RunManifest m;
    m.command = "bound";
    m.config = {{"N", 2}, {"d", 2}};
    m.input_digests = {{"in.json", fnv1a64_hex("payload")}};
    m.seed = 7;
    m.wall_seconds = 1.5;  // must not appear in the payload
    json p = m.payload_json();
    CHECK(p.dump().find("wall") == std::string::npos);
    RunManifest m2 = m;
    m2.wall_seconds = 99.0;
    CHECK(m.wrap(json{{"x", 1}}).dump() == m2.wrap(json{{"x", 1}}).dump());
}
