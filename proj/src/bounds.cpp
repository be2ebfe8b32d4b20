#include "lojex/bounds.hpp"

#include <algorithm>

#include "lojex/errors.hpp"

namespace lojex {

namespace {

mpz_class zpow(const mpz_class& base, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

void require(bool cond, const char* msg) {
    if (!cond) throw input_error(msg);
}

std::string str(long v) { return std::to_string(v); }

}  // namespace

const char* formula_name(FormulaId id) {
    switch (id) {
        case FormulaId::LOCAL_SEP: return "local-sep";
        case FormulaId::LOCAL_SEP_ISOLATED: return "isolated-sep";
        case FormulaId::LOCAL_MAP: return "local-map";
        case FormulaId::LOCAL_MAP_ISOLATED: return "local-map-isolated";
        case FormulaId::REGULAR_LOCAL_REAL: return "real-regular";
        case FormulaId::REGULAR_LOCAL_COMPLEX: return "complex-regular";
        case FormulaId::GLOBAL_SEP: return "global-sep";
        case FormulaId::INFTY_SEMIALG_MAP: return "infty-semialg";
        case FormulaId::INFTY_POLY_MAP: return "infty-poly";
        case FormulaId::INFTY_REGULAR: return "infty-regular";
        case FormulaId::KS_LOCAL: return "ks-local";
        case FormulaId::KS_GLOBAL: return "ks-global";
        case FormulaId::KS_INFTY: return "ks-infty";
        case FormulaId::B_PRODUCT: return "b-product";
        case FormulaId::REF_KOLLAR: return "kollar";
        case FormulaId::REF_CKT: return "ckt";
        case FormulaId::REF_JELONEK: return "jelonek";
        case FormulaId::REF_CHADZYNSKI: return "chadzynski";
    }
    return "?";
}

std::optional<FormulaId> formula_from_name(const std::string& name) {
    static const FormulaId all[] = {
        FormulaId::LOCAL_SEP,         FormulaId::LOCAL_SEP_ISOLATED,
        FormulaId::LOCAL_MAP,         FormulaId::LOCAL_MAP_ISOLATED,
        FormulaId::REGULAR_LOCAL_REAL, FormulaId::REGULAR_LOCAL_COMPLEX,
        FormulaId::GLOBAL_SEP,        FormulaId::INFTY_SEMIALG_MAP,
        FormulaId::INFTY_POLY_MAP,    FormulaId::INFTY_REGULAR,
        FormulaId::KS_LOCAL,          FormulaId::KS_GLOBAL,
        FormulaId::KS_INFTY,          FormulaId::B_PRODUCT,
        FormulaId::REF_KOLLAR,        FormulaId::REF_CKT,
        FormulaId::REF_JELONEK,       FormulaId::REF_CHADZYNSKI,
    };
    for (FormulaId id : all)
        if (name == formula_name(id)) return id;
    return std::nullopt;
}

std::string BoundReport::value_string() const {
    return value.get_str();
}

mpz_class local_separation_bound(long N, long r, long d) {
    require(N >= 1, "local_separation_bound: N must be >= 1");
    require(r >= 0, "local_separation_bound: r must be >= 0");
    require(d >= 1, "local_separation_bound: d must be >= 1 (degree 0 is undefined here)");
    return mpz_class(d) * zpow(mpz_class(6 * d - 3), static_cast<unsigned long>(N + r - 1));
}

mpz_class isolated_separation_bound(long N, long r, long d) {
    require(N >= 1, "isolated_separation_bound: N must be >= 1");
    require(r >= 0, "isolated_separation_bound: r must be >= 0");
    require(d >= 1, "isolated_separation_bound: d must be >= 1");
    mpz_class p = zpow(mpz_class(2 * d - 1), static_cast<unsigned long>(N + r)) + 1;
    // (2d-1)^{N+r} is odd, so p is even
    require(mpz_even_p(p.get_mpz_t()) != 0, "isolated_separation_bound: parity violated");
    return p / 2;
}

BoundReport local_map_bound(long N, long r_X, long r_graph, long kappa_X, long kappa_graph,
                            bool isolated) {
    require(r_X >= 0 && r_graph >= 0, "local_map_bound: inequality counts must be >= 0");
    long d = std::max(kappa_X, kappa_graph);
    require(d >= 1, "local_map_bound: max degree must be >= 1");
    long r = r_X + r_graph;
    BoundReport rep;
    rep.formula_id = isolated ? FormulaId::LOCAL_MAP_ISOLATED : FormulaId::LOCAL_MAP;
    rep.inputs = {{"N", str(N)},        {"r_X", str(r_X)},          {"r_graph", str(r_graph)},
                  {"kappa_X", str(kappa_X)}, {"kappa_graph", str(kappa_graph)}, {"r", str(r)},
                  {"d", str(d)}};
    rep.value = isolated ? mpq_class(isolated_separation_bound(N, r, d))
                         : mpq_class(local_separation_bound(N, r, d));
    rep.direction = Direction::UPPER;
    return rep;
}

BoundReport regular_local_bound(long N, long d, Field field) {
    require(N >= 1, "regular_local_bound: N must be >= 1");
    require(d >= 1, "regular_local_bound: d must be >= 1");
    BoundReport rep;
    rep.inputs = {{"N", str(N)}, {"d", str(d)}};
    rep.direction = Direction::UPPER;
    if (field == Field::REAL) {
        rep.formula_id = FormulaId::REGULAR_LOCAL_REAL;
        rep.value = mpq_class(local_separation_bound(N, 0, d));
    } else {
        rep.formula_id = FormulaId::REGULAR_LOCAL_COMPLEX;
        rep.value = mpq_class(zpow(mpz_class(d), static_cast<unsigned long>(N)));
    }
    return rep;
}

BoundReport global_separation_bound(long N, long r, long d) {
    BoundReport rep;
    rep.formula_id = FormulaId::GLOBAL_SEP;
    rep.value = mpq_class(local_separation_bound(N, r, d));
    rep.inputs = {{"N", str(N)}, {"r", str(r)}, {"d", str(d)}};
    rep.direction = Direction::UPPER;
    rep.denominator_degree = d;
    return rep;
}

BoundReport infinity_semialgebraic_map_bound(long N, long r, long d) {
    require(d >= 2, "infinity_semialgebraic_map_bound: d must be >= 2 (d = max{2, kappa})");
    BoundReport rep;
    rep.formula_id = FormulaId::INFTY_SEMIALG_MAP;
    rep.value = mpq_class(mpz_class(1 - d) * local_separation_bound(N, r, d));
    rep.inputs = {{"N", str(N)}, {"r", str(r)}, {"d", str(d)}};
    rep.direction = Direction::LOWER;
    rep.denominator_degree = d;
    return rep;
}

BoundReport infinity_polynomial_map_bound(long N, long r, long d, long D) {
    require(D >= 2, "infinity_polynomial_map_bound: D must be >= 2 (D = max{2, kappa_X})");
    require(d >= D, "infinity_polynomial_map_bound: d must be >= D (d = max{deg F, D})");
    BoundReport rep;
    rep.formula_id = FormulaId::INFTY_POLY_MAP;
    rep.value = mpq_class(-mpz_class(D) * local_separation_bound(N, r, d)) / 2;
    rep.value.canonicalize();
    rep.inputs = {{"N", str(N)}, {"r", str(r)}, {"d", str(d)}, {"D", str(D)}};
    rep.direction = Direction::LOWER;
    rep.denominator_degree = D;
    return rep;
}

BoundReport infinity_regular_bound(long N, long d) {
    require(N >= 1, "infinity_regular_bound: N must be >= 1");
    require(d >= 1, "infinity_regular_bound: d must be >= 1");
    BoundReport rep;
    rep.formula_id = FormulaId::INFTY_REGULAR;
    rep.value = mpq_class(-local_separation_bound(N, 0, d));
    rep.inputs = {{"N", str(N)}, {"d", str(d)}};
    rep.direction = Direction::LOWER;
    return rep;
}

mpz_class b_product(const std::vector<long>& degrees, long k) {
    require(!degrees.empty(), "b_product: degree list must be nonempty");
    require(k >= 1, "b_product: k must be >= 1");
    for (long d : degrees) require(d >= 1, "b_product: degrees must be positive");
    for (size_t i = 1; i < degrees.size(); ++i)
        require(degrees[i - 1] >= degrees[i],
                "b_product: degrees must be nonincreasing (d_1 >= ... >= d_m)");
    const long m = static_cast<long>(degrees.size());
    mpz_class p = 1;
    if (m <= k) {
        for (long d : degrees) p *= d;
    } else {
        for (long i = 0; i < k - 1; ++i) p *= degrees[i];
        p *= degrees.back();
    }
    return p;
}

BoundReport reference_complex_bounds(RefKind kind, const RefInputs& in) {
    require(!in.degrees.empty(), "reference bound: degree list required");
    for (size_t i = 1; i < in.degrees.size(); ++i)
        require(in.degrees[i - 1] >= in.degrees[i], "reference bound: degrees must be nonincreasing");
    const long m = static_cast<long>(in.degrees.size());
    const long dm = in.degrees.back();
    BoundReport rep;
    rep.direction = Direction::LOWER;
    rep.reference_only = true;
    std::string degs;
    for (size_t i = 0; i < in.degrees.size(); ++i)
        degs += (i ? "," : "") + str(in.degrees[i]);
    rep.inputs["degrees"] = degs;
    switch (kind) {
        case RefKind::KOLLAR: {
            require(in.N >= 1, "Kollar bound requires the ambient dimension N");
            rep.formula_id = FormulaId::REF_KOLLAR;
            rep.value = mpq_class(mpz_class(dm) - b_product(in.degrees, in.N));
            rep.inputs["N"] = str(in.N);
            break;
        }
        case RefKind::CKT: {
            require(in.N >= 1, "CKT bound requires the ambient dimension N");
            require(in.mult_sum.has_value(),
                    "CKT bound requires the intersection multiplicity sum (never computed here)");
            rep.formula_id = FormulaId::REF_CKT;
            rep.value = mpq_class(mpz_class(dm) - b_product(in.degrees, in.N) + *in.mult_sum);
            rep.inputs["N"] = str(in.N);
            rep.inputs["mult_sum"] = str(*in.mult_sum);
            break;
        }
        case RefKind::JELONEK: {
            require(in.k >= 1, "Jelonek bound requires the variety dimension k");
            require(in.variety_degree.has_value(), "Jelonek bound requires the variety degree D");
            require(in.mult_sum.has_value(),
                    "Jelonek bound requires nu = #(F^{-1}(0) cap V) (never computed here)");
            rep.formula_id = FormulaId::REF_JELONEK;
            rep.value = mpq_class(mpz_class(dm) -
                                  mpz_class(*in.variety_degree) * b_product(in.degrees, in.k) +
                                  *in.mult_sum);
            rep.inputs["k"] = str(in.k);
            rep.inputs["D"] = str(*in.variety_degree);
            rep.inputs["nu"] = str(*in.mult_sum);
            break;
        }
        case RefKind::CHADZYNSKI: {
            require(m == 2, "Chadzynski bound requires N = m = 2");
            require(in.mult_sum.has_value(),
                    "Chadzynski bound requires the multiplicity sum (never computed here)");
            rep.formula_id = FormulaId::REF_CHADZYNSKI;
            rep.value = mpq_class(mpz_class(in.degrees[1]) -
                                  mpz_class(in.degrees[0]) * in.degrees[1] + *in.mult_sum);
            rep.inputs["mult_sum"] = str(*in.mult_sum);
            break;
        }
    }
    return rep;
}

BoundReport ks_bounds(long N, long d, KsKind kind) {
    require(N >= 1, "ks_bounds: N must be >= 1");
    require(d >= 1, "ks_bounds: d must be >= 1");
    BoundReport rep;
    rep.inputs = {{"N", str(N)}, {"d", str(d)}};
    mpz_class core = local_separation_bound(N, 0, d);
    switch (kind) {
        case KsKind::LOCAL:
            rep.formula_id = FormulaId::KS_LOCAL;
            rep.value = mpq_class(core);
            rep.direction = Direction::UPPER;
            break;
        case KsKind::GLOBAL:
            rep.formula_id = FormulaId::KS_GLOBAL;
            rep.value = mpq_class(core);
            rep.direction = Direction::UPPER;
            rep.denominator_degree = 2;
            break;
        case KsKind::INFTY_COMPACT:
            rep.formula_id = FormulaId::KS_INFTY;
            rep.value = mpq_class(-core);
            rep.direction = Direction::LOWER;
            break;
    }
    return rep;
}

}  // namespace lojex
