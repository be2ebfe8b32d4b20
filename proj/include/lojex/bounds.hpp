#ifndef LOJEX_BOUNDS_HPP
#define LOJEX_BOUNDS_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lojex {

// Exponent bound formulas. All arithmetic here is exact (GMP integers and
// rationals); this module never touches floating point or polynomials.

enum class FormulaId {
    LOCAL_SEP,
    LOCAL_SEP_ISOLATED,
    LOCAL_MAP,
    LOCAL_MAP_ISOLATED,
    REGULAR_LOCAL_REAL,
    REGULAR_LOCAL_COMPLEX,
    GLOBAL_SEP,
    INFTY_SEMIALG_MAP,
    INFTY_POLY_MAP,
    INFTY_REGULAR,
    KS_LOCAL,
    KS_GLOBAL,
    KS_INFTY,
    B_PRODUCT,
    REF_KOLLAR,
    REF_CKT,
    REF_JELONEK,
    REF_CHADZYNSKI,
};

enum class Direction { UPPER, LOWER };

const char* formula_name(FormulaId id);
std::optional<FormulaId> formula_from_name(const std::string& name);

struct BoundReport {
    FormulaId formula_id;
    std::map<std::string, std::string> inputs;
    mpq_class value;
    Direction direction;
    long denominator_degree = 0;  // exponent of |x| in the (1+|x|^.) factor
    bool reference_only = false;  // complex-case hypotheses not checked here

    std::string value_string() const;
};

/// d(6d-3)^{N+r-1}
mpz_class local_separation_bound(long N, long r, long d);

/// ((2d-1)^{N+r}+1)/2 -- always an integer, asserted
mpz_class isolated_separation_bound(long N, long r, long d);

/// Exponent bound for a semialgebraic map on a closed set, with
/// r = r_X + r_graph and d = max(kappa_X, kappa_graph).
BoundReport local_map_bound(long N, long r_X, long r_graph, long kappa_X, long kappa_graph,
                            bool isolated);

enum class Field { REAL, COMPLEX };

/// Regular map on an algebraic set: d(6d-3)^{N-1} over R, d^N over C.
BoundReport regular_local_bound(long N, long d, Field field);

/// Global separation: exponent d(6d-3)^{N+r-1} with denominator degree d.
BoundReport global_separation_bound(long N, long r, long d);

/// At-infinity bound for semialgebraic maps: (1-d) d (6d-3)^{N+r-1}, d >= 2.
BoundReport infinity_semialgebraic_map_bound(long N, long r, long d);

/// At-infinity bound for polynomial maps: -(D/2) d (6d-3)^{N+r-1},
/// D = max(2, kappa_X), d = max(deg F, D), r = 2 r(X) supplied by caller.
BoundReport infinity_polynomial_map_bound(long N, long r, long d, long D);

/// Regular map at infinity: -d(6d-3)^{N-1}.
BoundReport infinity_regular_bound(long N, long d);

/// B(d_1,...,d_m;k) for a nonincreasing degree list.
mpz_class b_product(const std::vector<long>& degrees, long k);

enum class RefKind { KOLLAR, CKT, JELONEK, CHADZYNSKI };

struct RefInputs {
    std::vector<long> degrees;             // nonincreasing
    long N = 0;                            // ambient dimension (Kollar / CKT)
    long k = 0;                            // variety dimension (Jelonek)
    std::optional<long> variety_degree;    // D (Jelonek)
    std::optional<long> mult_sum;          // sum of multiplicities / nu
};

/// Complex-case reference bounds; hypotheses are the caller's responsibility.
BoundReport reference_complex_bounds(RefKind kind, const RefInputs& in);

enum class KsKind { LOCAL, GLOBAL, INFTY_COMPACT };

/// The d(6d-3)^{N-1} family for polynomial maps on R^N.
BoundReport ks_bounds(long N, long d, KsKind kind);

}  // namespace lojex

#endif
