#ifndef LOJEX_SEMISET_HPP
#define LOJEX_SEMISET_HPP

#include <optional>
#include <span>
#include <vector>

#include "lojex/polynomial.hpp"

namespace lojex {

/// Basic closed semialgebraic set {g_1 >= 0, ..., g_r >= 0, h_1 = ... = h_l = 0}.
/// Empty constraint lists present all of R^N.
struct BasicSet {
    int num_vars = 0;
    std::vector<Polynomial> ineqs;  // g >= 0
    std::vector<Polynomial> eqs;    // h = 0

    BasicSet() = default;
    BasicSet(int nv, std::vector<Polynomial> gs, std::vector<Polynomial> hs);

    bool unconstrained() const { return ineqs.empty() && eqs.empty(); }
};

/// Finite union of basic closed sets, all in the same ambient space.
struct SemialgebraicSet {
    int num_vars = 0;
    std::vector<BasicSet> pieces;

    SemialgebraicSet() = default;
    SemialgebraicSet(int nv, std::vector<BasicSet> ps);

    static SemialgebraicSet full_space(int num_vars);
    static SemialgebraicSet basic(BasicSet piece);
};

/// Presentation complexity parameters read off a concrete presentation.
/// These are upper bounds for the minimal invariants over all presentations;
/// every bound formula is monotone nondecreasing in them, so the bounds stay
/// valid. dim_hint is user-supplied (real dimension is not computed).
struct PresentationComplexity {
    int ambient_dim = 0;
    int r = 0;
    int kappa = 0;
    std::optional<int> dim_hint;
};

PresentationComplexity complexity(const SemialgebraicSet& S);

/// Broecker's cap r(X) <= N(N+1)/2; presentations above it are provably non-minimal.
long brocker_cap(int N);

bool membership(const BasicSet& piece, std::span<const double> x, double tol);
bool membership(const SemialgebraicSet& S, std::span<const double> x, double tol);

/// Constraint violation sum( max(0,-g)^2 ) + sum( h^2 ) at x.
double violation(const BasicSet& piece, std::span<const double> x);

/// Presentation of graph F over X in R^{N+m}: each piece gains equations y_j - f_j(x).
SemialgebraicSet graph_presentation(const PolyMap& F, const SemialgebraicSet& X);

/// X cap Y as the pairwise conjunction of piece presentations.
SemialgebraicSet intersect(const SemialgebraicSet& X, const SemialgebraicSet& Y);

/// X cap {f_1 = ... = f_m = 0}; the default zero set used by the estimator.
SemialgebraicSet zero_set_on(const PolyMap& F, const SemialgebraicSet& X);

}  // namespace lojex

#endif
