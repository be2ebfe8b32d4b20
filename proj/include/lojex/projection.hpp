#ifndef LOJEX_PROJECTION_HPP
#define LOJEX_PROJECTION_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lojex/estimator.hpp"
#include "lojex/polynomial.hpp"
#include "lojex/semiset.hpp"

namespace lojex {

/// Triangular linear map R^m -> R^k: L_i(y) = y_i + sum_{j>k} alpha_{i,j} y_j.
struct TriangularLinearMap {
    int m = 0;
    int k = 0;
    std::vector<double> alpha;  // k x (m-k), row-major

    TriangularLinearMap() = default;
    TriangularLinearMap(int m, int k, std::vector<double> alpha);

    double alpha_at(int i, int j) const { return alpha[static_cast<size_t>(i) * (m - k) + j]; }

    /// Materialized k x m matrix [I_k | alpha].
    Mat matrix() const;
};

/// Triangular map with alpha drawn i.i.d. standard normal from the seed.
TriangularLinearMap sample_generic(int m, int k, uint64_t seed);

PolyMap reduce_map(const PolyMap& F, const TriangularLinearMap& L);

/// Component-wise comparison of deg(L_j o F) against deg f_j for j <= k.
/// Meaningful when F's degrees are nonincreasing and positive; `applicable`
/// is false otherwise.
struct DegreeCheck {
    bool applicable = false;
    bool preserved = false;
    std::vector<int> expected;  // deg f_j, -1 for the zero polynomial
    std::vector<int> actual;    // deg L_j o F
};
DegreeCheck degree_preservation_check(const PolyMap& F, const TriangularLinearMap& L);

struct Locality {
    enum class Kind { LOCAL, GLOBAL } kind = Kind::LOCAL;
    Vec center;           // LOCAL only
    double radius = 1.0;  // LOCAL: ball radius; GLOBAL: inner radius of outer scans
    int levels = 6;       // GLOBAL: number of doubling annuli scanned
};

/// Statistical search for zero-set mismatch witnesses: points with
/// |L(F(x))| <= tol but |F(x)| > sqrt(tol). PASS means none found at the
/// configured density (evidence, not proof).
struct ZeroPreservationReport {
    bool pass = true;
    std::optional<Vec> witness;
    double witness_lf = 0.0;
    double witness_f = 0.0;
    int samples = 0;
    // GLOBAL scans: largest radius at which an extra zero of L o F was seen.
    // Bounded extra zeros do not break compactness; zeros in the outermost
    // annuli do (they look like an escape to infinity).
    double max_zero_radius = 0.0;
};
ZeroPreservationReport zero_preservation_check(const PolyMap& F, const Mat& L,
                                               const SemialgebraicSet& X, const Locality& loc,
                                               int samples, uint64_t seed, double tol);

/// Empirical constants of C1 |F(x)| <= |L(F(x))| <= C2 |F(x)| near a.
struct SandwichEstimate {
    double c1 = 0.0;
    double c2 = 0.0;
    int used = 0;
};
SandwichEstimate norm_sandwich_estimate(const PolyMap& F, const Mat& L,
                                        const SemialgebraicSet& X, std::span<const double> a,
                                        double radius, int samples, uint64_t seed);

/// Checks that a perturbation G of F with ord(F - G) above the exponent of F
/// keeps the exponent: two-sided ratio bounds on shrinking shells plus
/// agreement of the fitted exponents.
struct PerturbationReport {
    bool applicable = false;  // order precondition held numerically
    double order_estimate = 0.0;
    double exponent_f = 0.0;
    double exponent_g = 0.0;
    double ratio_min = 0.0;
    double ratio_max = 0.0;
    bool pass = false;
    std::string note;
};
PerturbationReport perturbation_stability_check(const PolyMap& F, const PolyMap& G,
                                                const SemialgebraicSet& X,
                                                std::span<const double> a,
                                                const SamplingConfig& cfg);

struct TrialRecord {
    uint64_t alpha_seed = 0;
    double exponent = 0.0;
    double exponent_stderr = 0.0;
    bool zero_preserved = false;
    std::optional<bool> degree_preserved;  // set when F's degrees are sorted
    double sandwich_c1 = 0.0;
    double sandwich_c2 = 0.0;
    bool inequality_ok = false;  // one-sided reduction inequality
    bool equality_ok = false;    // generic equality within tolerance
};

struct ReductionReport {
    std::string map_desc;
    int k = 0;
    Locality locality;
    double baseline = 0.0;
    double baseline_stderr = 0.0;
    std::vector<TrialRecord> trials;
    double equality_tol = 0.0;
    bool all_inequalities_hold = false;
    int equality_passes = 0;
};

/// Baseline exponent of F plus `trials` generic reductions L o F, checking
/// the one-sided inequality on every trial and equality for generic trials.
/// dim_hint gates k (the theorems need dim X <= k <= m).
ReductionReport reduction_experiment(const PolyMap& F, const SemialgebraicSet& X, int dim_hint,
                                     int k, int trials, const Locality& loc,
                                     const SamplingConfig& cfg);

}  // namespace lojex

#endif
