#ifndef LOJEX_ESTIMATOR_HPP
#define LOJEX_ESTIMATOR_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lojex/bounds.hpp"
#include "lojex/distance.hpp"
#include "lojex/polynomial.hpp"
#include "lojex/semiset.hpp"

namespace lojex {

enum class EstimateKind { LOCAL, AT_INFINITY, SEPARATION_LOCAL, SEPARATION_GLOBAL };

const char* estimate_kind_name(EstimateKind k);

struct ShellRecord {
    double scale = 0.0;
    double min_value = 0.0;
    int sample_count = 0;
};

struct SamplingConfig {
    int samples_per_shell = 256;
    double shell_base = 2.0;
    int shell_count = 12;
    double min_scale = 1e-4;  // innermost shell edge (local); base radius R (infinity)
    uint64_t seed = 0;
    DistanceConfig distance = DistanceConfig::cheap();
    double fit_tol = 0.1;
    int refine_starts = 4;    // shell minima refined from this many best candidates
    int refine_iters = 140;
    int threads = 1;

    static SamplingConfig local_defaults() { return SamplingConfig{}; }
    static SamplingConfig infinity_defaults() {
        SamplingConfig c;
        c.min_scale = 1.0;
        return c;
    }

    void validate() const;
};

/// A fitted Lojasiewicz exponent: least-squares slope of log(shell minimum)
/// against log(shell scale), with the shell data and fit diagnostics.
struct ExponentEstimate {
    double value = 0.0;
    EstimateKind direction = EstimateKind::LOCAL;
    std::vector<ShellRecord> shells;
    double fit_stderr = 0.0;
    double admissible_constant = 0.0;  // largest C valid on all used shells
    std::vector<std::string> warnings;
    bool isolated_zero = false;  // the exponent-0 convention fired
};

/// Local exponent of F on X at a: shells on dist(x, Z), minima of |F|.
/// Z defaults to X cap {F = 0} when not supplied.
ExponentEstimate estimate_local_map_exponent(const PolyMap& F, const SemialgebraicSet& X,
                                             std::span<const double> a,
                                             const std::optional<SemialgebraicSet>& Z,
                                             const SamplingConfig& cfg);

/// Separation exponent of X and Y at a point of X cap Y: shells on
/// dist(x, X cap Y), minima of dist(x,X) + dist(x,Y).
ExponentEstimate estimate_separation_exponent(const SemialgebraicSet& X,
                                              const SemialgebraicSet& Y,
                                              std::span<const double> a,
                                              const SamplingConfig& cfg);

/// Exponent at infinity of F on X: shells on |x| growing outward, minima of |F|.
ExponentEstimate estimate_infinity_exponent(const PolyMap& F, const SemialgebraicSet& X,
                                            const SamplingConfig& cfg);

/// Empirical admissible constant for the global separation inequality
/// lhs >= C (dist(x, X cap Y) / (1 + |x|^d))^p over sampled shells.
struct GlobalSeparationReport {
    double constant = 0.0;        // exp(log10_constant * ln10); +inf on overflow
    double log10_constant = 0.0;
    Vec worst_point;
    double worst_lhs = 0.0;
    double worst_rhs_base = 0.0;  // dist/(1+|x|^d) at the worst point
    int samples_used = 0;
    bool intersection_empty = false;  // dist = 1 convention applied
    std::vector<std::string> warnings;
};

GlobalSeparationReport estimate_global_separation(const SemialgebraicSet& X,
                                                  const SemialgebraicSet& Y, long denom_degree,
                                                  double exponent, const SamplingConfig& cfg);

enum class Verdict { PASS, FAIL };

struct VerifyReport {
    Verdict verdict = Verdict::FAIL;
    double estimate = 0.0;
    double bound = 0.0;  // bound value as double (may be +-inf for huge bounds)
    double slack = 0.0;
    Direction direction = Direction::UPPER;
};

/// PASS iff the estimate respects the bound within fit_tol in the bound's direction.
VerifyReport verify_bound(const ExponentEstimate& est, const BoundReport& bound,
                          double fit_tol = 0.1);

}  // namespace lojex

#endif
