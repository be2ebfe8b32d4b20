#ifndef LOJEX_DISTANCE_HPP
#define LOJEX_DISTANCE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "lojex/semiset.hpp"

namespace lojex {

struct DistanceConfig {
    int starts = 32;             // multi-start budget per piece
    double restore_tol = 1e-9;   // feasibility target per constraint
    double penalty_max = 1e7;    // schedule runs 10, 1e3, 1e5, ... up to this
    int descent_iters = 120;     // per penalty stage
    int polish_iters = 160;      // tangential polish steps
    double box_scale = 4.0;      // random-start box half-width factor
    uint64_t seed = 0;
    int threads = 1;

    // lighter preset for inner-loop use (shell rejection, refinement)
    static DistanceConfig cheap(uint64_t seed = 0) {
        DistanceConfig c;
        c.starts = 4;
        c.descent_iters = 40;
        c.polish_iters = 60;
        c.seed = seed;
        return c;
    }
};

struct DistanceResult {
    double value = 0.0;   // |x - witness|, an upper bound on the true distance
    Vec witness;          // feasible point of S realizing the value
    double residual = 0.0; // constraint violation at the witness
};

/// Approximate dist(x, S) as the best feasible point found by multi-start
/// penalty descent plus box sampling, each followed by Gauss-Newton
/// constraint restoration and a tangential polish. Always an upper bound.
/// Throws infeasible_error when no feasible point is found at all.
DistanceResult approx_distance(const SemialgebraicSet& S, std::span<const double> x,
                               const DistanceConfig& cfg,
                               std::span<const Vec> warm_starts = {});

/// Up to `count` points of S within `radius` of `center`; ball seeds pushed
/// onto S by constraint restoration. Deterministic per seed. Sets *partial
/// when fewer than `count` points were found.
std::vector<Vec> sample_near(const SemialgebraicSet& S, std::span<const double> center,
                             double radius, int count, uint64_t seed,
                             const DistanceConfig& cfg, bool* partial = nullptr);

/// Gauss-Newton restoration of x onto the piece (eqs to zero, violated ineqs
/// to the boundary). Returns true when every constraint meets restore_tol.
bool restore_to_piece(const BasicSet& piece, Vec& x, const DistanceConfig& cfg);

}  // namespace lojex

#endif
