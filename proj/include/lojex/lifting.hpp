#ifndef LOJEX_LIFTING_HPP
#define LOJEX_LIFTING_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "lojex/distance.hpp"
#include "lojex/semiset.hpp"

namespace lojex {

/// Contiguous block of slack coordinates within y_1..y_{r_total} (0-based).
struct SlackRange {
    int offset = 0;
    int count = 0;
};

/// Algebraic set in R^{N + r_total} whose projection onto the x-coordinates
/// is the source basic set: every inequality g >= 0 becomes g - y_j^2 = 0 on
/// this lift's own slack block, equations carry over unchanged.
struct AlgebraicLift {
    BasicSet source;                   // in R^N
    int ambient_vars = 0;              // N + r_total
    SlackRange slack_range;
    std::vector<Polynomial> equations; // in ambient_vars variables

    int source_vars() const { return source.num_vars; }
    int total_slacks() const { return ambient_vars - source.num_vars; }

    /// The lift as a plain equations-only set (for distance queries).
    SemialgebraicSet as_set() const;

    /// Max degree over the lifted equations; 0 when there are none.
    int degree_cap() const;
};

/// Slack-variable algebraization of a pair of basic sets over a shared slack
/// space: A uses y_1..y_{r1}, B uses y_{r1+1}..y_{r1+r2}.
std::pair<AlgebraicLift, AlgebraicLift> algebraize_pair(const BasicSet& X, const BasicSet& Y);

/// Slack vector (length r_total) with y_j = sqrt(g_j(x)) on this lift's range,
/// zero elsewhere. Requires x in the source set within tol.
Vec lift_point(const AlgebraicLift& L, std::span<const double> x, double tol = 1e-9);

/// Common slack vector for x1 in X and x2 in Y, assembled on disjoint ranges:
/// (x1, y) lies on A and (x2, y) lies on B.
Vec joint_lift(const AlgebraicLift& A, const AlgebraicLift& B, std::span<const double> x1,
               std::span<const double> x2, double tol = 1e-9);

/// One randomized check of dist(x, X) >= dist((x,y), A) with y the lift of a
/// nearest point of X.
struct TransferReport {
    int trials = 0;
    double min_margin = 0.0;
    std::vector<double> margins;  // dist(x,X) - dist((x,y),A), per trial
    double dist_x = 0.0;          // last trial's dist(x, X)
    double dist_lifted = 0.0;     // last trial's dist((x,y), A)
};

TransferReport distance_transfer_check(const AlgebraicLift& A, std::span<const double> x,
                                       int trials, uint64_t seed, const DistanceConfig& cfg);

}  // namespace lojex

#endif
