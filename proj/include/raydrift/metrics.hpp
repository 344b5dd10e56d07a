#ifndef RAYDRIFT_METRICS_HPP
#define RAYDRIFT_METRICS_HPP

#include <span>
#include <vector>

namespace raydrift {

/// The three pairwise distances for one trajectory step, all derived from the
/// same clipped inner product of the normalized vectors.
struct StepDistances {
    double d_e;   // Euclidean, raw units
    double d_c;   // cosine angle, [0, pi]
    double d_fs;  // Fubini-Study angle, [0, pi/2]
    double dot;   // clipped inner product, [-1, 1]
};

/// Clamps x to [-1, 1]. Dots of unit vectors can exceed 1 by ~1e-16.
double clip_unit(double x);

double euclidean_distance(std::span<const double> u, std::span<const double> v);

/// arccos of the clipped inner product of the normalized inputs, in [0, pi].
/// Invariant under positive rescaling of either argument.
double cosine_distance(std::span<const double> u, std::span<const double> v);

/// arccos of the clipped |inner product| of the normalized inputs, in
/// [0, pi/2]. Invariant under any nonzero rescaling, sign flips included.
double fubini_study_distance(std::span<const double> u,
                             std::span<const double> v);

/// All three distances plus the clipped dot, computed from one normalization
/// pass so the identity d_fs = arccos|dot| holds by construction.
StepDistances step_distances(std::span<const double> u,
                             std::span<const double> v);

/// Prefix sums of nonnegative step values. Throws NegativeIncrement on any
/// negative input.
std::vector<double> cumulative_drift(std::span<const double> step_values);

}  // namespace raydrift

#endif
