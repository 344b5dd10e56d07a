#ifndef RAYDRIFT_SYNTH_HPP
#define RAYDRIFT_SYNTH_HPP

#include <cstdint>
#include <vector>

#include "raydrift/trajectory.hpp"

namespace raydrift {

/// Deterministic 64-bit generator (splitmix64 mixing recipe), embedded so
/// synthetic trajectories reproduce bit-identically across platforms.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();

    /// Uniform double in [0, 1) from the top 53 bits.
    double next_double();

    /// Standard normal via Box-Muller.
    double next_gaussian();

private:
    std::uint64_t state_;
};

struct SynthSpec {
    std::size_t dimension;
    std::size_t length;                      // T
    double step_angle;                       // radians, [0, pi/2)
    std::vector<std::size_t> flip_indices;   // 1-based positions to negate
    std::uint64_t seed;
};

/// Random unit start direction, then each successor rotated by exactly
/// step_angle within the plane spanned by the current direction and a seeded
/// random orthogonal one. flip_indices from the spec are applied afterwards.
RepresentationTrajectory generate_smooth_trajectory(const SynthSpec& spec);

/// Negates the listed 1-based positions; all others unchanged.
RepresentationTrajectory inject_flips(
    const RepresentationTrajectory& traj,
    const std::vector<std::size_t>& flip_indices);

}  // namespace raydrift

#endif
