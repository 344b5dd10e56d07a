#include "raydrift/synth.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "raydrift/errors.hpp"

namespace raydrift {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double SplitMix64::next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double SplitMix64::next_gaussian() {
    double u1 = next_double();
    const double u2 = next_double();
    while (u1 <= 0.0) u1 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
}

namespace {

Vector random_unit_vector(SplitMix64& rng, std::size_t d) {
    while (true) {
        Vector v(d);
        for (double& x : v) x = rng.next_gaussian();
        if (norm2(v) > 1e-8) return normalize(v);
    }
}

// Unit vector orthogonal to r, from a fresh random draw via Gram-Schmidt.
Vector random_orthogonal(SplitMix64& rng, const Vector& r) {
    while (true) {
        Vector u = random_unit_vector(rng, r.size());
        const double proj = dot(u, r);
        for (std::size_t i = 0; i < u.size(); ++i) u[i] -= proj * r[i];
        if (norm2(u) > 1e-8) return normalize(u);
    }
}

}  // namespace

RepresentationTrajectory generate_smooth_trajectory(const SynthSpec& spec) {
    if (!(spec.step_angle >= 0.0) ||
        spec.step_angle >= std::numbers::pi / 2.0) {
        throw InvalidAngle("step angle must lie in [0, pi/2), got " +
                           std::to_string(spec.step_angle));
    }
    if (spec.length < 2) {
        throw InvalidSpec("synthetic trajectory length must be >= 2, got " +
                          std::to_string(spec.length));
    }
    if (spec.dimension < 2) {
        throw InvalidSpec("synthetic trajectory dimension must be >= 2");
    }

    SplitMix64 rng(spec.seed);
    RepresentationTrajectory traj;
    traj.spec = WindowSpec{spec.dimension, 1};
    traj.directions.reserve(spec.length);
    traj.window_starts.reserve(spec.length);

    Vector r = random_unit_vector(rng, spec.dimension);
    const double c = std::cos(spec.step_angle);
    const double s = std::sin(spec.step_angle);
    Vector prev_u;
    for (std::size_t k = 0; k < spec.length; ++k) {
        traj.directions.push_back(r);
        traj.window_starts.push_back(k);
        if (k + 1 == spec.length) break;
        Vector u = random_orthogonal(rng, r);
        // Keep the tangent continuous so the rotation never doubles back;
        // in D = 2 this accumulates the step angle monotonically.
        if (!prev_u.empty() && dot(u, prev_u) < 0.0)
            for (double& x : u) x = -x;
        prev_u = u;
        Vector next(r.size());
        for (std::size_t i = 0; i < r.size(); ++i)
            next[i] = c * r[i] + s * u[i];
        r = normalize(next);
    }
    return inject_flips(traj, spec.flip_indices);
}

RepresentationTrajectory inject_flips(
    const RepresentationTrajectory& traj,
    const std::vector<std::size_t>& flip_indices) {
    RepresentationTrajectory out = traj;
    for (std::size_t idx : flip_indices) {
        if (idx < 1 || idx > out.directions.size()) {
            throw IndexOutOfRange("flip index " + std::to_string(idx) +
                                  " outside 1.." +
                                  std::to_string(out.directions.size()));
        }
        for (double& x : out.directions[idx - 1]) x = -x;
    }
    return out;
}

}  // namespace raydrift
