#ifndef RAYDRIFT_TRAJECTORY_HPP
#define RAYDRIFT_TRAJECTORY_HPP

#include <cstddef>
#include <vector>

#include "raydrift/linalg.hpp"
#include "raydrift/metrics.hpp"

namespace raydrift {

/// Sliding-window parameters: window length W and step size s.
struct WindowSpec {
    std::size_t window_length;
    std::size_t step;
};

/// Number of windows T = floor((N - W)/s) + 1.
std::size_t window_count(std::size_t n, const WindowSpec& spec);

/// Throws InvalidSpec when W > N, W < 2 or s < 1.
void validate_spec(std::size_t n, const WindowSpec& spec);

/// Ordered sequence of unit PC1 directions, one per window. Signs are the raw
/// window-local output of extract_pc1; no alignment across windows.
struct RepresentationTrajectory {
    std::vector<Vector> directions;
    std::vector<std::size_t> window_starts;
    WindowSpec spec{0, 0};

    std::size_t length() const noexcept { return directions.size(); }
};

/// One consecutive pair along the trajectory. `index` is 1-based (step k
/// between r_k and r_{k+1}); flip is strictly dot < 0.
struct StepRecord {
    std::size_t index;
    double dot;
    StepDistances distances;
    bool flip;
};

/// Full drift decomposition. All series run over steps 1..T-1.
struct DriftReport {
    std::vector<StepRecord> steps;
    std::vector<double> cum_e;
    std::vector<double> cum_c;
    std::vector<double> cum_fs;
    std::vector<double> gauge_diff;  // cum_c - cum_fs, accumulated per step
    std::vector<double> log_ratio;   // log10((cum_e + eps)/(cum_fs + eps))
    double epsilon = 0.0;
    std::size_t flip_count = 0;
};

/// Window start offsets 0, s, 2s, ...; trailing rows that do not fill a
/// window are dropped.
std::vector<std::size_t> build_windows(std::size_t n, const WindowSpec& spec);

/// Copies the W x D slice starting at `start`.
FeatureMatrix extract_window(const FeatureMatrix& x, std::size_t start,
                             std::size_t window_length);

/// Centers each window and extracts its PC1. ZeroVarianceWindow and
/// NoConvergence propagate with the offending window start in the message.
RepresentationTrajectory build_trajectory(
    const FeatureMatrix& x, const WindowSpec& spec,
    double pc1_tol = kPc1DefaultTol,
    std::size_t pc1_max_iters = kPc1DefaultMaxIters);

/// Consecutive-pair records; requires T >= 2.
std::vector<StepRecord> compute_steps(const RepresentationTrajectory& traj);

inline constexpr double kDefaultEpsilon = 1e-12;

/// Accumulates the three drift series, the gauge difference and the log
/// ratio. Requires epsilon > 0.
DriftReport drift_report(std::vector<StepRecord> steps,
                         double epsilon = kDefaultEpsilon);

}  // namespace raydrift

#endif
