#include "raydrift/trajectory.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "raydrift/errors.hpp"

namespace raydrift {

void validate_spec(std::size_t n, const WindowSpec& spec) {
    if (spec.window_length < 2) {
        throw InvalidSpec("window length must be >= 2, got " +
                          std::to_string(spec.window_length));
    }
    if (spec.window_length > n) {
        throw InvalidSpec("window length " +
                          std::to_string(spec.window_length) +
                          " exceeds sample count " + std::to_string(n));
    }
    if (spec.step < 1) {
        throw InvalidSpec("step size must be >= 1");
    }
}

std::size_t window_count(std::size_t n, const WindowSpec& spec) {
    return (n - spec.window_length) / spec.step + 1;
}

std::vector<std::size_t> build_windows(std::size_t n, const WindowSpec& spec) {
    validate_spec(n, spec);
    const std::size_t t = window_count(n, spec);
    std::vector<std::size_t> starts(t);
    for (std::size_t k = 0; k < t; ++k) starts[k] = k * spec.step;
    return starts;
}

FeatureMatrix extract_window(const FeatureMatrix& x, std::size_t start,
                             std::size_t window_length) {
    const std::size_t d = x.cols();
    std::vector<double> slice(window_length * d);
    for (std::size_t r = 0; r < window_length; ++r)
        for (std::size_t c = 0; c < d; ++c)
            slice[r * d + c] = x(start + r, c);
    return FeatureMatrix(window_length, d, std::move(slice));
}

RepresentationTrajectory build_trajectory(const FeatureMatrix& x,
                                          const WindowSpec& spec,
                                          double pc1_tol,
                                          std::size_t pc1_max_iters) {
    const auto starts = build_windows(x.rows(), spec);
    RepresentationTrajectory traj;
    traj.spec = spec;
    traj.window_starts = starts;
    traj.directions.reserve(starts.size());
    for (std::size_t start : starts) {
        const auto window = extract_window(x, start, spec.window_length);
        const auto centered = center_window(window, start);
        auto pc1 = extract_pc1(centered, pc1_tol, pc1_max_iters);
        traj.directions.push_back(std::move(pc1.direction));
    }
    return traj;
}

std::vector<StepRecord> compute_steps(const RepresentationTrajectory& traj) {
    const std::size_t t = traj.length();
    if (t < 2) {
        throw TrajectoryTooShort("need at least 2 directions, got " +
                                 std::to_string(t));
    }
    std::vector<StepRecord> steps;
    steps.reserve(t - 1);
    for (std::size_t k = 0; k + 1 < t; ++k) {
        const auto d = step_distances(traj.directions[k],
                                      traj.directions[k + 1]);
        steps.push_back(StepRecord{k + 1, d.dot, d, d.dot < 0.0});
    }
    return steps;
}

DriftReport drift_report(std::vector<StepRecord> steps, double epsilon) {
    if (!(epsilon > 0.0)) {
        throw InvalidSpec("epsilon must be > 0, got " +
                          std::to_string(epsilon));
    }

    std::vector<double> step_e, step_c, step_fs;
    step_e.reserve(steps.size());
    step_c.reserve(steps.size());
    step_fs.reserve(steps.size());
    for (const auto& s : steps) {
        step_e.push_back(s.distances.d_e);
        step_c.push_back(s.distances.d_c);
        step_fs.push_back(s.distances.d_fs);
    }

    DriftReport report;
    report.cum_e = cumulative_drift(step_e);
    report.cum_c = cumulative_drift(step_c);
    report.cum_fs = cumulative_drift(step_fs);
    report.epsilon = epsilon;

    // Gauge difference accumulated from per-step excess d_c - d_fs, which is
    // zero off flips and strictly positive on them; the running sum is
    // therefore nonnegative and nondecreasing at every index.
    report.gauge_diff.reserve(steps.size());
    double gauge_acc = 0.0;
    for (const auto& s : steps) {
        gauge_acc += s.distances.d_c - s.distances.d_fs;
        report.gauge_diff.push_back(gauge_acc);
        if (s.flip) ++report.flip_count;
    }

    report.log_ratio.reserve(steps.size());
    for (std::size_t i = 0; i < steps.size(); ++i) {
        report.log_ratio.push_back(std::log10(
            (report.cum_e[i] + epsilon) / (report.cum_fs[i] + epsilon)));
    }

    report.steps = std::move(steps);
    return report;
}

}  // namespace raydrift
