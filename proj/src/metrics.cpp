#include "raydrift/metrics.hpp"

#include <cmath>
#include <string>

#include "raydrift/errors.hpp"
#include "raydrift/linalg.hpp"

namespace raydrift {

double clip_unit(double x) {
    if (x > 1.0) return 1.0;
    if (x < -1.0) return -1.0;
    return x;
}

double euclidean_distance(std::span<const double> u,
                          std::span<const double> v) {
    if (u.size() != v.size()) {
        throw DimensionMismatch("euclidean_distance: " +
                                std::to_string(u.size()) + " vs " +
                                std::to_string(v.size()));
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double diff = v[i] - u[i];
        acc += diff * diff;
    }
    return std::sqrt(acc);
}

namespace {

double normalized_dot(std::span<const double> u, std::span<const double> v) {
    const Vector uh = normalize(u);
    const Vector vh = normalize(v);
    return clip_unit(dot(uh, vh));
}

}  // namespace

double cosine_distance(std::span<const double> u, std::span<const double> v) {
    return std::acos(normalized_dot(u, v));
}

double fubini_study_distance(std::span<const double> u,
                             std::span<const double> v) {
    return std::acos(std::abs(normalized_dot(u, v)));
}

StepDistances step_distances(std::span<const double> u,
                             std::span<const double> v) {
    const double d = normalized_dot(u, v);
    return StepDistances{euclidean_distance(u, v), std::acos(d),
                         std::acos(std::abs(d)), d};
}

std::vector<double> cumulative_drift(std::span<const double> step_values) {
    std::vector<double> out;
    out.reserve(step_values.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < step_values.size(); ++i) {
        const double x = step_values[i];
        if (x < 0.0 || !std::isfinite(x)) {
            throw NegativeIncrement("step value at index " + std::to_string(i) +
                                    " is " + std::to_string(x));
        }
        acc += x;
        out.push_back(acc);
    }
    return out;
}

}  // namespace raydrift
