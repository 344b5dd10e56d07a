#include "raydrift/linalg.hpp"

#include <cmath>
#include <string>

#include "raydrift/errors.hpp"

namespace raydrift {

FeatureMatrix::FeatureMatrix(std::size_t rows, std::size_t cols,
                             std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
        throw DimensionMismatch("matrix data size " +
                                std::to_string(data_.size()) + " != " +
                                std::to_string(rows_) + "x" +
                                std::to_string(cols_));
    }
}

double dot(std::span<const double> u, std::span<const double> v) {
    if (u.size() != v.size()) {
        throw DimensionMismatch("dot: " + std::to_string(u.size()) + " vs " +
                                std::to_string(v.size()));
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i];
    return acc;
}

double norm2(std::span<const double> v) {
    double acc = 0.0;
    for (double x : v) acc += x * x;
    return std::sqrt(acc);
}

Vector normalize(std::span<const double> v) {
    const double n = norm2(v);
    if (!(n >= 1e-300)) {
        throw ZeroVector("cannot normalize vector with norm " +
                         std::to_string(n));
    }
    Vector out(v.begin(), v.end());
    for (double& x : out) x /= n;
    return out;
}

CenteredWindow center_window(const FeatureMatrix& window,
                             std::size_t origin_index) {
    const std::size_t w = window.rows();
    const std::size_t d = window.cols();
    if (w < 2) {
        throw WindowTooSmall("centering requires at least 2 rows, got " +
                             std::to_string(w));
    }

    Vector mean(d, 0.0);
    for (std::size_t r = 0; r < w; ++r)
        for (std::size_t c = 0; c < d; ++c) mean[c] += window(r, c);
    for (double& m : mean) m /= static_cast<double>(w);

    std::vector<double> centered(w * d);
    for (std::size_t r = 0; r < w; ++r)
        for (std::size_t c = 0; c < d; ++c)
            centered[r * d + c] = window(r, c) - mean[c];

    return CenteredWindow{FeatureMatrix(w, d, std::move(centered)),
                          std::move(mean), origin_index};
}

namespace {

// Covariance-vector product y = (1/W) X^T (X v) without forming the D x D
// matrix; X is the centered window.
void cov_apply(const FeatureMatrix& x, const Vector& v, Vector& y) {
    const std::size_t w = x.rows();
    const std::size_t d = x.cols();
    y.assign(d, 0.0);
    for (std::size_t r = 0; r < w; ++r) {
        const auto row = x.row(r);
        double proj = 0.0;
        for (std::size_t c = 0; c < d; ++c) proj += row[c] * v[c];
        for (std::size_t c = 0; c < d; ++c) y[c] += proj * row[c];
    }
    for (double& e : y) e /= static_cast<double>(w);
}

}  // namespace

Pc1Result extract_pc1(const CenteredWindow& cw, double tol,
                      std::size_t max_iters) {
    const FeatureMatrix& x = cw.rows;
    const std::size_t w = x.rows();
    const std::size_t d = x.cols();

    double max_abs = 0.0;
    for (double e : x.data()) max_abs = std::max(max_abs, std::abs(e));
    if (max_abs < 1e-12) {
        throw ZeroVarianceWindow(
            "centered window at origin " + std::to_string(cw.origin_index) +
            " is identically zero (max |entry| = " + std::to_string(max_abs) +
            ")");
    }

    // Fixed deterministic start: normalized all-ones, e_1 fallback.
    Vector v(d, 1.0 / std::sqrt(static_cast<double>(d)));
    Vector next(d);
    double last_delta = 0.0;
    for (std::size_t iter = 0; iter < max_iters; ++iter) {
        cov_apply(x, v, next);
        const double n = norm2(next);
        if (n < 1e-12) {
            v.assign(d, 0.0);
            v[0] = 1.0;
            continue;
        }
        for (double& e : next) e /= n;

        double delta_sq = 0.0;
        for (std::size_t c = 0; c < d; ++c) {
            const double diff = next[c] - v[c];
            delta_sq += diff * diff;
        }
        last_delta = std::sqrt(delta_sq);
        v = next;
        if (last_delta < tol) {
            // Rayleigh quotient gives the top eigenvalue of (1/W) X^T X;
            // sigma_1 of the centered window is sqrt(W * lambda).
            cov_apply(x, v, next);
            const double lambda = dot(v, next);
            return Pc1Result{std::move(v),
                             std::sqrt(std::max(0.0, lambda) *
                                       static_cast<double>(w)),
                             iter + 1};
        }
    }

    cov_apply(x, v, next);
    const double lambda = dot(v, next);
    double resid_sq = 0.0;
    for (std::size_t c = 0; c < d; ++c) {
        const double r = next[c] - lambda * v[c];
        resid_sq += r * r;
    }
    throw NoConvergence(
        "power iteration on window at origin " +
        std::to_string(cw.origin_index) + " did not converge in " +
        std::to_string(max_iters) + " iterations (last iterate delta " +
        std::to_string(last_delta) + ", Rayleigh quotient " +
        std::to_string(lambda) + ", residual " + std::to_string(std::sqrt(resid_sq)) +
        "; a small spectral gap between the top eigenvalues is the likely cause)");
}

}  // namespace raydrift
