#ifndef RAYDRIFT_LINALG_HPP
#define RAYDRIFT_LINALG_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace raydrift {

using Vector = std::vector<double>;

/// Dense row-major N x D matrix of observations (rows = samples).
class FeatureMatrix {
public:
    FeatureMatrix() = default;
    FeatureMatrix(std::size_t rows, std::size_t cols, std::vector<double> data);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }
    double& operator()(std::size_t r, std::size_t c) {
        return data_[r * cols_ + c];
    }

    std::span<const double> row(std::size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }

    const std::vector<double>& data() const noexcept { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// A window slice after mean subtraction. Column means of `rows` are zero.
struct CenteredWindow {
    FeatureMatrix rows;
    Vector mean;
    std::size_t origin_index = 0;
};

/// Leading right-singular direction of a centered window.
struct Pc1Result {
    Vector direction;       // unit vector
    double singular_value;  // sigma_1 >= 0
    std::size_t iterations;
};

double dot(std::span<const double> u, std::span<const double> v);
double norm2(std::span<const double> v);

/// Scales v to unit Euclidean norm, preserving orientation.
/// Throws ZeroVector when ||v|| < 1e-300.
Vector normalize(std::span<const double> v);

/// Subtracts the column mean from each row. Requires at least 2 rows.
CenteredWindow center_window(const FeatureMatrix& window,
                             std::size_t origin_index = 0);

inline constexpr double kPc1DefaultTol = 1e-12;
inline constexpr std::size_t kPc1DefaultMaxIters = 10000;

/// First principal direction of a centered window via power iteration on the
/// D x D covariance (1/W) X^T X. The start vector is the normalized all-ones
/// vector, so the converged sign is window-dependent and no alignment across
/// windows takes place. Throws ZeroVarianceWindow when the centered window is
/// identically zero, NoConvergence when max_iters is exhausted.
Pc1Result extract_pc1(const CenteredWindow& cw,
                      double tol = kPc1DefaultTol,
                      std::size_t max_iters = kPc1DefaultMaxIters);

}  // namespace raydrift

#endif
