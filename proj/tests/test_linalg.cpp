#include <cmath>
#include <numbers>

#include <doctest.h>

#include "oracles.hpp"
#include "raydrift/errors.hpp"
#include "raydrift/linalg.hpp"
#include "raydrift/synth.hpp"

using namespace raydrift;

TEST_CASE("normalize: 3-4-5 triangle") {
    const Vector v{3.0, 4.0};
    const auto u = normalize(v);
    CHECK(u[0] == doctest::Approx(0.6).epsilon(1e-14));
    CHECK(u[1] == doctest::Approx(0.8).epsilon(1e-14));
}

TEST_CASE("normalize: zero vector rejected") {
    const Vector v{0.0, 0.0};
    CHECK_THROWS_AS(normalize(v), ZeroVector);
}

TEST_CASE("normalize: unit vector unchanged") {
    const Vector e1{1.0, 0.0, 0.0};
    const auto u = normalize(e1);
    CHECK(u == e1);
}

TEST_CASE("normalize: unit norm within 1e-12") {
    SplitMix64 rng(7);
    for (int i = 0; i < 200; ++i) {
        Vector v(5);
        for (double& x : v) x = rng.next_gaussian() * 1e3;
        CHECK(std::abs(norm2(normalize(v)) - 1.0) < 1e-12);
    }
}

TEST_CASE("center_window: symmetric pair") {
    const FeatureMatrix m(2, 2, {1, 1, 3, 3});
    const auto cw = center_window(m);
    CHECK(cw.mean == Vector{2.0, 2.0});
    CHECK(cw.rows(0, 0) == -1.0);
    CHECK(cw.rows(0, 1) == -1.0);
    CHECK(cw.rows(1, 0) == 1.0);
    CHECK(cw.rows(1, 1) == 1.0);
}

TEST_CASE("center_window: identical rows center to zero") {
    const FeatureMatrix m(3, 2, {5, -2, 5, -2, 5, -2});
    const auto cw = center_window(m);
    for (double x : cw.rows.data()) CHECK(x == 0.0);
}

TEST_CASE("center_window: column sums vanish on random window") {
    SplitMix64 rng(42);
    std::vector<double> data(3 * 2);
    for (double& x : data) x = rng.next_gaussian() * 10.0;
    const auto cw = center_window(FeatureMatrix(3, 2, data));
    for (std::size_t c = 0; c < 2; ++c) {
        double col_sum = 0.0;
        for (std::size_t r = 0; r < 3; ++r) col_sum += cw.rows(r, c);
        CHECK(std::abs(col_sum) < 1e-10);
    }
}

TEST_CASE("center_window: W < 2 rejected") {
    const FeatureMatrix m(1, 3, {1, 2, 3});
    CHECK_THROWS_AS(center_window(m), WindowTooSmall);
}

TEST_CASE("extract_pc1: data on the line y = x") {
    // Centered rows along y = x; eigen-oracle on the 2x2 covariance agrees.
    const FeatureMatrix m(4, 2, {1, 1, -1, -1, 2, 2, -2, -2});
    const auto cw = center_window(m);
    const auto pc1 = extract_pc1(cw);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(pc1.direction[0] == doctest::Approx(inv_sqrt2).epsilon(1e-10));
    CHECK(pc1.direction[1] == doctest::Approx(inv_sqrt2).epsilon(1e-10));

    const auto eig = oracles::jacobi_eigen(
        oracles::covariance(cw.rows.data(), 4, 2), 2);
    CHECK(std::abs(std::abs(dot(pc1.direction, eig.vectors[0])) - 1.0) < 1e-10);
}

TEST_CASE("extract_pc1: zero-variance window rejected") {
    const FeatureMatrix m(3, 2, {4, 4, 4, 4, 4, 4});
    CHECK_THROWS_AS(extract_pc1(center_window(m)), ZeroVarianceWindow);
}

TEST_CASE("extract_pc1: dominant axis matches eigen-oracle") {
    SplitMix64 rng(99);
    std::vector<double> data(5 * 3);
    for (std::size_t r = 0; r < 5; ++r) {
        data[r * 3 + 0] = 10.0 * rng.next_gaussian();
        data[r * 3 + 1] = 0.3 * rng.next_gaussian();
        data[r * 3 + 2] = 0.1 * rng.next_gaussian();
    }
    const auto cw = center_window(FeatureMatrix(5, 3, data));
    const auto pc1 = extract_pc1(cw);
    const auto eig = oracles::jacobi_eigen(
        oracles::covariance(cw.rows.data(), 5, 3), 3);
    CHECK(std::abs(std::abs(dot(pc1.direction, eig.vectors[0])) - 1.0) < 1e-8);
}

TEST_CASE("extract_pc1: variance-maximizing over random directions") {
    SplitMix64 rng(3);
    std::vector<double> data(8 * 4);
    for (double& x : data) x = rng.next_gaussian();
    const auto cw = center_window(FeatureMatrix(8, 4, data));
    const auto pc1 = extract_pc1(cw);
    const double best =
        oracles::variance_along(cw.rows.data(), 8, 4, pc1.direction);
    for (int i = 0; i < 100; ++i) {
        Vector dir(4);
        for (double& x : dir) x = rng.next_gaussian();
        dir = normalize(dir);
        CHECK(oracles::variance_along(cw.rows.data(), 8, 4, dir) <=
              best + 1e-9);
    }
}

TEST_CASE("extract_pc1: deterministic and unit norm") {
    SplitMix64 rng(17);
    std::vector<double> data(6 * 3);
    for (double& x : data) x = rng.next_gaussian();
    const auto cw = center_window(FeatureMatrix(6, 3, data));
    const auto a = extract_pc1(cw);
    const auto b = extract_pc1(cw);
    CHECK(a.direction == b.direction);  // bit-identical
    CHECK(a.singular_value == b.singular_value);
    CHECK(std::abs(norm2(a.direction) - 1.0) < 1e-10);
}

TEST_CASE("extract_pc1: negated window spans the same PC1") {
    SplitMix64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> data(7 * 3);
        for (double& x : data) x = rng.next_gaussian();
        std::vector<double> neg(data.size());
        for (std::size_t i = 0; i < data.size(); ++i) neg[i] = -data[i];
        const auto v1 =
            extract_pc1(center_window(FeatureMatrix(7, 3, data))).direction;
        const auto v2 =
            extract_pc1(center_window(FeatureMatrix(7, 3, neg))).direction;
        CHECK(std::abs(std::abs(dot(v1, v2)) - 1.0) < 1e-8);
    }
}

TEST_CASE("extract_pc1: singular value matches oracle eigenvalue") {
    SplitMix64 rng(31);
    std::vector<double> data(9 * 4);
    for (double& x : data) x = rng.next_gaussian();
    const auto cw = center_window(FeatureMatrix(9, 4, data));
    const auto pc1 = extract_pc1(cw);
    const auto eig = oracles::jacobi_eigen(
        oracles::covariance(cw.rows.data(), 9, 4), 4);
    // sigma_1^2 = W * lambda_1 for the (1/W)-scaled covariance.
    CHECK(pc1.singular_value * pc1.singular_value ==
          doctest::Approx(9.0 * eig.values[0]).epsilon(1e-9));
}
