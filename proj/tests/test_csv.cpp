#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <doctest.h>

#include "raydrift/csv.hpp"
#include "raydrift/errors.hpp"
#include "raydrift/synth.hpp"

using namespace raydrift;

namespace {

struct TempFile {
    std::filesystem::path path;

    explicit TempFile(const std::string& content) {
        static int counter = 0;
        path = std::filesystem::temp_directory_path() /
               ("raydrift_test_" + std::to_string(++counter) + ".csv");
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("load_csv: plain numeric file") {
    TempFile f("1,2\n3,4\n5,6\n");
    const auto m = load_csv(f.path.string());
    REQUIRE(m.rows() == 3);
    REQUIRE(m.cols() == 2);
    CHECK(m(0, 0) == 1.0);
    CHECK(m(2, 1) == 6.0);
}

TEST_CASE("load_csv: header and label column dropped") {
    TempFile f("a,b,label\n1.5,2.5,7\n3,4,9\n");
    CsvOptions opts;
    opts.has_header = true;
    opts.label_column = 2;
    const auto m = load_csv(f.path.string(), opts);
    REQUIRE(m.rows() == 2);
    REQUIRE(m.cols() == 2);
    CHECK(m(0, 0) == 1.5);
    CHECK(m(1, 1) == 4.0);
}

TEST_CASE("load_csv: parse error names the cell") {
    TempFile f("1,2\n3,4\n5,6\n7,8\n9,10\n11,oops\n");
    try {
        load_csv(f.path.string());
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("row 5") != std::string::npos);
        CHECK(msg.find("column 1") != std::string::npos);
    }
}

TEST_CASE("load_csv: ragged rows rejected") {
    TempFile f("1,2,3\n4,5\n");
    CHECK_THROWS_AS(load_csv(f.path.string()), RaggedRows);
}

TEST_CASE("load_csv: missing and empty files") {
    CHECK_THROWS_AS(load_csv("/nonexistent/raydrift.csv"), FileNotFound);
    TempFile f("");
    CHECK_THROWS_AS(load_csv(f.path.string()), EmptyFile);
}

TEST_CASE("load_csv: alternate delimiter") {
    TempFile f("1;2\n3;4\n");
    CsvOptions opts;
    opts.delimiter = ';';
    const auto m = load_csv(f.path.string(), opts);
    CHECK(m(1, 0) == 3.0);
}

TEST_CASE("round-trip: save then load reproduces values") {
    SplitMix64 rng(77);
    std::vector<double> data(6 * 4);
    for (double& x : data) x = rng.next_gaussian() * 1e3;
    const FeatureMatrix m(6, 4, data);

    const auto path = std::filesystem::temp_directory_path() /
                      "raydrift_roundtrip.csv";
    save_csv(m, path.string());
    const auto back = load_csv(path.string());
    REQUIRE(back.rows() == m.rows());
    REQUIRE(back.cols() == m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            CHECK(back(r, c) == m(r, c));  // 17 digits round-trip exactly
    std::filesystem::remove(path);
}

TEST_CASE("validate_matrix: clean matrix summary") {
    const FeatureMatrix m(2, 2, {1, -5, 3, 8});
    const auto s = validate_matrix(m);
    CHECK(s.rows == 2);
    CHECK(s.cols == 2);
    CHECK(s.col_min[1] == -5.0);
    CHECK(s.col_max[1] == 8.0);
    CHECK(s.non_finite_count == 0);
}

TEST_CASE("validate_matrix: NaN entry located") {
    FeatureMatrix m(2, 2, {1, 2, 3, 4});
    m(1, 0) = std::nan("");
    try {
        validate_matrix(m);
        FAIL("expected NonFiniteData");
    } catch (const NonFiniteData& e) {
        const std::string msg = e.what();
        CHECK(msg.find("row 1") != std::string::npos);
        CHECK(msg.find("column 0") != std::string::npos);
    }
}
