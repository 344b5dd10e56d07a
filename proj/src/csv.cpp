#include "raydrift/csv.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "raydrift/errors.hpp"

namespace raydrift {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

namespace {

double parse_cell(std::string_view cell, std::size_t row, std::size_t col) {
    // Trim surrounding spaces; from_chars rejects them.
    while (!cell.empty() && std::isspace(static_cast<unsigned char>(cell.front())))
        cell.remove_prefix(1);
    while (!cell.empty() && std::isspace(static_cast<unsigned char>(cell.back())))
        cell.remove_suffix(1);

    double value = 0.0;
    const auto* end = cell.data() + cell.size();
    const auto res = std::from_chars(cell.data(), end, value);
    if (res.ec != std::errc{} || res.ptr != end || cell.empty()) {
        throw ParseError("non-numeric cell \"" + std::string(cell) +
                         "\" at row " + std::to_string(row) + ", column " +
                         std::to_string(col));
    }
    return value;
}

}  // namespace

FeatureMatrix load_csv(const std::string& path, const CsvOptions& opts) {
    std::ifstream in(path);
    if (!in) {
        throw FileNotFound("cannot open " + path);
    }

    std::vector<double> data;
    std::size_t cols = 0;
    std::size_t rows = 0;
    std::size_t line_no = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::size_t file_line = line_no++;
        if (opts.has_header && file_line == 0) continue;
        if (line.empty()) continue;

        std::vector<std::string_view> cells;
        std::string_view rest = line;
        while (true) {
            const auto pos = rest.find(opts.delimiter);
            cells.push_back(rest.substr(0, pos));
            if (pos == std::string_view::npos) break;
            rest.remove_prefix(pos + 1);
        }

        std::size_t out_col = 0;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (opts.label_column && c == *opts.label_column) continue;
            data.push_back(parse_cell(cells[c], rows, c));
            ++out_col;
        }
        if (rows == 0) {
            cols = out_col;
            if (cols == 0) {
                throw ParseError("row 0 of " + path + " has no data columns");
            }
        } else if (out_col != cols) {
            throw RaggedRows("row " + std::to_string(rows) + " of " + path +
                             " has " + std::to_string(out_col) +
                             " columns, expected " + std::to_string(cols));
        }
        ++rows;
    }
    if (rows == 0) {
        throw EmptyFile(path + " contains no data rows");
    }
    return FeatureMatrix(rows, cols, std::move(data));
}

void save_csv(const FeatureMatrix& x, const std::string& path,
              char delimiter) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open " + path + " for writing");
    }
    for (std::size_t r = 0; r < x.rows(); ++r) {
        for (std::size_t c = 0; c < x.cols(); ++c) {
            if (c) out << delimiter;
            out << format_double(x(r, c));
        }
        out << '\n';
    }
    if (!out) {
        throw IoError("write failed for " + path);
    }
}

ValidationSummary validate_matrix(const FeatureMatrix& x) {
    ValidationSummary summary{
        x.rows(), x.cols(),
        Vector(x.cols(), std::numeric_limits<double>::infinity()),
        Vector(x.cols(), -std::numeric_limits<double>::infinity()), 0};
    std::size_t first_bad_row = 0, first_bad_col = 0;
    for (std::size_t r = 0; r < x.rows(); ++r) {
        for (std::size_t c = 0; c < x.cols(); ++c) {
            const double v = x(r, c);
            if (!std::isfinite(v)) {
                if (summary.non_finite_count == 0) {
                    first_bad_row = r;
                    first_bad_col = c;
                }
                ++summary.non_finite_count;
                continue;
            }
            summary.col_min[c] = std::min(summary.col_min[c], v);
            summary.col_max[c] = std::max(summary.col_max[c], v);
        }
    }
    if (summary.non_finite_count > 0) {
        throw NonFiniteData(std::to_string(summary.non_finite_count) +
                            " non-finite entries, first at row " +
                            std::to_string(first_bad_row) + ", column " +
                            std::to_string(first_bad_col));
    }
    return summary;
}

}  // namespace raydrift
