#ifndef RAYDRIFT_CSV_HPP
#define RAYDRIFT_CSV_HPP

#include <optional>
#include <string>

#include "raydrift/linalg.hpp"

namespace raydrift {

struct CsvOptions {
    bool has_header = false;
    std::optional<std::size_t> label_column;  // dropped when set
    char delimiter = ',';
};

/// Per-column ranges plus basic shape facts from validate_matrix.
struct ValidationSummary {
    std::size_t rows;
    std::size_t cols;
    Vector col_min;
    Vector col_max;
    std::size_t non_finite_count;
};

/// Loads a rectangular numeric CSV in file row order. Throws FileNotFound,
/// EmptyFile, RaggedRows, or ParseError with the offending 0-based (row, col).
FeatureMatrix load_csv(const std::string& path, const CsvOptions& opts = {});

/// Writes the matrix back out with 17 significant digits per cell.
void save_csv(const FeatureMatrix& x, const std::string& path,
              char delimiter = ',');

/// Shape and range summary; throws NonFiniteData (with a location) if any
/// entry is NaN or infinite.
ValidationSummary validate_matrix(const FeatureMatrix& x);

/// Shortest-of-17-significant-digits formatting used by every emitter, so
/// outputs are byte-deterministic and round-trip to the same double.
std::string format_double(double x);

}  // namespace raydrift

#endif
