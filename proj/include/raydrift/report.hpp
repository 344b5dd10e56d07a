#ifndef RAYDRIFT_REPORT_HPP
#define RAYDRIFT_REPORT_HPP

#include <optional>
#include <string>

#include "raydrift/sign_test.hpp"
#include "raydrift/trajectory.hpp"

namespace raydrift {

inline constexpr const char* kToolVersion = "0.1.0";

// Identifier for the PC1 sign convention: power iteration started from the
// normalized all-ones vector, raw converged sign retained.
inline constexpr const char* kSignConvention = "power-iteration-ones-start";

/// Machine-readable run summary written to summary.json.
struct SummaryDocument {
    // Parameters
    std::size_t n = 0;
    std::size_t d = 0;
    std::size_t window_length = 0;
    std::size_t step = 0;
    std::size_t trajectory_length = 0;
    double epsilon = 0.0;
    double pc1_tol = 0.0;
    std::size_t pc1_max_iters = 0;
    bool trajectory_mode = false;

    // Totals (last elements of the corresponding series)
    double total_e = 0.0;
    double total_c = 0.0;
    double total_fs = 0.0;
    double total_gauge_diff = 0.0;
    double final_log_ratio = 0.0;
    std::size_t flip_count = 0;

    std::optional<SignTestResult> sign_test;  // empty when not applicable

    std::string steps_csv;  // per-step table reference
};

/// Builds the summary from a finished report. The sign test runs on the
/// paired stepwise differences d_c - d_fs; a no-flip run leaves it empty.
SummaryDocument make_summary(const DriftReport& report,
                             const RepresentationTrajectory& traj,
                             std::size_t n, std::size_t d,
                             double pc1_tol, std::size_t pc1_max_iters,
                             bool trajectory_mode,
                             const std::string& steps_csv_name);

/// One row per step:
/// step,window_start,dot,flip,d_e,d_c,d_fs,cum_e,cum_c,cum_fs,gauge_diff,log_ratio
/// Doubles carry 17 significant digits; byte output is deterministic.
void write_step_csv(const DriftReport& report,
                    const RepresentationTrajectory& traj,
                    const std::string& path);

/// Canonical key ordering, decimal number literals, tool version and sign
/// convention embedded.
void write_summary_json(const SummaryDocument& summary,
                        const std::string& path);

/// Four static panels in a fixed 2x2 layout: cumulative Euclidean drift,
/// cosine vs Fubini-Study drift, the log ratio, and per-step dot products
/// with flip markers. Output is standalone SVG with no timestamps.
void render_panels(const DriftReport& report, const std::string& path);

}  // namespace raydrift

#endif
