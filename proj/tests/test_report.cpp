#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "raydrift/report.hpp"
#include "raydrift/synth.hpp"

using namespace raydrift;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Run {
    RepresentationTrajectory traj;
    DriftReport report;
};

Run make_run(const SynthSpec& spec) {
    Run r;
    r.traj = generate_smooth_trajectory(spec);
    r.report = drift_report(compute_steps(r.traj));
    return r;
}

const std::filesystem::path tmp = std::filesystem::temp_directory_path();

}  // namespace

TEST_CASE("write_step_csv: header plus one line per step") {
    const auto run = make_run(SynthSpec{4, 3, 0.2, {}, 6});
    const auto path = tmp / "raydrift_steps_arity.csv";
    write_step_csv(run.report, run.traj, path.string());
    std::istringstream lines(slurp(path));
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) ++count;
    CHECK(count == 3);  // header + 2 steps
    std::filesystem::remove(path);
}

TEST_CASE("write_step_csv: flip row carries flip=true and dot<0") {
    const auto run = make_run(SynthSpec{4, 8, 0.2, {5}, 6});
    const auto path = tmp / "raydrift_steps_flip.csv";
    write_step_csv(run.report, run.traj, path.string());
    std::istringstream lines(slurp(path));
    std::string line;
    std::getline(lines, line);  // header
    CHECK(line ==
          "step,window_start,dot,flip,d_e,d_c,d_fs,cum_e,cum_c,cum_fs,"
          "gauge_diff,log_ratio");
    std::size_t row = 0;
    while (std::getline(lines, line)) {
        ++row;
        const bool is_flip_row = (row == 4 || row == 5);  // steps 4 and 5
        CHECK((line.find(",true,") != std::string::npos) == is_flip_row);
        if (is_flip_row) CHECK(line.find(",-") != std::string::npos);
    }
    std::filesystem::remove(path);
}

TEST_CASE("write_step_csv: deterministic bytes") {
    const auto run = make_run(SynthSpec{5, 10, 0.3, {2, 7}, 99});
    const auto p1 = tmp / "raydrift_det_1.csv";
    const auto p2 = tmp / "raydrift_det_2.csv";
    write_step_csv(run.report, run.traj, p1.string());
    write_step_csv(run.report, run.traj, p2.string());
    CHECK(slurp(p1) == slurp(p2));
    std::filesystem::remove(p1);
    std::filesystem::remove(p2);
}

TEST_CASE("summary json: required keys and totals cross-check") {
    const auto run = make_run(SynthSpec{4, 10, 0.25, {3, 6}, 42});
    const auto summary = make_summary(run.report, run.traj, 10, 4,
                                      kPc1DefaultTol, kPc1DefaultMaxIters,
                                      false, "steps.csv");
    const auto path = tmp / "raydrift_summary.json";
    write_summary_json(summary, path.string());
    const auto j = nlohmann::json::parse(slurp(path));

    CHECK(j["version"] == kToolVersion);
    CHECK(j["parameters"]["trajectory_length"] == 10);
    CHECK(j["parameters"]["pc1_sign_convention"] == kSignConvention);
    CHECK(j["totals"]["cumulative_cosine"].get<double>() ==
          run.report.cum_c.back());
    CHECK(j["totals"]["cumulative_fubini_study"].get<double>() ==
          run.report.cum_fs.back());
    CHECK(j["totals"]["gauge_difference"].get<double>() ==
          run.report.gauge_diff.back());
    CHECK(j["totals"]["flip_count"].get<std::size_t>() ==
          run.report.flip_count);
    CHECK(j["sign_test"]["applicable"] == true);
    std::filesystem::remove(path);
}

TEST_CASE("summary json: no-flip run marks sign test not applicable") {
    const auto run = make_run(SynthSpec{4, 6, 0.2, {}, 8});
    const auto summary = make_summary(run.report, run.traj, 6, 4,
                                      kPc1DefaultTol, kPc1DefaultMaxIters,
                                      false, "steps.csv");
    CHECK(!summary.sign_test.has_value());
    CHECK(summary.total_gauge_diff == 0.0);
    const auto path = tmp / "raydrift_summary_nf.json";
    write_summary_json(summary, path.string());
    const auto j = nlohmann::json::parse(slurp(path));
    CHECK(j["sign_test"]["applicable"] == false);
    std::filesystem::remove(path);
}

TEST_CASE("render_panels: valid SVG with four panels and flip markers") {
    const auto run = make_run(SynthSpec{4, 12, 0.3, {4, 9}, 17});
    const auto path = tmp / "raydrift_panels.svg";
    render_panels(run.report, path.string());
    const auto svg = slurp(path);
    CHECK(svg.find("<svg xmlns=") != std::string::npos);
    CHECK(svg.find("A: cumulative Euclidean drift") != std::string::npos);
    CHECK(svg.find("B: cumulative cosine vs Fubini-Study drift") !=
          std::string::npos);
    CHECK(svg.find("C: log10 ratio") != std::string::npos);
    CHECK(svg.find("D: stepwise dot product") != std::string::npos);
    CHECK(svg.find("#d62728") != std::string::npos);  // flip marker color
    CHECK(svg.rfind("</svg>") != std::string::npos);

    // Deterministic bytes on re-render.
    const auto path2 = tmp / "raydrift_panels2.svg";
    render_panels(run.report, path2.string());
    CHECK(slurp(path2) == svg);
    std::filesystem::remove(path);
    std::filesystem::remove(path2);
}

TEST_CASE("render_panels: no-flip run has no flip markers") {
    const auto run = make_run(SynthSpec{4, 8, 0.2, {}, 3});
    const auto path = tmp / "raydrift_panels_nf.svg";
    render_panels(run.report, path.string());
    const auto svg = slurp(path);
    CHECK(svg.find("#d62728") == std::string::npos);
    std::filesystem::remove(path);
}
