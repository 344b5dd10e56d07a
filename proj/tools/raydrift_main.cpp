#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "raydrift/csv.hpp"
#include "raydrift/errors.hpp"
#include "raydrift/report.hpp"
#include "raydrift/selftest.hpp"
#include "raydrift/synth.hpp"
#include "raydrift/trajectory.hpp"

namespace {

using namespace raydrift;

struct AnalyzeConfig {
    std::string input;
    std::string out_dir = "out";
    std::size_t window = 64;
    std::size_t step = 55;
    double epsilon = kDefaultEpsilon;
    double pc1_tol = kPc1DefaultTol;
    std::size_t pc1_max_iters = kPc1DefaultMaxIters;
    bool has_header = false;
    std::string delimiter = ",";
    std::int64_t label_column = -1;
    bool trajectory_mode = false;
};

CsvOptions csv_options(const AnalyzeConfig& cfg) {
    CsvOptions opts;
    opts.has_header = cfg.has_header;
    opts.delimiter = cfg.delimiter.empty() ? ',' : cfg.delimiter[0];
    if (cfg.label_column >= 0)
        opts.label_column = static_cast<std::size_t>(cfg.label_column);
    return opts;
}

// Treats each row of x as an already-extracted direction, normalized on load.
RepresentationTrajectory trajectory_from_rows(const FeatureMatrix& x) {
    RepresentationTrajectory traj;
    traj.spec = WindowSpec{0, 0};  // no windowing took place
    traj.directions.reserve(x.rows());
    for (std::size_t r = 0; r < x.rows(); ++r) {
        traj.directions.push_back(normalize(x.row(r)));
        traj.window_starts.push_back(r);
    }
    return traj;
}

int cmd_analyze(const AnalyzeConfig& cfg) {
    if (!(cfg.epsilon > 0.0)) {
        throw InvalidSpec("epsilon must be > 0");
    }
    const FeatureMatrix x = load_csv(cfg.input, csv_options(cfg));
    validate_matrix(x);

    RepresentationTrajectory traj;
    if (cfg.trajectory_mode) {
        traj = trajectory_from_rows(x);
    } else {
        validate_spec(x.rows(), WindowSpec{cfg.window, cfg.step});
        traj = build_trajectory(x, WindowSpec{cfg.window, cfg.step},
                                cfg.pc1_tol, cfg.pc1_max_iters);
    }

    const auto report = drift_report(compute_steps(traj), cfg.epsilon);
    const auto summary =
        make_summary(report, traj, x.rows(), x.cols(), cfg.pc1_tol,
                     cfg.pc1_max_iters, cfg.trajectory_mode, "steps.csv");

    std::filesystem::create_directories(cfg.out_dir);
    const auto dir = std::filesystem::path(cfg.out_dir);
    write_step_csv(report, traj, (dir / "steps.csv").string());
    write_summary_json(summary, (dir / "summary.json").string());
    render_panels(report, (dir / "panels.svg").string());

    std::cout << "windows: " << traj.length();
    if (!cfg.trajectory_mode)
        std::cout << " (W=" << summary.window_length << ", s=" << summary.step
                  << ")";
    std::cout << "\n"
              << "cumulative Euclidean drift:     "
              << format_double(summary.total_e) << "\n"
              << "cumulative cosine drift:        "
              << format_double(summary.total_c) << " rad\n"
              << "cumulative Fubini-Study drift:  "
              << format_double(summary.total_fs) << " rad\n"
              << "gauge difference (C - FS):      "
              << format_double(summary.total_gauge_diff) << " rad\n"
              << "sign flips: " << summary.flip_count << "\n";
    if (summary.sign_test) {
        std::cout << "sign test: " << summary.sign_test->n_positive << "/"
                  << summary.sign_test->n_nonzero
                  << " positive, p = " << format_double(summary.sign_test->p_value)
                  << "\n";
    } else {
        std::cout << "sign test: not applicable (no nonzero differences)\n";
    }
    return 0;
}

struct SynthConfig {
    std::size_t dimension = 8;
    std::size_t length = 32;
    double angle = 0.1;
    std::vector<std::size_t> flips;
    std::uint64_t seed = 1;
    std::string out = "trajectory.csv";
};

int cmd_synth(const SynthConfig& cfg) {
    const SynthSpec spec{cfg.dimension, cfg.length, cfg.angle, cfg.flips,
                         cfg.seed};
    const auto traj = generate_smooth_trajectory(spec);

    std::vector<double> data;
    data.reserve(traj.length() * cfg.dimension);
    for (const auto& dir : traj.directions)
        data.insert(data.end(), dir.begin(), dir.end());
    save_csv(FeatureMatrix(traj.length(), cfg.dimension, std::move(data)),
             cfg.out);
    std::cout << "wrote " << traj.length() << " x " << cfg.dimension
              << " directions to " << cfg.out << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Representation drift analysis under Euclidean, cosine and "
                 "Fubini-Study geometries"};
    app.require_subcommand(1);

    AnalyzeConfig acfg;
    auto* analyze = app.add_subcommand(
        "analyze", "Run the full drift pipeline on a CSV dataset");
    analyze->add_option("input", acfg.input, "Input CSV path")->required();
    analyze->add_option("--window", acfg.window,
                        "Sliding window length W")->capture_default_str();
    analyze->add_option("--step", acfg.step, "Window step size s")
        ->capture_default_str();
    analyze->add_option("--epsilon", acfg.epsilon,
                        "Stabilizer added inside the log ratio")
        ->capture_default_str();
    analyze->add_flag("--header", acfg.has_header,
                      "First CSV line is a header row");
    analyze->add_option("--delimiter", acfg.delimiter, "Cell delimiter")
        ->capture_default_str();
    analyze->add_option("--label-column", acfg.label_column,
                        "0-based column index to drop (e.g. class labels)");
    analyze->add_option("--out", acfg.out_dir, "Output directory")
        ->capture_default_str();
    analyze->add_flag("--trajectory-mode", acfg.trajectory_mode,
                      "Treat each row as an extracted direction (skip PCA)");
    analyze->add_option("--pc1-tol", acfg.pc1_tol,
                        "Power iteration convergence tolerance")
        ->capture_default_str();
    analyze->add_option("--pc1-max-iters", acfg.pc1_max_iters,
                        "Power iteration cap")->capture_default_str();

    SynthConfig scfg;
    auto* synth = app.add_subcommand(
        "synth", "Generate a synthetic rotation trajectory CSV");
    synth->add_option("--dim", scfg.dimension, "Direction dimension D")
        ->capture_default_str();
    synth->add_option("--length", scfg.length, "Trajectory length T")
        ->capture_default_str();
    synth->add_option("--angle", scfg.angle, "Rotation per step, radians")
        ->capture_default_str();
    synth->add_option("--flips", scfg.flips,
                      "1-based positions to negate")->delimiter(',');
    synth->add_option("--seed", scfg.seed, "RNG seed")->capture_default_str();
    synth->add_option("--out", scfg.out, "Output CSV path")
        ->capture_default_str();

    auto* selftest = app.add_subcommand(
        "selftest", "Run the embedded invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(acfg);
        if (synth->parsed()) return cmd_synth(scfg);
        if (selftest->parsed()) {
            return run_selftest(std::cout).ok() ? 0 : 1;
        }
    } catch (const InvalidSpec& e) {
        std::cerr << e.category() << ": " << e.what() << "\n";
        return 2;
    } catch (const InvalidAngle& e) {
        std::cerr << e.category() << ": " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << e.category() << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "InternalError: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
