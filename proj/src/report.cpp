#include "raydrift/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "raydrift/csv.hpp"
#include "raydrift/errors.hpp"

namespace raydrift {

SummaryDocument make_summary(const DriftReport& report,
                             const RepresentationTrajectory& traj,
                             std::size_t n, std::size_t d,
                             double pc1_tol, std::size_t pc1_max_iters,
                             bool trajectory_mode,
                             const std::string& steps_csv_name) {
    SummaryDocument s;
    s.n = n;
    s.d = d;
    s.window_length = traj.spec.window_length;
    s.step = traj.spec.step;
    s.trajectory_length = traj.length();
    s.epsilon = report.epsilon;
    s.pc1_tol = pc1_tol;
    s.pc1_max_iters = pc1_max_iters;
    s.trajectory_mode = trajectory_mode;

    if (!report.steps.empty()) {
        s.total_e = report.cum_e.back();
        s.total_c = report.cum_c.back();
        s.total_fs = report.cum_fs.back();
        s.total_gauge_diff = report.gauge_diff.back();
        s.final_log_ratio = report.log_ratio.back();
    }
    s.flip_count = report.flip_count;

    std::vector<double> diffs;
    diffs.reserve(report.steps.size());
    for (const auto& st : report.steps)
        diffs.push_back(st.distances.d_c - st.distances.d_fs);
    try {
        s.sign_test = exact_sign_test(diffs);
    } catch (const AllZero&) {
        s.sign_test.reset();
    }

    s.steps_csv = steps_csv_name;
    return s;
}

void write_step_csv(const DriftReport& report,
                    const RepresentationTrajectory& traj,
                    const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");

    out << "step,window_start,dot,flip,d_e,d_c,d_fs,cum_e,cum_c,cum_fs,"
           "gauge_diff,log_ratio\n";
    for (std::size_t i = 0; i < report.steps.size(); ++i) {
        const auto& st = report.steps[i];
        // window_start of the later window in the pair (0-based source row).
        const std::size_t start =
            st.index < traj.window_starts.size() ? traj.window_starts[st.index]
                                                 : 0;
        out << st.index << ',' << start << ',' << format_double(st.dot) << ','
            << (st.flip ? "true" : "false") << ','
            << format_double(st.distances.d_e) << ','
            << format_double(st.distances.d_c) << ','
            << format_double(st.distances.d_fs) << ','
            << format_double(report.cum_e[i]) << ','
            << format_double(report.cum_c[i]) << ','
            << format_double(report.cum_fs[i]) << ','
            << format_double(report.gauge_diff[i]) << ','
            << format_double(report.log_ratio[i]) << '\n';
    }
    if (!out) throw IoError("write failed for " + path);
}

void write_summary_json(const SummaryDocument& summary,
                        const std::string& path) {
    nlohmann::ordered_json j;
    j["tool"] = "raydrift";
    j["version"] = kToolVersion;
    j["parameters"] = {
        {"n", summary.n},
        {"d", summary.d},
        {"window_length", summary.window_length},
        {"step", summary.step},
        {"trajectory_length", summary.trajectory_length},
        {"epsilon", summary.epsilon},
        {"pc1_tol", summary.pc1_tol},
        {"pc1_max_iters", summary.pc1_max_iters},
        {"pc1_sign_convention", kSignConvention},
        {"trajectory_mode", summary.trajectory_mode},
    };
    j["totals"] = {
        {"cumulative_euclidean", summary.total_e},
        {"cumulative_cosine", summary.total_c},
        {"cumulative_fubini_study", summary.total_fs},
        {"gauge_difference", summary.total_gauge_diff},
        {"final_log_ratio", summary.final_log_ratio},
        {"flip_count", summary.flip_count},
    };
    if (summary.sign_test) {
        j["sign_test"] = {
            {"applicable", true},
            {"convention", "two-sided, doubled smaller tail, capped at 1"},
            {"n_nonzero", summary.sign_test->n_nonzero},
            {"n_positive", summary.sign_test->n_positive},
            {"p_value", summary.sign_test->p_value},
        };
    } else {
        j["sign_test"] = {
            {"applicable", false},
            {"note", "no nonzero paired differences (no flips detected)"},
        };
    }
    j["outputs"] = {{"steps_csv", summary.steps_csv}};

    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << j.dump(2) << '\n';
    if (!out) throw IoError("write failed for " + path);
}

namespace {

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

struct Panel {
    double px, py, pw, ph;  // plot box in canvas coordinates
    double xmin, xmax, ymin, ymax;

    double sx(double x) const {
        return px + (x - xmin) / (xmax - xmin) * pw;
    }
    double sy(double y) const {
        return py + ph - (y - ymin) / (ymax - ymin) * ph;
    }
};

void pad_range(double& lo, double& hi) {
    if (hi - lo < 1e-12) {
        lo -= 0.5;
        hi += 0.5;
    } else {
        const double pad = 0.05 * (hi - lo);
        lo -= pad;
        hi += pad;
    }
}

void axes(std::ostringstream& svg, const Panel& p, const std::string& title,
          const std::string& ylabel) {
    svg << "<rect x='" << fmt(p.px) << "' y='" << fmt(p.py) << "' width='"
        << fmt(p.pw) << "' height='" << fmt(p.ph)
        << "' fill='none' stroke='black' stroke-width='1'/>\n";
    svg << "<text x='" << fmt(p.px + p.pw / 2) << "' y='" << fmt(p.py - 8)
        << "' text-anchor='middle' font-size='13' font-family='sans-serif'>"
        << title << "</text>\n";
    svg << "<text x='" << fmt(p.px + p.pw / 2) << "' y='"
        << fmt(p.py + p.ph + 30)
        << "' text-anchor='middle' font-size='11' font-family='sans-serif'>"
           "step n</text>\n";
    svg << "<text x='" << fmt(p.px - 42) << "' y='" << fmt(p.py + p.ph / 2)
        << "' text-anchor='middle' font-size='11' font-family='sans-serif' "
           "transform='rotate(-90 " << fmt(p.px - 42) << ' '
        << fmt(p.py + p.ph / 2) << ")'>" << ylabel << "</text>\n";
    for (int i = 0; i <= 4; ++i) {
        const double fx = p.xmin + (p.xmax - p.xmin) * i / 4.0;
        const double fy = p.ymin + (p.ymax - p.ymin) * i / 4.0;
        svg << "<text x='" << fmt(p.sx(fx)) << "' y='" << fmt(p.py + p.ph + 14)
            << "' text-anchor='middle' font-size='9' "
               "font-family='sans-serif'>" << fmt(fx) << "</text>\n";
        svg << "<text x='" << fmt(p.px - 4) << "' y='" << fmt(p.sy(fy) + 3)
            << "' text-anchor='end' font-size='9' font-family='sans-serif'>"
            << fmt(fy) << "</text>\n";
    }
}

void polyline(std::ostringstream& svg, const Panel& p,
              const std::vector<double>& xs, const std::vector<double>& ys,
              const std::string& color) {
    svg << "<polyline fill='none' stroke='" << color
        << "' stroke-width='1.5' points='";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) svg << ' ';
        svg << fmt(p.sx(xs[i])) << ',' << fmt(p.sy(ys[i]));
    }
    svg << "'/>\n";
}

}  // namespace

void render_panels(const DriftReport& report, const std::string& path) {
    const std::size_t m = report.steps.size();
    if (m < 1) {
        throw TrajectoryTooShort("panel rendering needs at least one step");
    }

    std::vector<double> xs(m);
    std::vector<double> dots(m);
    for (std::size_t i = 0; i < m; ++i) {
        // Series value at index i covers steps up to n = i + 2 in 1-based
        // trajectory notation.
        xs[i] = static_cast<double>(i + 2);
        dots[i] = report.steps[i].dot;
    }

    const double x_lo = xs.front() - 0.5, x_hi = xs.back() + 0.5;

    auto minmax = [](const std::vector<double>& v) {
        const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
        return std::pair<double, double>(*lo, *hi);
    };

    auto [e_lo, e_hi] = minmax(report.cum_e);
    e_lo = std::min(e_lo, 0.0);
    pad_range(e_lo, e_hi);
    auto [c_lo, c_hi] = minmax(report.cum_c);
    c_lo = std::min({c_lo, report.cum_fs.front(), 0.0});
    pad_range(c_lo, c_hi);
    auto [r_lo, r_hi] = minmax(report.log_ratio);
    pad_range(r_lo, r_hi);
    double d_lo = -1.05, d_hi = 1.05;

    Panel pa{70, 40, 360, 250, x_lo, x_hi, e_lo, e_hi};
    Panel pb{550, 40, 360, 250, x_lo, x_hi, c_lo, c_hi};
    Panel pc{70, 410, 360, 250, x_lo, x_hi, r_lo, r_hi};
    Panel pd{550, 410, 360, 250, x_lo, x_hi, d_lo, d_hi};

    std::ostringstream svg;
    svg << "<svg xmlns='http://www.w3.org/2000/svg' width='960' height='720' "
           "viewBox='0 0 960 720'>\n"
           "<rect width='960' height='720' fill='white'/>\n";

    axes(svg, pa, "A: cumulative Euclidean drift", "cumulative d_E");
    polyline(svg, pa, xs, report.cum_e, "#1f77b4");

    axes(svg, pb, "B: cumulative cosine vs Fubini-Study drift",
         "cumulative drift (rad)");
    polyline(svg, pb, xs, report.cum_c, "#ff7f0e");
    polyline(svg, pb, xs, report.cum_fs, "#2ca02c");
    svg << "<text x='" << fmt(pb.px + 8) << "' y='" << fmt(pb.py + 16)
        << "' font-size='10' font-family='sans-serif' fill='#ff7f0e'>"
           "cosine</text>\n";
    svg << "<text x='" << fmt(pb.px + 8) << "' y='" << fmt(pb.py + 30)
        << "' font-size='10' font-family='sans-serif' fill='#2ca02c'>"
           "Fubini-Study</text>\n";

    axes(svg, pc, "C: log10 ratio of Euclidean to Fubini-Study drift",
         "log ratio");
    polyline(svg, pc, xs, report.log_ratio, "#9467bd");

    axes(svg, pd, "D: stepwise dot product between consecutive PC1",
         "dot product");
    svg << "<line x1='" << fmt(pd.sx(x_lo)) << "' y1='" << fmt(pd.sy(0.0))
        << "' x2='" << fmt(pd.sx(x_hi)) << "' y2='" << fmt(pd.sy(0.0))
        << "' stroke='gray' stroke-dasharray='4 3' stroke-width='1'/>\n";
    polyline(svg, pd, xs, dots, "#7f7f7f");
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = report.steps[i].flip;
        svg << "<circle cx='" << fmt(pd.sx(xs[i])) << "' cy='"
            << fmt(pd.sy(dots[i])) << "' r='" << (flip ? "4" : "2.5")
            << "' fill='" << (flip ? "#d62728" : "#7f7f7f") << "'/>\n";
    }
    svg << "</svg>\n";

    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << svg.str();
    if (!out) throw IoError("write failed for " + path);
}

}  // namespace raydrift
