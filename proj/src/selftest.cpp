#include "raydrift/selftest.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <ostream>
#include <string>
#include <vector>

#include "raydrift/metrics.hpp"
#include "raydrift/sign_test.hpp"
#include "raydrift/synth.hpp"
#include "raydrift/trajectory.hpp"

namespace raydrift {

namespace {

Vector random_vector(SplitMix64& rng, std::size_t d) {
    Vector v(d);
    for (double& x : v) x = rng.next_gaussian();
    return v;
}

void check(SelfTestOutcome& outcome, std::ostream& out, const std::string& name,
           bool ok) {
    out << (ok ? "[PASS] " : "[FAIL] ") << name << '\n';
    if (ok)
        ++outcome.passed;
    else
        ++outcome.failed;
}

bool gauge_identity_holds(std::size_t pairs, std::size_t d,
                          std::uint64_t seed) {
    SplitMix64 rng(seed);
    for (std::size_t i = 0; i < pairs; ++i) {
        const Vector u = random_vector(rng, d);
        const Vector v = random_vector(rng, d);
        if (norm2(u) < 1e-8 || norm2(v) < 1e-8) continue;
        const double dc = cosine_distance(u, v);
        const double dfs = fubini_study_distance(u, v);
        if (std::abs(dfs - std::min(dc, std::numbers::pi - dc)) > 1e-12)
            return false;
        Vector nu = u;
        for (double& x : nu) x = -x;
        if (fubini_study_distance(nu, v) != dfs) return false;
    }
    return true;
}

bool fs_drift_gauge_invariant(std::size_t trials, std::uint64_t seed) {
    SplitMix64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        SynthSpec spec{4 + t % 5, 8, 0.2 + 0.05 * static_cast<double>(t % 4),
                       {}, seed + t};
        const auto traj = generate_smooth_trajectory(spec);
        std::vector<std::size_t> flips;
        for (std::size_t k = 1; k <= traj.length(); ++k)
            if (rng.next_double() < 0.5) flips.push_back(k);
        const auto flipped = inject_flips(traj, flips);
        const auto base = drift_report(compute_steps(traj));
        const auto alt = drift_report(compute_steps(flipped));
        for (std::size_t i = 0; i < base.cum_fs.size(); ++i)
            if (base.cum_fs[i] != alt.cum_fs[i]) return false;
    }
    return true;
}

bool sign_test_matches_enumeration() {
    for (std::size_t n = 1; n <= 12; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            // Tail counts over all 2^n equally likely sign patterns.
            std::size_t le = 0, ge = 0;
            for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
                const auto pos = static_cast<std::size_t>(
                    std::popcount(mask));
                if (pos <= k) ++le;
                if (pos >= k) ++ge;
            }
            const double expected = std::min(
                1.0, 2.0 * static_cast<double>(std::min(le, ge)) /
                         std::ldexp(1.0, static_cast<int>(n)));
            if (std::abs(sign_test_p_value(k, n) - expected) > 1e-12)
                return false;
        }
    }
    return true;
}

}  // namespace

SelfTestOutcome run_selftest(std::ostream& out) {
    SelfTestOutcome outcome;
    check(outcome, out, "gauge identity d_FS = min(d_C, pi - d_C), D=2",
          gauge_identity_holds(2000, 2, 11));
    check(outcome, out, "gauge identity d_FS = min(d_C, pi - d_C), D=8",
          gauge_identity_holds(2000, 8, 12));
    check(outcome, out, "gauge identity d_FS = min(d_C, pi - d_C), D=64",
          gauge_identity_holds(2000, 64, 13));
    check(outcome, out, "Fubini-Study drift invariant under sign assignments",
          fs_drift_gauge_invariant(50, 21));
    check(outcome, out, "exact sign test matches brute-force enumeration",
          sign_test_matches_enumeration());
    out << outcome.passed << " passed, " << outcome.failed << " failed\n";
    return outcome;
}

}  // namespace raydrift
