#ifndef RAYDRIFT_SELFTEST_HPP
#define RAYDRIFT_SELFTEST_HPP

#include <cstddef>
#include <iosfwd>

namespace raydrift {

struct SelfTestOutcome {
    std::size_t passed = 0;
    std::size_t failed = 0;

    bool ok() const noexcept { return failed == 0; }
};

/// Embedded invariant suite: metric identities on random pairs, gauge
/// invariance of the Fubini-Study drift on synthetic trajectories, and
/// sign-test exactness against brute-force enumeration. Prints one line per
/// check to `out`.
SelfTestOutcome run_selftest(std::ostream& out);

}  // namespace raydrift

#endif
