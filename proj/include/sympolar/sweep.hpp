#pragma once

#include <map>
#include <string>
#include <vector>

#include "sympolar/qcount.hpp"

namespace sympolar {

struct SweepGrid {
    // inclusive ranges; an empty range (lo > hi) switches its claims off
    int nuLo = 1, nuHi = 0;
    int mLo = 1, mHi = 0;
    int tLo = 1, tHi = 0;
    std::vector<unsigned long> qList;
};

struct SweepEntry {
    std::string claim;
    std::map<std::string, long> params;  // nu/m/t/q/i as applicable
    bool pass = false;
    std::string lhs, rhs;  // exact decimal values compared
    std::string note;
};

struct SweepReport {
    std::vector<SweepEntry> entries;
    bool allPass() const;
};

/// Certifies the counting inequalities on a finite grid:
///  - power bounds: for 1 <= i < m, q^{m-i} < (q^m-1)/(q^i-1) < q^{m-i+1}
///    (checked cross-multiplied) and q^{i(m-i)} <= [m i] < q^{i(m-i+1)};
///  - sign dichotomy: where m >= t+2 and 2nu >= 3m-t+3, the H1-type count
///    with a totally isotropic join exceeds f0, and with a hyperbolic join
///    stays below f0;
///  - h1 vs h2 comparison: where m >= t+2 and 2nu >= 3m+1, h1 > h2 for
///    2t+2 <= m, and h2 >= h1 for 2t+2 > m with t <= m-2, with equality
///    exactly at (m,t) = (3,1).
SweepReport sweepLemmas(const SweepGrid& grid);

}  // namespace sympolar
