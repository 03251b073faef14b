#include "sympolar/sweep.hpp"

#include "sympolar/families.hpp"

namespace sympolar {

bool SweepReport::allPass() const {
    for (const auto& e : entries)
        if (!e.pass) return false;
    return true;
}

namespace {

SweepEntry entry(std::string claim, std::map<std::string, long> params, const ExactInt& lhs,
                 const ExactInt& rhs, bool pass, std::string note = {}) {
    return {std::move(claim), std::move(params), pass, lhs.get_str(), rhs.get_str(),
            std::move(note)};
}

void powerBoundClaims(const SweepGrid& grid, SweepReport& report) {
    for (unsigned long q : grid.qList) {
        for (int m = std::max(2, grid.mLo); m <= grid.mHi; ++m) {
            for (int i = 1; i < m; ++i) {
                std::map<std::string, long> p{{"q", static_cast<long>(q)}, {"m", m}, {"i", i}};
                const ExactInt qm1 = powQ(q, m) - 1;
                const ExactInt qi1 = powQ(q, i) - 1;
                ExactInt lhs = powQ(q, m - i) * qi1;
                report.entries.push_back(
                    entry("power-bound.ratio-lower", p, lhs, qm1, lhs < qm1));
                ExactInt rhs = powQ(q, m - i + 1) * qi1;
                report.entries.push_back(
                    entry("power-bound.ratio-upper", p, qm1, rhs, qm1 < rhs));
                const ExactInt g = gaussian(m, i, q);
                lhs = powQ(q, static_cast<unsigned long>(i) * (m - i));
                report.entries.push_back(entry("power-bound.gauss-lower", p, lhs, g, lhs <= g));
                rhs = powQ(q, static_cast<unsigned long>(i) * (m - i + 1));
                report.entries.push_back(entry("power-bound.gauss-upper", p, g, rhs, g < rhs));
            }
        }
    }
}

void signAndComparisonClaims(const SweepGrid& grid, SweepReport& report) {
    for (unsigned long q : grid.qList) {
        for (int nu = grid.nuLo; nu <= grid.nuHi; ++nu) {
            const Field field(factorPrimePower(q).first, factorPrimePower(q).second);
            const PolarSpace sp(field, nu);
            for (int m = grid.mLo; m <= std::min(grid.mHi, nu); ++m) {
                for (int t = grid.tLo; t <= std::min(grid.tHi, m - 1); ++t) {
                    const ProblemParams params(nu, m, t, q);
                    std::map<std::string, long> p{
                        {"q", static_cast<long>(q)}, {"nu", nu}, {"m", m}, {"t", t}};

                    if (params.hypSignDichotomy() && nu >= m + 1) {
                        const ExactInt bound = f0(params).value;
                        const SeedPair iso = canonicalSeeds(sp, m, t, SeedKind::isotropicJoin);
                        const ExactInt hIso = countH1(sp, iso.t, iso.u, t);
                        report.entries.push_back(entry("h1-sign.isotropic-join", p, hIso, bound,
                                                       hIso > bound));
                        const SeedPair hyp = canonicalSeeds(sp, m, t, SeedKind::hyperbolicJoin);
                        const ExactInt hHyp = countH1(sp, hyp.t, hyp.u, t);
                        report.entries.push_back(entry("h1-sign.hyperbolic-join", p, hHyp, bound,
                                                       hHyp < bound));
                    }

                    if (params.hypComparison() && t + 2 <= nu && nu >= m + 1) {
                        const SeedPair iso = canonicalSeeds(sp, m, t, SeedKind::isotropicJoin);
                        const ExactInt h1 = countH1(sp, iso.t, iso.u, t);
                        const ExactInt h2 = h2Count(params);
                        if (2 * t + 2 <= m) {
                            report.entries.push_back(
                                entry("h1-vs-h2.small-t", p, h1, h2, h1 > h2));
                        } else if (t <= m - 2) {
                            const bool equalityCase = (m == 3 && t == 1);
                            const bool pass = equalityCase ? (h2 == h1) : (h2 > h1);
                            report.entries.push_back(
                                entry("h1-vs-h2.large-t", p, h2, h1, pass,
                                      equalityCase ? "equality case (m,t)=(3,1)" : ""));
                        }
                    }
                }
            }
        }
    }
}

}  // namespace

SweepReport sweepLemmas(const SweepGrid& grid) {
    SweepReport report;
    powerBoundClaims(grid, report);
    if (grid.nuLo <= grid.nuHi && grid.tLo <= grid.tHi) signAndComparisonClaims(grid, report);
    return report;
}

}  // namespace sympolar
