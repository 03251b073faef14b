#pragma once

#include <gmpxx.h>

#include <string>

#include "sympolar/error.hpp"

namespace sympolar {

/// Arbitrary-precision integer used for every closed-form count. All
/// divisions in formula evaluations are checked to be exact.
using ExactInt = mpz_class;

/// ExactInt from a 64-bit count (gmpxx lacks a long long constructor).
inline ExactInt exactOf(unsigned long long v) {
    ExactInt r;
    mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return r;
}

ExactInt powQ(unsigned long q, unsigned long k);

/// Gaussian binomial coefficient [a b]_q. Total by convention:
/// 1 when b = 0, 0 when b > a or either argument is negative.
ExactInt gaussian(long a, long b, unsigned long q);

/// Number of totally isotropic m-subspaces of F_q^{2nu} containing a fixed
/// totally isotropic m1-subspace:
///   prod_{i=1}^{m-m1} (q^{2(nu-m+i)} - 1) / (q^i - 1).
/// m1 = m gives 1 (empty product); m1 > m gives 0 by convention.
/// Throws Errc::bad_dimension unless 0 <= m <= nu and m1 >= 0.
ExactInt anzahlN(long nu, long m, long m1, unsigned long q);

struct ProblemParams {
    long nu = 0, m = 0, t = 0;
    unsigned long q = 0;

    ProblemParams(long nu_, long m_, long t_, unsigned long q_);

    // hypothesis ranges under which the sign/comparison claims are asserted
    bool hypSignDichotomy() const { return m >= t + 2 && 2 * nu >= 3 * m - t + 3; }
    bool hypComparison() const { return m >= t + 2 && 2 * nu >= 3 * m + 1; }
    bool hypExtremal() const {
        return (nu >= m + 1 && m + 1 == t + 2) ||
               (2 * nu >= std::max(3 * m + 2, 2 * m + 2 * t + 6) && m >= t + 2);
    }
};

struct F0Result {
    ExactInt value;
    bool hypothesisWarning;  // set when hypSignDichotomy() fails
};

/// f0(nu,m,t) = [m-t+1 1] N(nu,m,t+1) - q [m-t+1 2] N(nu,m,t+2).
/// Requires t+1 <= m <= nu.
F0Result f0(const ProblemParams& p);

/// h2(nu,m,t) = [t+2 1] N(nu,m,t+1) - q [t+1 1] N(nu,m,t+2); the size of the
/// family of m-subspaces meeting a fixed totally isotropic (t+2)-subspace in
/// dimension >= t+1. Requires t+1 <= m <= nu and t+2 <= nu (a totally
/// isotropic (t+2)-subspace must exist).
ExactInt h2Count(const ProblemParams& p);

/// Exact quotient; throws Errc::inexact_division on a nonzero remainder.
ExactInt exactDiv(const ExactInt& num, const ExactInt& den);

std::string toDecimal(const ExactInt& v);

}  // namespace sympolar
