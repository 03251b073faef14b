#include "sympolar/qcount.hpp"

#include <algorithm>

#include "sympolar/gf.hpp"

namespace sympolar {

ExactInt powQ(unsigned long q, unsigned long k) {
    ExactInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), q, k);
    return r;
}

ExactInt exactDiv(const ExactInt& num, const ExactInt& den) {
    require(den != 0, Errc::inexact_division, "division by zero");
    ExactInt quot, rem;
    mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    require(rem == 0, Errc::inexact_division,
            "non-exact division: " + num.get_str() + " / " + den.get_str());
    return quot;
}

ExactInt gaussian(long a, long b, unsigned long q) {
    if (a < 0 || b < 0 || b > a) return 0;
    if (b == 0) return 1;
    // Interleave multiply/divide; after step i the accumulator equals
    // [a-b+i i]_q, so every intermediate division is exact.
    ExactInt acc = 1;
    for (long i = 1; i <= b; ++i) {
        acc *= powQ(q, static_cast<unsigned long>(a - b + i)) - 1;
        acc = exactDiv(acc, powQ(q, static_cast<unsigned long>(i)) - 1);
    }
    return acc;
}

ExactInt anzahlN(long nu, long m, long m1, unsigned long q) {
    require(m >= 0 && m <= nu, Errc::bad_dimension,
            "anzahl requires 0 <= m <= nu");
    require(m1 >= 0, Errc::bad_dimension, "anzahl requires m1 >= 0");
    if (m1 > m) return 0;
    ExactInt num = 1, den = 1;
    for (long i = 1; i <= m - m1; ++i) {
        num *= powQ(q, static_cast<unsigned long>(2 * (nu - m + i))) - 1;
        den *= powQ(q, static_cast<unsigned long>(i)) - 1;
    }
    return exactDiv(num, den);
}

ProblemParams::ProblemParams(long nu_, long m_, long t_, unsigned long q_)
    : nu(nu_), m(m_), t(t_), q(q_) {
    factorPrimePower(static_cast<long long>(q_));  // throws unless prime power
    require(nu >= 1, Errc::bad_dimension, "nu must be >= 1");
    require(t >= 1, Errc::bad_dimension, "t must be >= 1");
    require(t < m && m <= nu, Errc::bad_dimension, "parameters must satisfy t < m <= nu");
}

F0Result f0(const ProblemParams& p) {
    require(p.t + 1 <= p.m && p.m <= p.nu, Errc::bad_dimension, "f0 requires t+1 <= m <= nu");
    ExactInt v = gaussian(p.m - p.t + 1, 1, p.q) * anzahlN(p.nu, p.m, p.t + 1, p.q) -
                 ExactInt(p.q) * gaussian(p.m - p.t + 1, 2, p.q) * anzahlN(p.nu, p.m, p.t + 2, p.q);
    return {std::move(v), !p.hypSignDichotomy()};
}

ExactInt h2Count(const ProblemParams& p) {
    require(p.t + 1 <= p.m && p.m <= p.nu, Errc::bad_dimension, "h2 requires t+1 <= m <= nu");
    require(p.t + 2 <= p.nu, Errc::bad_dimension,
            "h2 requires t+2 <= nu (no totally isotropic seed otherwise)");
    return gaussian(p.t + 2, 1, p.q) * anzahlN(p.nu, p.m, p.t + 1, p.q) -
           ExactInt(p.q) * gaussian(p.t + 1, 1, p.q) * anzahlN(p.nu, p.m, p.t + 2, p.q);
}

std::string toDecimal(const ExactInt& v) { return v.get_str(); }

}  // namespace sympolar
