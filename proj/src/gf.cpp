#include "sympolar/gf.hpp"

#include <algorithm>

namespace sympolar {

const char* errcName(Errc c) {
    switch (c) {
        case Errc::not_prime: return "NotPrime";
        case Errc::order_too_large: return "OrderTooLarge";
        case Errc::zero_inverse: return "ZeroInverse";
        case Errc::length_mismatch: return "LengthMismatch";
        case Errc::ambient_mismatch: return "AmbientMismatch";
        case Errc::bad_dimension: return "BadDimension";
        case Errc::zero_subspace: return "ZeroSubspace";
        case Errc::non_isotropic_seed: return "NonIsotropicSeed";
        case Errc::seed_shape: return "SeedShape";
        case Errc::empty_family: return "EmptyFamily";
        case Errc::wrong_tau: return "WrongTau";
        case Errc::precondition_violated: return "PreconditionViolated";
        case Errc::too_large: return "TooLarge";
        case Errc::non_canonical: return "NonCanonicalInput";
        case Errc::parse_error: return "ParseError";
        case Errc::inexact_division: return "InexactDivision";
    }
    return "UnknownError";
}

bool isPrime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::pair<int, int> factorPrimePower(long long q) {
    require(q >= 2, Errc::not_prime, "q must be a prime power >= 2");
    long long p = q;
    for (long long d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    int e = 0;
    long long rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    require(rest == 1, Errc::not_prime, "q must be a prime power, got " + std::to_string(q));
    return {static_cast<int>(p), e};
}

namespace {

// Polynomials over GF(p) as coefficient vectors, constant term first.
using Poly = std::vector<int>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly polyMulMod(const Poly& a, const Poly& b, const Poly& mod, int p) {
    Poly prod(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    // reduce modulo the monic poly `mod` of degree deg
    const int deg = static_cast<int>(mod.size()) - 1;
    for (int i = static_cast<int>(prod.size()) - 1; i >= deg; --i) {
        int c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (int j = 0; j < deg; ++j) {
            int& slot = prod[i - deg + j];
            slot = ((slot - c * mod[j]) % p + p) % p;
        }
    }
    prod.resize(deg > 0 ? deg : 1, 0);
    return prod;
}

// Remainder of a by monic b over GF(p).
Poly polyMod(Poly a, const Poly& b, int p) {
    trim(a);
    const int degB = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= degB) {
        int shift = static_cast<int>(a.size()) - 1 - degB;
        int c = a.back();
        for (int j = 0; j <= degB; ++j) {
            int& slot = a[shift + j];
            slot = ((slot - c * b[j]) % p + p) % p;
        }
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

bool dividesExactly(const Poly& divisor, const Poly& f, int p) {
    Poly r = polyMod(f, divisor, p);
    return r.empty();
}

// A monic polynomial of degree >= 2 is irreducible iff no monic polynomial of
// degree in [1, deg/2] divides it. Orders here are tiny, so trial division
// over all monic candidates is plenty.
bool isIrreducible(const Poly& f, int p) {
    const int deg = static_cast<int>(f.size()) - 1;
    if (deg == 1) return true;
    for (int d = 1; 2 * d <= deg; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long code = 0; code < count; ++code) {
            Poly g(d + 1, 0);
            long long c = code;
            for (int i = 0; i < d; ++i) {
                g[i] = static_cast<int>(c % p);
                c /= p;
            }
            g[d] = 1;
            if (dividesExactly(g, f, p)) return false;
        }
    }
    return true;
}

// Smallest monic irreducible of degree e over GF(p), ordered by the integer
// encoding sum c_j p^j of the non-leading coefficients.
Poly smallestIrreducible(int p, int e) {
    long long count = 1;
    for (int i = 0; i < e; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
        Poly f(e + 1, 0);
        long long c = code;
        for (int i = 0; i < e; ++i) {
            f[i] = static_cast<int>(c % p);
            c /= p;
        }
        f[e] = 1;
        if (isIrreducible(f, p)) return f;
    }
    fail(Errc::not_prime, "no irreducible polynomial found (p not prime?)");
}

Poly elementToPoly(int a, int p, int e) {
    Poly f(e, 0);
    for (int i = 0; i < e; ++i) {
        f[i] = a % p;
        a /= p;
    }
    return f;
}

int polyToElement(const Poly& f, int p, int e) {
    int a = 0;
    for (int i = e - 1; i >= 0; --i) a = a * p + (i < static_cast<int>(f.size()) ? f[i] : 0);
    return a;
}

}  // namespace

Field::Field(int p, int e) : p_(p), e_(e) {
    require(isPrime(p), Errc::not_prime, "p = " + std::to_string(p) + " is not prime");
    require(e >= 1, Errc::bad_dimension, "extension degree must be >= 1");
    long long q = 1;
    for (int i = 0; i < e; ++i) {
        q *= p;
        require(q <= kMaxOrder, Errc::order_too_large,
                "field order exceeds cap " + std::to_string(kMaxOrder));
    }
    q_ = static_cast<int>(q);
    reduction_ = smallestIrreducible(p, e);

    addTable_.resize(static_cast<std::size_t>(q_) * q_);
    mulTable_.resize(static_cast<std::size_t>(q_) * q_);
    negTable_.resize(q_);
    invTable_.assign(q_, 0);

    for (int a = 0; a < q_; ++a) {
        Poly fa = elementToPoly(a, p_, e_);
        Poly na(e_, 0);
        for (int i = 0; i < e_; ++i) na[i] = (p_ - fa[i]) % p_;
        negTable_[a] = static_cast<std::uint8_t>(polyToElement(na, p_, e_));
        for (int b = 0; b < q_; ++b) {
            Poly fb = elementToPoly(b, p_, e_);
            Poly s(e_, 0);
            for (int i = 0; i < e_; ++i) s[i] = (fa[i] + fb[i]) % p_;
            addTable_[idx(a, b)] = static_cast<std::uint8_t>(polyToElement(s, p_, e_));
            Poly m = polyMulMod(fa, fb, reduction_, p_);
            mulTable_[idx(a, b)] = static_cast<std::uint8_t>(polyToElement(m, p_, e_));
        }
    }
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mulTable_[idx(a, b)] == 1) {
                invTable_[a] = static_cast<std::uint8_t>(b);
                break;
            }
}

std::uint8_t Field::pow(std::uint8_t a, unsigned long long k) const {
    std::uint8_t acc = 1;
    std::uint8_t base = a;
    while (k > 0) {
        if (k & 1) acc = mul(acc, base);
        base = mul(base, base);
        k >>= 1;
    }
    return acc;
}

}  // namespace sympolar
