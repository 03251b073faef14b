#pragma once

#include <cstdint>
#include <vector>

#include "sympolar/error.hpp"

namespace sympolar {

/// Finite field GF(p^e) with dense lookup tables, for prime powers up to 64.
///
/// Element i in [0,q) encodes the coefficient vector (c0,...,c_{e-1}) of a
/// residue polynomial, i = sum c_j * p^j. Extension arithmetic is performed
/// modulo the lexicographically smallest monic irreducible of degree e over
/// GF(p), so element indexing is identical across runs and machines.
class Field {
public:
    static constexpr int kMaxOrder = 64;

    Field(int p, int e);

    int p() const noexcept { return p_; }
    int e() const noexcept { return e_; }
    int q() const noexcept { return q_; }

    /// Coefficients of the reduction polynomial, constant term first,
    /// length e+1, leading coefficient 1. For e = 1 this is just x.
    const std::vector<int>& reductionPoly() const noexcept { return reduction_; }

    std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return addTable_[idx(a, b)]; }
    std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mulTable_[idx(a, b)]; }
    std::uint8_t neg(std::uint8_t a) const { return negTable_[a]; }
    std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return add(a, neg(b)); }

    std::uint8_t inv(std::uint8_t a) const {
        require(a != 0, Errc::zero_inverse, "inverse of zero");
        return invTable_[a];
    }

    std::uint8_t pow(std::uint8_t a, unsigned long long k) const;

    bool operator==(const Field& o) const {
        return p_ == o.p_ && e_ == o.e_ && reduction_ == o.reduction_ &&
               addTable_ == o.addTable_ && mulTable_ == o.mulTable_;
    }

private:
    std::size_t idx(std::uint8_t a, std::uint8_t b) const {
        return static_cast<std::size_t>(a) * q_ + b;
    }

    int p_, e_, q_;
    std::vector<int> reduction_;
    std::vector<std::uint8_t> addTable_, mulTable_, negTable_, invTable_;
};

bool isPrime(int n);

/// Factor q as p^e; throws Errc::not_prime unless q is a prime power >= 2.
std::pair<int, int> factorPrimePower(long long q);

}  // namespace sympolar
