#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "sympolar/gf.hpp"

namespace sympolar {

/// Coordinate vector over GF(q); entries are field element indices.
using Vec = std::vector<std::uint8_t>;

/// A subspace of F_q^n stored as its canonical reduced row echelon basis.
/// Two Subspace values describe the same point set iff they compare equal,
/// which makes Subspace directly usable as a set/map key. The zero subspace
/// is an empty row list.
class Subspace {
public:
    Subspace() = default;

    static Subspace zero(int ambient) { return Subspace(ambient, {}); }

    /// Wraps rows that are already a canonical RREF basis (no re-reduction).
    static Subspace fromCanonicalRows(int ambient, std::vector<Vec> rows) {
        return Subspace(ambient, std::move(rows));
    }

    int ambient() const noexcept { return ambient_; }
    int dim() const noexcept { return static_cast<int>(rows_.size()); }
    bool isZero() const noexcept { return rows_.empty(); }
    const std::vector<Vec>& rows() const noexcept { return rows_; }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
    }

    // Total order: ambient, then dimension, then row-major entries.
    friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
        if (auto c = a.ambient_ <=> b.ambient_; c != 0) return c;
        if (auto c = a.rows_.size() <=> b.rows_.size(); c != 0) return c;
        return a.rows_ <=> b.rows_;
    }

private:
    Subspace(int ambient, std::vector<Vec> rows) : ambient_(ambient), rows_(std::move(rows)) {}

    int ambient_ = 0;
    std::vector<Vec> rows_;
};

/// Canonical RREF basis of the span of `rows`; idempotent and insensitive to
/// row order. Throws Errc::length_mismatch if rows differ in length.
Subspace reduce(const Field& k, int ambient, const std::vector<Vec>& rows);

Subspace sum(const Field& k, const Subspace& a, const Subspace& b);
Subspace intersect(const Field& k, const Subspace& a, const Subspace& b);

/// dim(a ∩ b) without materializing the intersection (rank of stacked bases).
int dimIntersect(const Field& k, const Subspace& a, const Subspace& b);

/// True iff b ⊆ a (every row of b reduces to zero against a's basis).
bool contains(const Field& k, const Subspace& a, const Subspace& b);

bool containsVector(const Field& k, const Subspace& a, const Vec& v);

/// Checks the structural canonical-RREF invariants without reducing.
bool isCanonicalRref(const Field& k, int ambient, const std::vector<Vec>& rows);

/// All k-dimensional subspaces of `within`, sorted in canonical
/// (lexicographic) order. Count equals the Gaussian binomial.
std::vector<Subspace> enumerateSubspaces(const Field& k, const Subspace& within, int dim);

Subspace fullSpace(int ambient);

/// Span of the given standard basis vectors (0-indexed coordinates).
Subspace coordinateSpan(int ambient, const std::vector<int>& coords);

namespace detail {

/// Dense row-major matrix over GF(q); scratch type for eliminations.
struct Mat {
    int rows = 0, cols = 0;
    std::vector<std::uint8_t> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    std::uint8_t& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    std::uint8_t at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

/// In-place reduced row echelon form; returns the rank. Zero rows end up at
/// the bottom; pivot entries are 1 and pivot columns are cleared elsewhere.
int rrefInPlace(const Field& k, Mat& m);

int rankOf(const Field& k, Mat m);

Mat stackRows(const Subspace& a, const Subspace& b);

/// Reduces v in place against the canonical basis rows of a (coset
/// representative mod a).
void reduceVectorInPlace(const Field& k, const Subspace& a, Vec& v);

}  // namespace detail

}  // namespace sympolar
