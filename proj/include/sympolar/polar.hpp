#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "sympolar/subspace.hpp"

namespace sympolar {

/// Symplectic polar space: F_q^{2nu} with the standard alternating form
/// given by the block matrix J = [[0, I],[-I, 0]] in the e/f basis split.
/// Owns isotropy tests, subspace type, perp, and enumeration of totally
/// isotropic subspaces.
class PolarSpace {
public:
    PolarSpace(Field field, int nu);

    const Field& field() const noexcept { return field_; }
    int nu() const noexcept { return nu_; }
    int ambient() const noexcept { return 2 * nu_; }
    const detail::Mat& gram() const noexcept { return gram_; }

    /// f(u, v) = u^T J v.
    std::uint8_t formEval(const Vec& u, const Vec& v) const;

    bool isIsotropic(const Subspace& w) const;

    /// (m, s) with m = dim W and 2s = rank of the Gram matrix of any basis.
    /// s = 0 iff W is totally isotropic. Throws Errc::zero_subspace on dim 0.
    std::pair<int, int> typeOf(const Subspace& w) const;

    /// {v : f(v, w) = 0 for all w in W}; dim = 2nu - dim W.
    Subspace perp(const Subspace& w) const;

    struct EnumQuery {
        int m = 0;
        std::optional<Subspace> containing;  // must be totally isotropic
        std::optional<Subspace> within;
    };

    /// Visits every totally isotropic m-subspace satisfying the constraints
    /// exactly once, in a deterministic (unsorted) DFS order. Return false
    /// from the visitor to stop early. Returns false iff stopped early.
    bool forEachIsotropic(const EnumQuery& query,
                          const std::function<bool(const Subspace&)>& visit) const;

    /// Materialized stream in canonical lexicographic order.
    std::vector<Subspace> enumerateIsotropic(const EnumQuery& query) const;

    unsigned long long countIsotropic(const EnumQuery& query) const;

private:
    Field field_;
    int nu_;
    detail::Mat gram_;
};

namespace detail {

/// Core enumerator: totally isotropic m-subspaces of (F_q^d, G) for an
/// arbitrary alternating Gram matrix G (possibly degenerate), optionally
/// restricted to a subspace. Emits canonical RREF bases, each exactly once,
/// by canonical-parent DFS: a basis is grown pivot by pivot, and a candidate
/// row is accepted only when appending it keeps the matrix in RREF as-is.
bool forEachIsotropicRaw(const Field& k, int d, const Mat& gram, int m,
                         const std::optional<Subspace>& within,
                         const std::function<bool(const Subspace&)>& visit);

}  // namespace detail

}  // namespace sympolar
