#pragma once

#include <map>
#include <optional>
#include <vector>

#include "sympolar/polar.hpp"
#include "sympolar/qcount.hpp"

namespace sympolar {

/// A deduplicated set of m-dimensional totally isotropic subspaces together
/// with the intersection parameter t. Members are kept sorted in canonical
/// order, so equal families compare equal member-by-member.
class Family {
public:
    Family(const PolarSpace& space, int m, int t);

    const PolarSpace& space() const { return *space_; }
    int m() const noexcept { return m_; }
    int t() const noexcept { return t_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    const std::vector<Subspace>& members() const noexcept { return members_; }

    /// Validates dimension and isotropy, then inserts (duplicates ignored).
    void insert(Subspace f);

    /// Bulk insert without per-member sorting cost.
    void insertAll(std::vector<Subspace> fs);

    bool containsMember(const Subspace& f) const;

    friend bool operator==(const Family& a, const Family& b) {
        return a.m_ == b.m_ && a.members_ == b.members_;
    }

private:
    const PolarSpace* space_;
    int m_, t_;
    std::vector<Subspace> members_;  // sorted, unique
};

/// All totally isotropic m-subspaces contained in A.
Family mSetWithin(const PolarSpace& sp, int m, const Subspace& a);

/// H1-type family: {F : T ⊂ F, dim(F∩U) >= t} ∪ {isotropic m-subspaces of
/// T+U}, for T totally isotropic of dim t, U totally isotropic of dim m,
/// dim(T∩U) = t-1.
Family buildH1(const PolarSpace& sp, const Subspace& t, const Subspace& u, int tParam);

/// H2-type family: {F : dim(F∩Z) >= t+1} for dim Z = t+2.
Family buildH2(const PolarSpace& sp, const Subspace& z, int m, int t);

/// All totally isotropic m-subspaces containing the totally isotropic T;
/// the trivial comparison family with t = dim T.
Family buildTrivial(const PolarSpace& sp, const Subspace& t, int m);

/// Pairwise check with early exit; empty and singleton families are
/// t-intersecting by convention.
bool isTIntersecting(const Family& fam, int t);

/// Same predicate, decided by grouping members by their exact meet with a
/// reference subspace: pairs whose group meets already intersect in
/// dimension >= t are certified wholesale, remaining group pairs are checked
/// member-by-member. Exact and complete for any reference; fast when the
/// family concentrates on the reference (such as T+U or Z).
bool isTIntersectingVia(const Family& fam, int t, const Subspace& reference);

/// True iff the meet of all members has dimension >= t. Throws
/// Errc::empty_family on the empty family.
bool isTrivialFamily(const Family& fam, int t);

struct CoverResult {
    int tau = 0;
    Subspace witness;
};

/// Smallest s such that some totally isotropic s-subspace meets every member
/// in dimension >= t, with one witness. Requires a nonempty t-intersecting
/// family; always t <= tau <= m, and tau = t iff the family is trivial.
CoverResult coveringNumber(const Family& fam, int t);

struct CoverSetResult {
    std::vector<Subspace> covers;  // all (t+1)-dimensional isotropic t-covers
    Subspace span;                 // their sum
};

/// Requires tau_t(fam) = t+1 (Errc::wrong_tau otherwise).
CoverSetResult coverSet(const Family& fam, int t);

/// |H1(T,U)| by downward recursion over the lattice of isotropic subspaces
/// between T and T+U; never enumerates the ambient family of m-subspaces.
ExactInt countH1(const PolarSpace& sp, const Subspace& t, const Subspace& u, int tParam);

/// For each j, the number of totally isotropic m-subspaces F satisfying the
/// containment constraints with dim(F ∩ reference) = j. Zero buckets are
/// omitted.
std::map<int, ExactInt> profileCount(const PolarSpace& sp, int m, const Subspace& reference,
                                     const std::optional<Subspace>& containing,
                                     const std::optional<Subspace>& excludeContaining);

struct FsWitnessResult {
    Subspace r;
    bool ok;
};

/// Cover-extension witness: for A totally isotropic with dim(A∩Y) = r <=
/// t-1 and Y a member, picks the isotropic (a+t-r)-subspace R of A+Y through
/// A maximizing the number of members containing it, and evaluates
/// |fam_A| <= [m-r t-r] |fam_R| exactly.
FsWitnessResult fsWitness(const PolarSpace& sp, const Family& fam, const Subspace& a,
                          const Subspace& y);

enum class SeedKind { isotropicJoin, hyperbolicJoin };

struct SeedPair {
    Subspace t, u;
};

/// Deterministic seeds on the standard basis: T = <e_1..e_t> and either
/// U = <e_2..e_{m+1}> (T+U totally isotropic, needs nu >= m+1) or
/// U = <e_2..e_m, f_1> (T+U of type (m+1,1), needs nu >= m).
SeedPair canonicalSeeds(const PolarSpace& sp, int m, int t, SeedKind kind);

/// Z = <e_1..e_{t+2}>; needs nu >= t+2.
Subspace canonicalZSeed(const PolarSpace& sp, int t);

/// Number of members of the ambient isotropic m-family (|P_m|).
ExactInt isotropicCount(const PolarSpace& sp, int m);

/// Streams every isotropic m-subspace outside the family and reports whether
/// any of them is t-compatible with all members (in which case the family is
/// not maximal). Caller is responsible for checking |P_m| is enumerable.
bool isMaximalFamily(const Family& fam, int t);

/// Members of fam containing A.
std::size_t countMembersContaining(const Family& fam, const Subspace& a);

}  // namespace sympolar
