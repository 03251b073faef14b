#include "sympolar/families.hpp"

#include <algorithm>

namespace sympolar {

Family::Family(const PolarSpace& space, int m, int t) : space_(&space), m_(m), t_(t) {
    require(m >= 0 && m <= space.nu(), Errc::bad_dimension, "family dimension outside [0, nu]");
}

void Family::insert(Subspace f) {
    require(f.ambient() == space_->ambient(), Errc::ambient_mismatch, "member in wrong space");
    require(f.dim() == m_, Errc::bad_dimension, "member has wrong dimension");
    require(space_->isIsotropic(f), Errc::non_isotropic_seed, "member not totally isotropic");
    auto it = std::lower_bound(members_.begin(), members_.end(), f);
    if (it != members_.end() && *it == f) return;
    members_.insert(it, std::move(f));
}

void Family::insertAll(std::vector<Subspace> fs) {
    for (const Subspace& f : fs) {
        require(f.ambient() == space_->ambient(), Errc::ambient_mismatch, "member in wrong space");
        require(f.dim() == m_, Errc::bad_dimension, "member has wrong dimension");
        require(space_->isIsotropic(f), Errc::non_isotropic_seed, "member not totally isotropic");
    }
    members_.insert(members_.end(), std::make_move_iterator(fs.begin()),
                    std::make_move_iterator(fs.end()));
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Family::containsMember(const Subspace& f) const {
    return std::binary_search(members_.begin(), members_.end(), f);
}

Family mSetWithin(const PolarSpace& sp, int m, const Subspace& a) {
    require(a.ambient() == sp.ambient(), Errc::ambient_mismatch, "A lives in the wrong space");
    require(m >= 0 && m <= sp.nu(), Errc::bad_dimension, "m outside [0, nu]");
    Family fam(sp, m, 0);
    PolarSpace::EnumQuery query;
    query.m = m;
    query.within = a;
    fam.insertAll(sp.enumerateIsotropic(query));
    return fam;
}

static void checkH1Seeds(const PolarSpace& sp, const Subspace& t, const Subspace& u, int tParam) {
    const Field& k = sp.field();
    require(tParam >= 1, Errc::seed_shape, "t must be >= 1");
    require(t.dim() == tParam, Errc::seed_shape, "dim T != t");
    require(u.dim() > tParam, Errc::seed_shape, "dim U must exceed t");
    require(sp.isIsotropic(t) && sp.isIsotropic(u), Errc::non_isotropic_seed,
            "T and U must be totally isotropic");
    require(dimIntersect(k, t, u) == tParam - 1, Errc::seed_shape, "dim(T∩U) != t-1");
}

Family buildH1(const PolarSpace& sp, const Subspace& t, const Subspace& u, int tParam) {
    checkH1Seeds(sp, t, u, tParam);
    const Field& k = sp.field();
    const int m = u.dim();
    const Subspace join = sum(k, t, u);

    Family fam(sp, m, tParam);
    std::vector<Subspace> collected;
    PolarSpace::EnumQuery query;
    query.m = m;
    query.containing = t;
    sp.forEachIsotropic(query, [&](const Subspace& f) {
        if (dimIntersect(k, f, u) >= tParam) collected.push_back(f);
        return true;
    });
    PolarSpace::EnumQuery inJoin;
    inJoin.m = m;
    inJoin.within = join;
    sp.forEachIsotropic(inJoin, [&](const Subspace& f) {
        collected.push_back(f);
        return true;
    });
    fam.insertAll(std::move(collected));
    return fam;
}

Family buildH2(const PolarSpace& sp, const Subspace& z, int m, int t) {
    require(t >= 1, Errc::seed_shape, "t must be >= 1");
    require(z.dim() == t + 2, Errc::seed_shape, "dim Z != t+2");
    require(z.ambient() == sp.ambient(), Errc::ambient_mismatch, "Z lives in the wrong space");
    Family fam(sp, m, t);
    if (t + 1 > sp.nu()) return fam;  // no isotropic (t+1)-subspaces at all
    // F meets Z in dim >= t+1 iff F contains an isotropic (t+1)-subspace of
    // Z (the meet is isotropic because F is).
    PolarSpace::EnumQuery seeds;
    seeds.m = t + 1;
    seeds.within = z;
    std::vector<Subspace> collected;
    sp.forEachIsotropic(seeds, [&](const Subspace& w) {
        PolarSpace::EnumQuery query;
        query.m = m;
        query.containing = w;
        sp.forEachIsotropic(query, [&](const Subspace& f) {
            collected.push_back(f);
            return true;
        });
        return true;
    });
    fam.insertAll(std::move(collected));
    return fam;
}

Family buildTrivial(const PolarSpace& sp, const Subspace& t, int m) {
    require(!t.isZero() && t.dim() <= m, Errc::seed_shape, "need 1 <= dim T <= m");
    require(sp.isIsotropic(t), Errc::non_isotropic_seed, "T must be totally isotropic");
    Family fam(sp, m, t.dim());
    PolarSpace::EnumQuery query;
    query.m = m;
    query.containing = t;
    fam.insertAll(sp.enumerateIsotropic(query));
    return fam;
}

bool isTIntersecting(const Family& fam, int t) {
    const Field& k = fam.space().field();
    const auto& ms = fam.members();
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j)
            if (dimIntersect(k, ms[i], ms[j]) < t) return false;
    return true;
}

bool isTIntersectingVia(const Family& fam, int t, const Subspace& reference) {
    const Field& k = fam.space().field();
    const auto& ms = fam.members();
    if (ms.size() < 2) return true;

    std::map<Subspace, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < ms.size(); ++i)
        groups[intersect(k, ms[i], reference)].push_back(i);

    std::vector<const Subspace*> keys;
    std::vector<const std::vector<std::size_t>*> idx;
    for (const auto& [w, members] : groups) {
        keys.push_back(&w);
        idx.push_back(&members);
    }
    for (std::size_t a = 0; a < keys.size(); ++a) {
        for (std::size_t b = a; b < keys.size(); ++b) {
            const int certified = (a == b) ? keys[a]->dim() : dimIntersect(k, *keys[a], *keys[b]);
            if (certified >= t) continue;  // F1∩F2 ⊇ W1∩W2
            for (std::size_t i : *idx[a])
                for (std::size_t j : *idx[b]) {
                    if (a == b && j <= i) continue;
                    if (dimIntersect(k, ms[i], ms[j]) < t) return false;
                }
        }
    }
    return true;
}

static Subspace meetOfAll(const Field& k, const std::vector<Subspace>& ms) {
    Subspace meet = ms.front();
    for (std::size_t i = 1; i < ms.size() && !meet.isZero(); ++i) meet = intersect(k, meet, ms[i]);
    return meet;
}

bool isTrivialFamily(const Family& fam, int t) {
    require(!fam.empty(), Errc::empty_family, "triviality is undefined for the empty family");
    return meetOfAll(fam.space().field(), fam.members()).dim() >= t;
}

static bool coversAll(const Field& k, const Subspace& s, const std::vector<Subspace>& ms, int t) {
    for (const Subspace& f : ms)
        if (dimIntersect(k, s, f) < t) return false;
    return true;
}

// All candidate covers of dimension s: every t-cover S satisfies
// dim(S ∩ F0) >= t, so S contains a t-subspace of the first member.
static bool forEachCoverCandidate(const Family& fam, int t, int s,
                                  const std::function<bool(const Subspace&)>& visit) {
    const PolarSpace& sp = fam.space();
    const Subspace& f0 = fam.members().front();
    for (const Subspace& w : enumerateSubspaces(sp.field(), f0, t)) {
        PolarSpace::EnumQuery query;
        query.m = s;
        query.containing = w;
        if (!sp.forEachIsotropic(query, visit)) return false;
    }
    return true;
}

CoverResult coveringNumber(const Family& fam, int t) {
    require(!fam.empty(), Errc::empty_family, "covering number of the empty family");
    const PolarSpace& sp = fam.space();
    const Field& k = sp.field();

    const Subspace meet = meetOfAll(k, fam.members());
    if (meet.dim() >= t) return {t, enumerateSubspaces(k, meet, t).front()};

    for (int s = t + 1; s <= fam.m(); ++s) {
        CoverResult found;
        bool hit = !forEachCoverCandidate(fam, t, s, [&](const Subspace& cand) {
            if (!coversAll(k, cand, fam.members(), t)) return true;
            found = {s, cand};
            return false;  // stop at the first cover in candidate order
        });
        if (hit) return found;
    }
    fail(Errc::precondition_violated, "no cover found; family is not t-intersecting");
}

CoverSetResult coverSet(const Family& fam, int t) {
    const CoverResult tau = coveringNumber(fam, t);
    require(tau.tau == t + 1, Errc::wrong_tau,
            "cover set requires tau = t+1, got " + std::to_string(tau.tau));
    const Field& k = fam.space().field();
    std::vector<Subspace> covers;
    forEachCoverCandidate(fam, t, t + 1, [&](const Subspace& cand) {
        if (coversAll(k, cand, fam.members(), t)) covers.push_back(cand);
        return true;
    });
    std::sort(covers.begin(), covers.end());
    covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
    Subspace span = covers.front();
    for (std::size_t i = 1; i < covers.size(); ++i) span = sum(k, span, covers[i]);
    return {std::move(covers), std::move(span)};
}

namespace {

// Lattice of isotropic subspaces between `base` and a small hull, with the
// member count of {F in P_m : F ∩ hull = W} attached by downward recursion:
// E(W) = N(nu, m, dim W) - sum of E over proper isotropic oversubspaces.
struct LatticeCounts {
    std::vector<Subspace> spaces;  // sorted by dim descending
    std::vector<ExactInt> exact;
};

}  // namespace

// E values for all isotropic W with lo ⊆ W ⊆ hull, where anzahlOf(W) is the
// number of F in P_m containing W (zero when dim W > m).
static LatticeCounts latticeCounts(const PolarSpace& sp, const Subspace& lo, const Subspace& hull,
                                   const std::function<ExactInt(const Subspace&)>& anzahlOf) {
    const Field& k = sp.field();
    LatticeCounts out;
    for (int d = hull.dim(); d >= lo.dim(); --d) {
        // isotropic subspaces of `hull` of dimension d containing `lo`
        PolarSpace::EnumQuery between;
        between.m = d;
        between.containing = lo.isZero() ? std::optional<Subspace>{} : std::optional<Subspace>{lo};
        between.within = hull;
        if (d > sp.nu()) continue;  // no isotropic subspace that large
        for (const Subspace& w : sp.enumerateIsotropic(between)) out.spaces.push_back(w);
    }
    out.exact.resize(out.spaces.size());
    for (std::size_t i = 0; i < out.spaces.size(); ++i) {
        ExactInt e = anzahlOf(out.spaces[i]);
        for (std::size_t j = 0; j < i; ++j)
            if (out.spaces[j].dim() > out.spaces[i].dim() &&
                contains(k, out.spaces[j], out.spaces[i]))
                e -= out.exact[j];
        out.exact[i] = std::move(e);
    }
    return out;
}

ExactInt countH1(const PolarSpace& sp, const Subspace& t, const Subspace& u, int tParam) {
    checkH1Seeds(sp, t, u, tParam);
    const Field& k = sp.field();
    const int m = u.dim();
    const long nu = sp.nu();
    const unsigned long q = k.q();
    const Subspace join = sum(k, t, u);
    require(join.dim() == m + 1, Errc::seed_shape, "dim(T+U) != m+1");

    ExactInt throughT = 0;  // members containing T that meet T+U in dim >= t+1
    ExactInt offT = 0;      // members inside T+U not containing T

    if (sp.isIsotropic(join)) {
        // All subspaces between T and T+U are isotropic, and E(W) depends
        // only on dim W, so the recursion collapses to one value per
        // dimension in the (m+1-t)-dimensional quotient.
        const int depth = m + 1 - tParam;
        std::vector<ExactInt> e(m + 2);
        for (int dim = m + 1; dim >= tParam; --dim) {
            ExactInt val = anzahlN(nu, m, dim, q);
            for (int higher = dim + 1; higher <= m + 1; ++higher)
                val -= gaussian(m + 1 - dim, higher - dim, q) * e[higher];
            e[dim] = std::move(val);
        }
        for (int dim = tParam + 1; dim <= m; ++dim)
            throughT += gaussian(depth, dim - tParam, q) * e[dim];
        offT = powQ(q, static_cast<unsigned long>(m - tParam + 1)) * gaussian(tParam, 1, q);
    } else {
        LatticeCounts lattice = latticeCounts(sp, t, join, [&](const Subspace& w) {
            return anzahlN(nu, m, w.dim(), q);
        });
        for (std::size_t i = 0; i < lattice.spaces.size(); ++i) {
            const int dim = lattice.spaces[i].dim();
            if (dim >= tParam + 1 && dim <= m) throughT += lattice.exact[i];
        }
        PolarSpace::EnumQuery inJoin;
        inJoin.m = m;
        inJoin.within = join;
        sp.forEachIsotropic(inJoin, [&](const Subspace& f) {
            if (!contains(k, f, t)) offT += 1;
            return true;
        });
    }
    return throughT + offT;
}

std::map<int, ExactInt> profileCount(const PolarSpace& sp, int m, const Subspace& reference,
                                     const std::optional<Subspace>& containing,
                                     const std::optional<Subspace>& excludeContaining) {
    const Field& k = sp.field();
    const long nu = sp.nu();
    const unsigned long q = k.q();
    require(m >= 0 && m <= nu, Errc::bad_dimension, "m outside [0, nu]");
    require(reference.ambient() == sp.ambient(), Errc::ambient_mismatch, "reference ambient");

    auto profileFor = [&](const Subspace& c) -> std::map<int, ExactInt> {
        std::map<int, ExactInt> buckets;
        if (!c.isZero() && !sp.isIsotropic(c)) return buckets;  // no isotropic F contains c
        if (c.dim() > m) return buckets;
        if (reference.dim() == sp.ambient()) {
            buckets[m] = anzahlN(nu, m, c.dim(), q);
            return buckets;
        }
        const Subspace core = intersect(k, c, reference);
        LatticeCounts lattice = latticeCounts(sp, core, reference, [&](const Subspace& w) {
            const Subspace wc = sum(k, w, c);
            if (!sp.isIsotropic(wc)) return ExactInt(0);
            return anzahlN(nu, m, wc.dim(), q);
        });
        for (std::size_t i = 0; i < lattice.spaces.size(); ++i) {
            if (lattice.exact[i] == 0) continue;
            buckets[lattice.spaces[i].dim()] += lattice.exact[i];
        }
        return buckets;
    };

    const Subspace base = containing ? *containing : Subspace::zero(sp.ambient());
    if (containing)
        require(sp.isIsotropic(base), Errc::non_isotropic_seed, "containing must be isotropic");
    std::map<int, ExactInt> result = profileFor(base);
    if (excludeContaining) {
        const Subspace both = sum(k, base, *excludeContaining);
        for (const auto& [j, n] : profileFor(both)) result[j] -= n;
    }
    for (auto it = result.begin(); it != result.end();)
        it = (it->second == 0) ? result.erase(it) : std::next(it);
    return result;
}

std::size_t countMembersContaining(const Family& fam, const Subspace& a) {
    const Field& k = fam.space().field();
    std::size_t n = 0;
    for (const Subspace& f : fam.members())
        if (contains(k, f, a)) ++n;
    return n;
}

FsWitnessResult fsWitness(const PolarSpace& sp, const Family& fam, const Subspace& a,
                          const Subspace& y) {
    const Field& k = sp.field();
    const int m = fam.m();
    const int t = fam.t();
    require(sp.isIsotropic(a), Errc::precondition_violated, "A must be totally isotropic");
    require(a.dim() >= 1 && a.dim() <= m - 1, Errc::precondition_violated,
            "need 1 <= dim A <= m-1");
    require(fam.containsMember(y), Errc::precondition_violated, "Y must be a member");
    const int r = dimIntersect(k, a, y);
    require(r <= t - 1, Errc::precondition_violated, "need dim(A∩Y) <= t-1");

    const Subspace ay = sum(k, a, y);
    PolarSpace::EnumQuery query;
    query.m = a.dim() + t - r;
    query.containing = a;
    query.within = ay;
    const std::vector<Subspace> extensions = sp.enumerateIsotropic(query);

    const std::size_t famA = countMembersContaining(fam, a);
    if (extensions.empty()) {
        // Only reachable when no member contains A; vacuous inequality.
        return {a, famA == 0};
    }
    Subspace best = extensions.front();
    std::size_t bestCount = countMembersContaining(fam, best);
    for (std::size_t i = 1; i < extensions.size(); ++i) {
        const std::size_t c = countMembersContaining(fam, extensions[i]);
        if (c > bestCount) {  // ties keep the canonically first
            best = extensions[i];
            bestCount = c;
        }
    }
    const ExactInt bound = gaussian(m - r, t - r, k.q()) * ExactInt(static_cast<unsigned long>(bestCount));
    return {best, ExactInt(static_cast<unsigned long>(famA)) <= bound};
}

SeedPair canonicalSeeds(const PolarSpace& sp, int m, int t, SeedKind kind) {
    const int nu = sp.nu();
    const int n = sp.ambient();
    require(t >= 1 && t < m, Errc::bad_dimension, "need 1 <= t < m");
    std::vector<int> tc, uc;
    for (int i = 0; i < t; ++i) tc.push_back(i);
    if (kind == SeedKind::isotropicJoin) {
        require(nu >= m + 1, Errc::bad_dimension, "isotropicJoin needs nu >= m+1");
        for (int i = 1; i <= m; ++i) uc.push_back(i);
    } else {
        require(nu >= m, Errc::bad_dimension, "hyperbolicJoin needs nu >= m");
        for (int i = 1; i < m; ++i) uc.push_back(i);
        uc.push_back(nu);  // f_1
    }
    return {coordinateSpan(n, tc), coordinateSpan(n, uc)};
}

Subspace canonicalZSeed(const PolarSpace& sp, int t) {
    require(t >= 1 && sp.nu() >= t + 2, Errc::bad_dimension, "zSeed needs nu >= t+2");
    std::vector<int> zc;
    for (int i = 0; i < t + 2; ++i) zc.push_back(i);
    return coordinateSpan(sp.ambient(), zc);
}

ExactInt isotropicCount(const PolarSpace& sp, int m) {
    return anzahlN(sp.nu(), m, 0, sp.field().q());
}

bool isMaximalFamily(const Family& fam, int t) {
    const PolarSpace& sp = fam.space();
    const Field& k = sp.field();
    PolarSpace::EnumQuery query;
    query.m = fam.m();
    bool maximal = true;
    sp.forEachIsotropic(query, [&](const Subspace& f) {
        if (fam.containsMember(f)) return true;
        for (const Subspace& g : fam.members())
            if (dimIntersect(k, f, g) < t) return true;  // f conflicts; keep going
        maximal = false;  // f extends the family
        return false;
    });
    return maximal;
}

}  // namespace sympolar
