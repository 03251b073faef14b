#include "sympolar/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

namespace sympolar {

namespace {

// Fixed-width bitset over vertex indices.
struct VertexSet {
    std::vector<std::uint64_t> words;

    explicit VertexSet(std::size_t n = 0) : words((n + 63) / 64, 0) {}
    void set(std::size_t i) { words[i >> 6] |= std::uint64_t(1) << (i & 63); }
    bool test(std::size_t i) const { return (words[i >> 6] >> (i & 63)) & 1; }
};

struct SearchContext {
    SearchContext(const PolarSpace& space, int m_, int t_, SearchOptions o)
        : sp(space), m(m_), t(t_), options(std::move(o)) {}

    const PolarSpace& sp;
    int m, t;
    SearchOptions options;
    std::vector<Subspace> vertices;       // P_m, canonical order
    std::vector<VertexSet> compatible;    // adjacency: dim(v_i ∩ v_j) >= t

    std::atomic<std::uint64_t> best{0};
    std::mutex archiveMutex;
    std::vector<std::vector<std::int32_t>> archive;  // candidate optima (vertex index lists)

    bool compat(std::int32_t a, std::int32_t b) const { return compatible[a].test(b); }
};

void raiseBest(SearchContext& ctx, std::uint64_t size) {
    std::uint64_t cur = ctx.best.load(std::memory_order_relaxed);
    while (size > cur && !ctx.best.compare_exchange_weak(cur, size)) {
    }
}

// chosen is grown in increasing vertex order; meet = fold-intersection of the
// chosen members. Records every non-trivial family at least as large as the
// best known size; the final filter keeps exactly the maximum ones, so the
// collected set is schedule-independent.
void expand(SearchContext& ctx, std::vector<std::int32_t>& chosen, const Subspace& meet,
            const std::vector<std::int32_t>& candidates) {
    const Field& k = ctx.sp.field();

    if (chosen.size() >= 2 && meet.dim() < ctx.t) {
        const std::uint64_t size = chosen.size();
        if (size >= ctx.best.load(std::memory_order_relaxed)) {
            raiseBest(ctx, size);
            std::lock_guard<std::mutex> lock(ctx.archiveMutex);
            ctx.archive.push_back(chosen);
        }
    }

    if (candidates.empty()) return;

    // Whole-branch triviality prune: if even the meet of chosen plus every
    // remaining candidate has dimension >= t, all completions are trivial.
    if (!ctx.options.disableMeetPrune && !chosen.empty()) {
        Subspace all = meet;
        bool below = all.dim() < ctx.t;
        for (std::size_t i = 0; i < candidates.size() && !below; ++i) {
            all = intersect(k, all, ctx.vertices[candidates[i]]);
            below = all.dim() < ctx.t;
        }
        if (!below) return;
    }

    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (!ctx.options.disableBoundPrune &&
            chosen.size() + (candidates.size() - i) < ctx.best.load(std::memory_order_relaxed))
            break;
        const std::int32_t v = candidates[i];
        std::vector<std::int32_t> next;
        next.reserve(candidates.size() - i - 1);
        for (std::size_t j = i + 1; j < candidates.size(); ++j)
            if (ctx.compat(v, candidates[j])) next.push_back(candidates[j]);
        const Subspace newMeet =
            chosen.empty() ? ctx.vertices[v] : intersect(k, meet, ctx.vertices[v]);
        chosen.push_back(v);
        expand(ctx, chosen, newMeet, next);
        chosen.pop_back();
    }
}

}  // namespace

SearchResult maxNonTrivialSearch(const PolarSpace& sp, int m, int t,
                                 const SearchOptions& options) {
    const auto started = std::chrono::steady_clock::now();
    const Field& k = sp.field();
    require(t >= 1 && t <= m, Errc::bad_dimension, "need 1 <= t <= m");

    const ExactInt total = isotropicCount(sp, m);
    require(total <= exactOf(options.vertexCap), Errc::too_large,
            "|P_m| = " + total.get_str() + " exceeds vertex cap " +
                std::to_string(options.vertexCap));

    SearchContext ctx(sp, m, t, options);
    PolarSpace::EnumQuery query;
    query.m = m;
    ctx.vertices = sp.enumerateIsotropic(query);
    const std::size_t n = ctx.vertices.size();

    ctx.compatible.assign(n, VertexSet(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (dimIntersect(k, ctx.vertices[i], ctx.vertices[j]) >= t) {
                ctx.compatible[i].set(j);
                ctx.compatible[j].set(i);
            }

    if (options.lowerBound) ctx.best.store(*options.lowerBound);

    // Top-level tasks: branch on the first chosen vertex.
    std::atomic<std::size_t> nextTask{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t v = nextTask.fetch_add(1);
            if (v >= n) return;
            std::vector<std::int32_t> chosen{static_cast<std::int32_t>(v)};
            std::vector<std::int32_t> candidates;
            for (std::size_t j = v + 1; j < n; ++j)
                if (ctx.compat(static_cast<std::int32_t>(v), static_cast<std::int32_t>(j)))
                    candidates.push_back(static_cast<std::int32_t>(j));
            expand(ctx, chosen, ctx.vertices[v], candidates);
        }
    };

    const int workers = std::max(1, options.workers);
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }

    const std::uint64_t best = ctx.best.load();
    SearchResult result;
    // lowerBound is only a prune seed; report sizes actually witnessed
    std::uint64_t witnessed = 0;
    for (const auto& ids : ctx.archive) witnessed = std::max<std::uint64_t>(witnessed, ids.size());
    result.maxSize = witnessed;
    (void)best;

    std::vector<std::vector<std::int32_t>> keep;
    for (auto& ids : ctx.archive)
        if (ids.size() == result.maxSize) keep.push_back(std::move(ids));
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    if (!options.enumerateAllOptima && keep.size() > 1) keep.resize(1);

    for (const auto& ids : keep) {
        Family fam(sp, m, t);
        std::vector<Subspace> ms;
        ms.reserve(ids.size());
        for (std::int32_t id : ids) ms.push_back(ctx.vertices[id]);
        fam.insertAll(std::move(ms));
        result.optima.push_back(std::move(fam));
    }
    result.elapsedMs = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                              started)
            .count());
    return result;
}

const char* toString(OptimumClass c) {
    switch (c) {
        case OptimumClass::H1: return "H1";
        case OptimumClass::H2: return "H2";
        case OptimumClass::trivial: return "trivial";
        case OptimumClass::other: return "other";
    }
    return "other";
}

OptimumClass classifyOptimum(const Family& fam, int t) {
    require(!fam.empty(), Errc::empty_family, "cannot classify the empty family");
    const PolarSpace& sp = fam.space();
    const Field& k = sp.field();
    const int m = fam.m();

    if (isTrivialFamily(fam, t)) return OptimumClass::trivial;

    // Candidate cores for an H2 shape: spans of member pairs (exact when
    // m = t+1), plus the span of the (t+1)-dimensional cover set.
    std::vector<Subspace> zCandidates;
    const auto& ms = fam.members();
    for (std::size_t i = 0; i < ms.size() && i < 4; ++i)
        for (std::size_t j = i + 1; j < ms.size() && j < 8; ++j) {
            Subspace z = sum(k, ms[i], ms[j]);
            if (z.dim() == t + 2) zCandidates.push_back(std::move(z));
        }

    std::optional<CoverSetResult> covers;
    const CoverResult tau = coveringNumber(fam, t);
    if (tau.tau == t + 1) {
        covers = coverSet(fam, t);
        if (covers->span.dim() == t + 2) zCandidates.push_back(covers->span);
    }
    std::sort(zCandidates.begin(), zCandidates.end());
    zCandidates.erase(std::unique(zCandidates.begin(), zCandidates.end()), zCandidates.end());
    for (const Subspace& z : zCandidates)
        if (buildH2(sp, z, m, t) == fam) return OptimumClass::H2;

    // H1 shape: T is the common core of the cover set, U a member missing T.
    if (covers) {
        Subspace core = covers->covers.front();
        for (const Subspace& s : covers->covers) core = intersect(k, core, s);
        if (core.dim() == t) {
            for (const Subspace& u : ms) {
                if (contains(k, u, core)) continue;
                if (dimIntersect(k, core, u) != t - 1) continue;
                if (buildH1(sp, core, u, t) == fam) return OptimumClass::H1;
            }
        }
    }
    return OptimumClass::other;
}

}  // namespace sympolar
