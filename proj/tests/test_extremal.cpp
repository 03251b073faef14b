#include <doctest.h>

#include "sympolar/extremal.hpp"

using namespace sympolar;

namespace {

// Prune-free reference: same canonical DFS, nothing skipped.
SearchResult naiveSearch(const PolarSpace& sp, int m, int t, bool allOptima) {
    SearchOptions options;
    options.enumerateAllOptima = allOptima;
    options.disableBoundPrune = true;
    options.disableMeetPrune = true;
    return maxNonTrivialSearch(sp, m, t, options);
}

}  // namespace

TEST_CASE("the generalized quadrangle admits no non-trivial family") {
    PolarSpace sp(Field(2, 1), 2);
    SearchOptions options;
    options.enumerateAllOptima = true;
    const SearchResult r = maxNonTrivialSearch(sp, 2, 1, options);
    CHECK(r.maxSize == 0);
    CHECK(r.optima.empty());
    const SearchResult naive = naiveSearch(sp, 2, 1, true);
    CHECK(naive.maxSize == 0);
    CHECK(naive.optima.empty());
}

TEST_CASE("maximum non-trivial families at (3,2,1,2)") {
    PolarSpace sp(Field(2, 1), 3);
    SearchOptions options;
    options.enumerateAllOptima = true;
    const SearchResult r = maxNonTrivialSearch(sp, 2, 1, options);
    CHECK(r.maxSize == 7);
    CHECK(r.optima.size() == 135);
    for (const Family& fam : r.optima) {
        CHECK(isTIntersecting(fam, 1));
        CHECK_FALSE(isTrivialFamily(fam, 1));
    }

    SUBCASE("each optimum is an H2 family and classifies as such") {
        for (std::size_t i = 0; i < r.optima.size(); i += 16) {
            const Family& fam = r.optima[i];
            CHECK((classifyOptimum(fam, 1) == OptimumClass::H2));
        }
    }
    SUBCASE("prune safety: disabling pruning changes nothing") {
        const SearchResult naive = naiveSearch(sp, 2, 1, true);
        CHECK(naive.maxSize == 7);
        CHECK(naive.optima.size() == 135);
        for (std::size_t i = 0; i < 135; ++i) CHECK(naive.optima[i] == r.optima[i]);
    }
    SUBCASE("worker counts do not change the result") {
        for (int workers : {2, 8}) {
            SearchOptions par = options;
            par.workers = workers;
            const SearchResult rp = maxNonTrivialSearch(sp, 2, 1, par);
            CHECK(rp.maxSize == r.maxSize);
            REQUIRE(rp.optima.size() == r.optima.size());
            for (std::size_t i = 0; i < r.optima.size(); ++i) CHECK(rp.optima[i] == r.optima[i]);
        }
    }
    SUBCASE("a valid lower bound only speeds things up") {
        SearchOptions seeded = options;
        seeded.lowerBound = 7;
        const SearchResult rs = maxNonTrivialSearch(sp, 2, 1, seeded);
        CHECK(rs.maxSize == 7);
        CHECK(rs.optima.size() == 135);
    }
    SUBCASE("single-witness mode returns the canonically first optimum") {
        SearchOptions one;
        one.enumerateAllOptima = false;
        const SearchResult rw = maxNonTrivialSearch(sp, 2, 1, one);
        CHECK(rw.maxSize == 7);
        REQUIRE(rw.optima.size() == 1);
        CHECK(rw.optima.front() == r.optima.front());
    }
}

TEST_CASE("maximum non-trivial families at (3,2,1,3)") {
    // second data point for the extremal shape, q = 3: the maximum equals
    // the h2 count and the optima are exactly the H2 families, one per
    // totally isotropic 3-space
    PolarSpace sp(Field(3, 1), 3);
    SearchOptions options;
    options.enumerateAllOptima = true;
    options.workers = 4;
    const SearchResult r = maxNonTrivialSearch(sp, 2, 1, options);
    CHECK(ExactInt(r.maxSize) == h2Count(ProblemParams(3, 2, 1, 3)));
    CHECK(r.maxSize == 13);
    CHECK(ExactInt(r.optima.size()) == anzahlN(3, 3, 0, 3));  // 1120
    for (std::size_t i = 0; i < r.optima.size(); i += 128)
        CHECK((classifyOptimum(r.optima[i], 1) == OptimumClass::H2));
}

TEST_CASE("vertex cap refuses oversized instances") {
    PolarSpace sp(Field(2, 1), 3);
    SearchOptions options;
    options.vertexCap = 100;  // |P_2| = 315 at (3,2)
    CHECK_THROWS_AS(maxNonTrivialSearch(sp, 2, 1, options), Error);
}

TEST_CASE("classification round-trips") {
    PolarSpace sp(Field(2, 1), 3);
    CHECK((classifyOptimum(buildH2(sp, canonicalZSeed(sp, 1), 2, 1), 1) == OptimumClass::H2));
    CHECK((classifyOptimum(buildTrivial(sp, coordinateSpan(6, {0}), 2), 1) ==
           OptimumClass::trivial));

    PolarSpace sp5(Field(2, 1), 5);
    const SeedPair seeds = canonicalSeeds(sp5, 3, 1, SeedKind::isotropicJoin);
    const Family h1 = buildH1(sp5, seeds.t, seeds.u, 1);
    CHECK((classifyOptimum(h1, 1) == OptimumClass::H1));

    Family empty(sp, 2, 1);
    CHECK_THROWS_AS(classifyOptimum(empty, 1), Error);
}
