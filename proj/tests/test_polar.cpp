#include <doctest.h>

#include <random>

#include "sympolar/polar.hpp"
#include "sympolar/qcount.hpp"

using namespace sympolar;

namespace {

Vec unit(int n, int i) {
    Vec v(n, 0);
    v[i] = 1;
    return v;
}

Subspace randomSubspaceOf(const PolarSpace& sp, int dim, std::mt19937& rng) {
    const Field& k = sp.field();
    std::uniform_int_distribution<int> pick(0, k.q() - 1);
    for (;;) {
        std::vector<Vec> rows(dim, Vec(sp.ambient()));
        for (Vec& row : rows)
            for (auto& x : row) x = static_cast<std::uint8_t>(pick(rng));
        Subspace s = reduce(k, sp.ambient(), rows);
        if (s.dim() == dim) return s;
    }
}

// Filter oracle: all k-subspaces of the ambient space, kept when totally
// isotropic and satisfying the constraints. Only usable at tiny sizes.
std::vector<Subspace> filterOracle(const PolarSpace& sp, const PolarSpace::EnumQuery& query) {
    const Field& k = sp.field();
    std::vector<Subspace> out;
    for (const Subspace& s : enumerateSubspaces(k, fullSpace(sp.ambient()), query.m)) {
        if (!sp.isIsotropic(s)) continue;
        if (query.containing && !contains(k, s, *query.containing)) continue;
        if (query.within && !contains(k, *query.within, s)) continue;
        out.push_back(s);
    }
    return out;
}

}  // namespace

TEST_CASE("form evaluation on the standard basis") {
    PolarSpace sp(Field(2, 1), 2);
    const int n = 4;
    CHECK(sp.formEval(unit(n, 0), unit(n, 2)) == 1);   // f(e1, f1) = 1
    CHECK(sp.formEval(unit(n, 2), unit(n, 0)) == 1);   // -1 = 1 in GF(2)
    CHECK(sp.formEval(unit(n, 0), unit(n, 1)) == 0);   // f(e1, e2) = 0
    PolarSpace sp3(Field(3, 1), 2);
    CHECK(sp3.formEval(unit(n, 2), unit(n, 0)) == 2);  // -1 = 2 in GF(3)

    std::mt19937 rng(5);
    std::uniform_int_distribution<int> pick(0, 2);
    for (int trial = 0; trial < 100; ++trial) {
        Vec x(n);
        for (auto& c : x) c = static_cast<std::uint8_t>(pick(rng));
        CHECK(sp3.formEval(x, x) == 0);  // alternating
    }
}

TEST_CASE("isotropy tests") {
    PolarSpace sp(Field(2, 1), 2);
    CHECK(sp.isIsotropic(coordinateSpan(4, {0, 1})));        // <e1, e2>
    CHECK_FALSE(sp.isIsotropic(coordinateSpan(4, {0, 2})));  // <e1, f1>
    CHECK(sp.isIsotropic(Subspace::zero(4)));
}

TEST_CASE("type classification") {
    PolarSpace sp(Field(2, 1), 3);
    CHECK(sp.typeOf(coordinateSpan(6, {0, 1})) == std::pair(2, 0));
    CHECK(sp.typeOf(coordinateSpan(6, {0, 3})) == std::pair(2, 1));
    CHECK(sp.typeOf(coordinateSpan(6, {0, 1, 3})) == std::pair(3, 1));
    CHECK_THROWS_AS(sp.typeOf(Subspace::zero(6)), Error);
}

TEST_CASE("perp dimensions and double perp") {
    PolarSpace sp(Field(2, 1), 2);
    CHECK(sp.perp(Subspace::zero(4)) == fullSpace(4));
    const Subspace e1 = coordinateSpan(4, {0});
    const Subspace p = sp.perp(e1);
    CHECK(p.dim() == 3);
    CHECK(p == coordinateSpan(4, {0, 1, 3}));  // <e1, e2, f2>

    std::mt19937 rng(17);
    for (int q : {2, 3}) {
        PolarSpace s(Field(q, 1), 3);
        for (int trial = 0; trial < 60; ++trial) {
            const Subspace w = randomSubspaceOf(s, 1 + trial % 3, rng);
            const Subspace pw = s.perp(w);
            CHECK(pw.dim() == s.ambient() - w.dim());
            CHECK(s.perp(pw) == w);
            if (s.isIsotropic(w)) CHECK(contains(s.field(), pw, w));
        }
    }
}

TEST_CASE("isotropic enumeration counts at nu = 2") {
    PolarSpace sp(Field(2, 1), 2);
    CHECK(sp.countIsotropic({1, {}, {}}) == 15);
    CHECK(sp.countIsotropic({2, {}, {}}) == 15);
    PolarSpace sp3(Field(3, 1), 2);
    CHECK(sp3.countIsotropic({2, {}, {}}) == 40);
    CHECK(sp3.countIsotropic({0, {}, {}}) == 1);
}

TEST_CASE("enumeration agrees with the filter oracle at nu = 2") {
    for (int q : {2, 3}) {
        PolarSpace sp(Field(q, 1), 2);
        std::mt19937 rng(23 + q);
        for (int m = 0; m <= 2; ++m) {
            PolarSpace::EnumQuery query{m, {}, {}};
            CHECK(sp.enumerateIsotropic(query) == filterOracle(sp, query));
        }
        // constrained queries
        PolarSpace::EnumQuery within{1, {}, coordinateSpan(4, {0, 1, 2})};
        CHECK(sp.enumerateIsotropic(within) == filterOracle(sp, within));
        PolarSpace::EnumQuery containing{2, coordinateSpan(4, {1}), {}};
        CHECK(sp.enumerateIsotropic(containing) == filterOracle(sp, containing));
        PolarSpace::EnumQuery both{2, coordinateSpan(4, {1}), coordinateSpan(4, {0, 1, 3})};
        CHECK(sp.enumerateIsotropic(both) == filterOracle(sp, both));
        // a containing constraint that is not isotropic is rejected
        PolarSpace::EnumQuery bad{2, coordinateSpan(4, {0, 2}), {}};
        CHECK_THROWS_AS(sp.enumerateIsotropic(bad), Error);
    }
}

TEST_CASE("anzahl agreement at small parameters") {
    for (int q : {2, 3}) {
        for (int nu : {2, 3}) {
            PolarSpace sp(Field(q, 1), nu);
            for (int m = 0; m <= nu; ++m) {
                for (int m1 = 0; m1 <= m; ++m1) {
                    std::vector<int> coords;
                    for (int i = 0; i < m1; ++i) coords.push_back(i);
                    PolarSpace::EnumQuery query{m, {}, {}};
                    if (m1 > 0) query.containing = coordinateSpan(sp.ambient(), coords);
                    CHECK(exactOf(sp.countIsotropic(query)) == anzahlN(nu, m, m1, q));
                }
            }
        }
    }
}

TEST_CASE("anzahl with a containing seed is choice-independent") {
    std::mt19937 rng(29);
    PolarSpace sp(Field(2, 1), 3);
    for (int trial = 0; trial < 5; ++trial) {
        // random isotropic 1- and 2-dimensional seeds
        for (int m1 : {1, 2}) {
            Subspace seed = randomSubspaceOf(sp, m1, rng);
            while (!sp.isIsotropic(seed)) seed = randomSubspaceOf(sp, m1, rng);
            PolarSpace::EnumQuery query{3, seed, {}};
            CHECK(exactOf(sp.countIsotropic(query)) == anzahlN(3, 3, m1, 2));
        }
    }
}

TEST_CASE("every enumerated subspace is isotropic, canonical and fresh") {
    for (int q : {2, 3}) {
        PolarSpace sp(Field(q, 1), 3);
        for (int m = 1; m <= 3; ++m) {
            const auto all = sp.enumerateIsotropic({m, {}, {}});
            CHECK(std::is_sorted(all.begin(), all.end()));
            CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
            for (const Subspace& w : all) {
                CHECK(sp.isIsotropic(w));
                CHECK(isCanonicalRref(sp.field(), sp.ambient(), w.rows()));
            }
        }
    }
}

TEST_CASE("extensions of an isotropic subspace live in its perp") {
    PolarSpace sp(Field(2, 1), 3);
    std::mt19937 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        Subspace w = randomSubspaceOf(sp, 2, rng);
        while (!sp.isIsotropic(w)) w = randomSubspaceOf(sp, 2, rng);
        const Subspace pw = sp.perp(w);
        sp.forEachIsotropic({3, w, {}}, [&](const Subspace& ext) {
            CHECK(contains(sp.field(), pw, ext));
            return true;
        });
    }
}

TEST_CASE("maximal isotropic subspaces of a type-(m+1,1) space number q+1") {
    std::mt19937 rng(37);
    for (int q : {2, 3}) {
        PolarSpace sp(Field(q, 1), 3);
        for (int m : {1, 2}) {
            int sampled = 0;
            while (sampled < 5) {
                const Subspace cand = randomSubspaceOf(sp, m + 1, rng);
                if (sp.typeOf(cand) != std::pair(m + 1, 1)) continue;
                ++sampled;
                CHECK(sp.countIsotropic({m, {}, cand}) ==
                      static_cast<unsigned long long>(q + 1));
            }
        }
    }
}

TEST_CASE("stream determinism") {
    PolarSpace sp(Field(3, 1), 2);
    const auto a = sp.enumerateIsotropic({2, {}, {}});
    const auto b = sp.enumerateIsotropic({2, {}, {}});
    CHECK(a == b);
    std::vector<Subspace> dfsOrder1, dfsOrder2;
    sp.forEachIsotropic({2, {}, {}}, [&](const Subspace& w) {
        dfsOrder1.push_back(w);
        return true;
    });
    sp.forEachIsotropic({2, {}, {}}, [&](const Subspace& w) {
        dfsOrder2.push_back(w);
        return true;
    });
    CHECK(dfsOrder1 == dfsOrder2);
}

TEST_CASE("dimension guards") {
    PolarSpace sp(Field(2, 1), 2);
    CHECK_THROWS_AS(sp.enumerateIsotropic({3, {}, {}}), Error);  // m > nu
    CHECK_THROWS_AS(sp.enumerateIsotropic({-1, {}, {}}), Error);
}
