#pragma once

#include <cstdint>
#include <optional>

#include "sympolar/families.hpp"

namespace sympolar {

struct SearchOptions {
    bool enumerateAllOptima = false;
    std::optional<std::uint64_t> lowerBound;  // known achievable size, used as initial bound
    int workers = 1;
    std::uint64_t vertexCap = 5000;
    // test hooks; both prunes are exact, disabling them must not change results
    bool disableBoundPrune = false;
    bool disableMeetPrune = false;
};

struct SearchResult {
    std::uint64_t maxSize = 0;
    /// Every maximum-size non-trivial family (canonically sorted) when
    /// enumerateAllOptima, otherwise at most one (the canonically first).
    std::vector<Family> optima;
    std::uint64_t elapsedMs = 0;
};

/// Exhaustive search for the maximum-size t-intersecting and non-trivial
/// (no common t-subspace) families of totally isotropic m-subspaces.
/// Vertices are all of P_m in canonical order; refuses to start when |P_m|
/// exceeds the vertex cap (Errc::too_large). Output is deterministic and
/// independent of the worker count. Returns (0, {}) when every
/// t-intersecting family is trivial.
SearchResult maxNonTrivialSearch(const PolarSpace& sp, int m, int t, const SearchOptions& options);

enum class OptimumClass { H1, H2, trivial, other };

const char* toString(OptimumClass c);

/// Attempts to recognize a family as one of the canonical extremal shapes by
/// reconstructing it from recovered seeds.
OptimumClass classifyOptimum(const Family& fam, int t);

}  // namespace sympolar
