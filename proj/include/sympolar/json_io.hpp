#pragma once

#include <memory>

#include <json.hpp>

#include "sympolar/extremal.hpp"
#include "sympolar/families.hpp"
#include "sympolar/sweep.hpp"

namespace sympolar {

using json = nlohmann::json;

/// Subspace <-> array of rows, each row an array of element indices in
/// [0, q). Readers reject rows that are not a canonical RREF basis
/// (Errc::non_canonical) and malformed entries (Errc::parse_error).
json subspaceToJson(const Subspace& s);
Subspace subspaceFromJson(const Field& k, int ambient, const json& j);

/// Family <-> {"q","nu","m","t","members":[...]} with canonical rows.
json familyToJson(const Family& fam);

/// Owns the space behind the parsed family, so member references stay valid.
struct ParsedFamily {
    std::unique_ptr<PolarSpace> space;
    std::unique_ptr<Family> family;
};
ParsedFamily familyFromJson(const json& j);

json sweepReportToJson(const SweepReport& report);

json searchResultToJson(const SearchResult& result, const std::vector<OptimumClass>& labels);

/// Canonical serialization used by the CLI: sorted keys (nlohmann objects
/// are key-sorted), two-space indent, trailing newline.
std::string dumpCanonical(const json& j);

}  // namespace sympolar
