#include "sympolar/json_io.hpp"

namespace sympolar {

json subspaceToJson(const Subspace& s) {
    json rows = json::array();
    for (const Vec& row : s.rows()) {
        json r = json::array();
        for (std::uint8_t x : row) r.push_back(static_cast<int>(x));
        rows.push_back(std::move(r));
    }
    return rows;
}

Subspace subspaceFromJson(const Field& k, int ambient, const json& j) {
    require(j.is_array(), Errc::parse_error, "subspace must be an array of rows");
    std::vector<Vec> rows;
    for (const json& jr : j) {
        require(jr.is_array(), Errc::parse_error, "subspace row must be an array");
        Vec row;
        for (const json& jx : jr) {
            require(jx.is_number_integer(), Errc::parse_error, "entries must be integers");
            const long long x = jx.get<long long>();
            require(x >= 0 && x < k.q(), Errc::parse_error,
                    "entry " + std::to_string(x) + " outside [0, q)");
            row.push_back(static_cast<std::uint8_t>(x));
        }
        require(static_cast<int>(row.size()) == ambient, Errc::parse_error,
                "row length != 2*nu");
        rows.push_back(std::move(row));
    }
    require(isCanonicalRref(k, ambient, rows), Errc::non_canonical,
            "rows are not a canonical reduced row echelon basis");
    return Subspace::fromCanonicalRows(ambient, std::move(rows));
}

json familyToJson(const Family& fam) {
    json j;
    j["q"] = fam.space().field().q();
    j["nu"] = fam.space().nu();
    j["m"] = fam.m();
    j["t"] = fam.t();
    json members = json::array();
    for (const Subspace& f : fam.members()) members.push_back(subspaceToJson(f));
    j["members"] = std::move(members);
    return j;
}

ParsedFamily familyFromJson(const json& j) {
    require(j.is_object(), Errc::parse_error, "family must be an object");
    for (const char* key : {"q", "nu", "m", "t", "members"})
        require(j.contains(key), Errc::parse_error, std::string("missing key: ") + key);
    const long long q = j["q"].get<long long>();
    const auto [p, e] = factorPrimePower(q);
    const int nu = j["nu"].get<int>();
    auto space = std::make_unique<PolarSpace>(Field(p, e), nu);
    const int m = j["m"].get<int>();
    const int t = j["t"].get<int>();
    auto fam = std::make_unique<Family>(*space, m, t);
    std::vector<Subspace> members;
    for (const json& jm : j["members"])
        members.push_back(subspaceFromJson(space->field(), 2 * nu, jm));
    fam->insertAll(std::move(members));
    return ParsedFamily{std::move(space), std::move(fam)};
}

json sweepReportToJson(const SweepReport& report) {
    json arr = json::array();
    for (const SweepEntry& e : report.entries) {
        json je;
        je["claim"] = e.claim;
        je["params"] = e.params;
        je["status"] = e.pass ? "pass" : "fail";
        je["lhs"] = e.lhs;
        je["rhs"] = e.rhs;
        if (!e.note.empty()) je["note"] = e.note;
        arr.push_back(std::move(je));
    }
    return arr;
}

json searchResultToJson(const SearchResult& result, const std::vector<OptimumClass>& labels) {
    json j;
    j["maxSize"] = result.maxSize;
    j["count"] = result.optima.size();
    json optima = json::array();
    for (const Family& fam : result.optima) optima.push_back(familyToJson(fam));
    j["optima"] = std::move(optima);
    json cls = json::array();
    for (OptimumClass c : labels) cls.push_back(toString(c));
    j["classifications"] = std::move(cls);
    j["elapsedMs"] = result.elapsedMs;
    return j;
}

std::string dumpCanonical(const json& j) { return j.dump(2) + "\n"; }

}  // namespace sympolar
