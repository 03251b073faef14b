// sympolar: exact counting, enumeration, family construction/verification,
// extremal search, and inequality sweeps for totally isotropic subspace
// families of a symplectic space over GF(q).
//
// Exit codes: 0 success, 1 a verification subcommand found a violated
// property, 2 invalid parameters or input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "sympolar/json_io.hpp"

using namespace sympolar;

namespace {

struct CommonFlags {
    long long q = 0;
    int nu = 0;
};

Field makeField(long long q) {
    const auto [p, e] = factorPrimePower(q);
    return Field(p, e);
}

json readJsonFile(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), Errc::parse_error, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& ex) {
        fail(Errc::parse_error, std::string("invalid JSON in ") + path + ": " + ex.what());
    }
    return j;
}

void writeOutput(const std::optional<std::string>& path, const std::string& text) {
    if (path) {
        std::ofstream out(*path);
        require(out.good(), Errc::parse_error, "cannot write " + *path);
        out << text;
    } else {
        std::cout << text;
    }
}

std::optional<Subspace> loadOptionalSubspace(const Field& k, int ambient,
                                             const std::string& path) {
    if (path.empty()) return std::nullopt;
    return subspaceFromJson(k, ambient, readJsonFile(path));
}

std::pair<int, int> parseRange(const std::string& text) {
    const auto colon = text.find(':');
    require(colon != std::string::npos, Errc::parse_error,
            "range must look like LO:HI, got " + text);
    try {
        return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
    } catch (const std::exception&) {
        fail(Errc::parse_error, "range must look like LO:HI, got " + text);
    }
}

SeedKind parseSeedKind(const std::string& s) {
    if (s == "isotropicJoin") return SeedKind::isotropicJoin;
    if (s == "hyperbolicJoin") return SeedKind::hyperbolicJoin;
    fail(Errc::parse_error, "seed kind must be isotropicJoin or hyperbolicJoin");
}

int runCount(const std::string& what, long long q, int nu, int m, int t, int m1, int a, int b,
             const std::string& seedKind) {
    factorPrimePower(q);  // reject non prime powers up front
    if (what == "gaussian") {
        std::cout << gaussian(a, b, static_cast<unsigned long>(q)).get_str() << "\n";
        return 0;
    }
    if (what == "anzahl") {
        std::cout << anzahlN(nu, m, m1, static_cast<unsigned long>(q)).get_str() << "\n";
        return 0;
    }
    const ProblemParams params(nu, m, t, static_cast<unsigned long>(q));
    if (what == "f0") {
        const F0Result r = f0(params);
        if (r.hypothesisWarning)
            std::cerr << "warning: outside the sign-dichotomy hypothesis range "
                         "(m >= t+2 and 2nu >= 3m-t+3)\n";
        std::cout << r.value.get_str() << "\n";
        return 0;
    }
    if (what == "h2") {
        std::cout << h2Count(params).get_str() << "\n";
        return 0;
    }
    if (what == "h1") {
        Field field = makeField(q);
        PolarSpace sp(field, nu);
        const SeedPair seeds = canonicalSeeds(sp, m, t, parseSeedKind(seedKind));
        std::cout << countH1(sp, seeds.t, seeds.u, t).get_str() << "\n";
        return 0;
    }
    fail(Errc::parse_error, "unknown count kind: " + what);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations for t-intersecting families of totally isotropic "
                 "subspaces in symplectic spaces over GF(q)"};
    app.require_subcommand(1);

    // ---- count ----------------------------------------------------------
    auto* count = app.add_subcommand("count", "evaluate a closed-form count");
    std::string countKind, countSeedKind = "isotropicJoin";
    long long cQ = 0;
    int cNu = 0, cM = 0, cT = 0, cM1 = 0, cA = 0, cB = 0;
    count->add_option("kind", countKind, "gaussian|anzahl|f0|h1|h2")->required();
    count->add_option("--q", cQ, "field order (prime power)")->required();
    count->add_option("--nu", cNu, "Witt index of the ambient space");
    count->add_option("--m", cM, "member dimension");
    count->add_option("--t", cT, "intersection parameter");
    count->add_option("--m1", cM1, "dimension of the fixed subspace (anzahl)");
    count->add_option("--a", cA, "upper argument (gaussian)");
    count->add_option("--b", cB, "lower argument (gaussian)");
    count->add_option("--seed-kind", countSeedKind, "isotropicJoin|hyperbolicJoin (h1)");

    // ---- enum isotropic --------------------------------------------------
    auto* enumCmd = app.add_subcommand("enum", "enumerate subspaces");
    auto* enumIso = enumCmd->add_subcommand("isotropic", "totally isotropic m-subspaces");
    long long eQ = 0;
    int eNu = 0, eM = 0;
    std::string eContaining, eWithin, eOut;
    bool eCountOnly = false;
    enumIso->add_option("--q", eQ)->required();
    enumIso->add_option("--nu", eNu)->required();
    enumIso->add_option("--m", eM)->required();
    enumIso->add_option("--containing", eContaining, "subspace JSON file; members must contain it");
    enumIso->add_option("--within", eWithin, "subspace JSON file; members must lie inside it");
    enumIso->add_flag("--count-only", eCountOnly, "print only the number of members");
    enumIso->add_option("--out", eOut, "write output to a file instead of stdout");

    // ---- family ----------------------------------------------------------
    auto* family = app.add_subcommand("family", "construct or verify families");
    auto* build = family->add_subcommand("build", "construct a named family");
    std::string bKind, bSeedKind = "isotropicJoin", bZFile, bOut;
    long long bQ = 0;
    int bNu = 0, bM = 0, bT = 0;
    build->add_option("--kind", bKind, "h1|h2|trivial")->required();
    build->add_option("--q", bQ)->required();
    build->add_option("--nu", bNu)->required();
    build->add_option("--m", bM)->required();
    build->add_option("--t", bT)->required();
    build->add_option("--seed-kind", bSeedKind, "isotropicJoin|hyperbolicJoin (h1)");
    build->add_option("--z", bZFile, "subspace JSON file with the core Z (h2)");
    build->add_option("--out", bOut, "output family JSON file");

    auto* verify = family->add_subcommand("verify", "report properties of a family file");
    std::string vFile, vOut;
    int vT = -1;
    long long vMaximalCap = 1000000;
    verify->add_option("--file", vFile)->required();
    verify->add_option("--t", vT, "intersection parameter (defaults to the file's t)");
    verify->add_option("--maximal-cap", vMaximalCap,
                       "skip the maximality scan when |P_m| exceeds this");
    verify->add_option("--out", vOut, "write the report to a file instead of stdout");

    // ---- search ----------------------------------------------------------
    auto* search = app.add_subcommand("search", "exhaustive extremal search");
    auto* maxNt = search->add_subcommand("max-nontrivial",
                                         "maximum non-trivial t-intersecting families");
    long long sQ = 0;
    int sNu = 0, sM = 0, sT = 0, sWorkers = 1;
    std::uint64_t sVertexCap = 5000;
    long long sLowerBound = -1;
    bool sAllOptima = false;
    std::string sOut;
    maxNt->add_option("--q", sQ)->required();
    maxNt->add_option("--nu", sNu)->required();
    maxNt->add_option("--m", sM)->required();
    maxNt->add_option("--t", sT)->required();
    maxNt->add_flag("--all-optima", sAllOptima, "archive every maximum family");
    maxNt->add_option("--lower-bound", sLowerBound, "known achievable size (prune hint)");
    maxNt->add_option("--workers", sWorkers, "worker threads over top-level branches");
    maxNt->add_option("--vertex-cap", sVertexCap, "refuse when |P_m| exceeds this");
    maxNt->add_option("--out", sOut, "output result JSON file");

    // ---- sweep -----------------------------------------------------------
    auto* sweep = app.add_subcommand("sweep", "inequality grid sweeps");
    auto* lemmas = sweep->add_subcommand("lemmas", "certify the counting inequalities on a grid");
    std::string swNu = "1:0", swM = "1:0", swT = "1:0", swQ = "2", swOut;
    lemmas->add_option("--nu-range", swNu, "LO:HI (empty LO>HI disables the h1/h2 claims)");
    lemmas->add_option("--m-range", swM, "LO:HI");
    lemmas->add_option("--t-range", swT, "LO:HI");
    lemmas->add_option("--q-list", swQ, "comma-separated prime powers");
    lemmas->add_option("--out", swOut, "output report JSON file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        if (err.get_exit_code() == 0) return app.exit(err);  // --help
        app.exit(err);
        return 2;
    }

    try {
        if (count->parsed())
            return runCount(countKind, cQ, cNu, cM, cT, cM1, cA, cB, countSeedKind);

        if (enumIso->parsed()) {
            Field field = makeField(eQ);
            PolarSpace sp(field, eNu);
            PolarSpace::EnumQuery query;
            query.m = eM;
            query.containing = loadOptionalSubspace(field, sp.ambient(), eContaining);
            query.within = loadOptionalSubspace(field, sp.ambient(), eWithin);
            if (eCountOnly) {
                writeOutput(eOut.empty() ? std::nullopt : std::optional(eOut),
                            std::to_string(sp.countIsotropic(query)) + "\n");
                return 0;
            }
            std::ostringstream lines;
            for (const Subspace& w : sp.enumerateIsotropic(query))
                lines << subspaceToJson(w).dump() << "\n";
            writeOutput(eOut.empty() ? std::nullopt : std::optional(eOut), lines.str());
            return 0;
        }

        if (build->parsed()) {
            Field field = makeField(bQ);
            PolarSpace sp(field, bNu);
            std::optional<Family> fam;
            if (bKind == "h1") {
                const SeedPair seeds = canonicalSeeds(sp, bM, bT, parseSeedKind(bSeedKind));
                fam = buildH1(sp, seeds.t, seeds.u, bT);
            } else if (bKind == "h2") {
                Subspace z = bZFile.empty() ? canonicalZSeed(sp, bT)
                                            : *loadOptionalSubspace(field, sp.ambient(), bZFile);
                fam = buildH2(sp, z, bM, bT);
            } else if (bKind == "trivial") {
                std::vector<int> coords;
                for (int i = 0; i < bT; ++i) coords.push_back(i);
                fam = buildTrivial(sp, coordinateSpan(sp.ambient(), coords), bM);
            } else {
                fail(Errc::parse_error, "family kind must be h1, h2 or trivial");
            }
            writeOutput(bOut.empty() ? std::nullopt : std::optional(bOut),
                        dumpCanonical(familyToJson(*fam)));
            return 0;
        }

        if (verify->parsed()) {
            ParsedFamily parsed = familyFromJson(readJsonFile(vFile));
            const Family& fam = *parsed.family;
            const int t = vT >= 0 ? vT : fam.t();
            require(!fam.empty(), Errc::empty_family, "family file has no members");
            json report;
            report["size"] = fam.size();
            const bool intersecting = isTIntersecting(fam, t);
            report["tIntersecting"] = intersecting;
            report["trivial"] = isTrivialFamily(fam, t);
            if (intersecting) {
                report["tau"] = coveringNumber(fam, t).tau;
                if (isotropicCount(*parsed.space, fam.m()) <= ExactInt(static_cast<long>(vMaximalCap)))
                    report["maximal"] = isMaximalFamily(fam, t);
                else
                    report["maximal"] = nullptr;
            } else {
                report["tau"] = nullptr;
                report["maximal"] = false;
            }
            writeOutput(vOut.empty() ? std::nullopt : std::optional(vOut),
                        dumpCanonical(report));
            return intersecting ? 0 : 1;
        }

        if (maxNt->parsed()) {
            Field field = makeField(sQ);
            PolarSpace sp(field, sNu);
            SearchOptions options;
            options.enumerateAllOptima = sAllOptima;
            if (sLowerBound >= 0) options.lowerBound = static_cast<std::uint64_t>(sLowerBound);
            options.workers = sWorkers;
            options.vertexCap = sVertexCap;
            const SearchResult result = maxNonTrivialSearch(sp, sM, sT, options);
            std::vector<OptimumClass> labels;
            for (const Family& fam : result.optima) labels.push_back(classifyOptimum(fam, sT));
            writeOutput(sOut.empty() ? std::nullopt : std::optional(sOut),
                        dumpCanonical(searchResultToJson(result, labels)));
            return 0;
        }

        if (lemmas->parsed()) {
            SweepGrid grid;
            std::tie(grid.nuLo, grid.nuHi) = parseRange(swNu);
            std::tie(grid.mLo, grid.mHi) = parseRange(swM);
            std::tie(grid.tLo, grid.tHi) = parseRange(swT);
            std::stringstream ss(swQ);
            std::string tok;
            while (std::getline(ss, tok, ','))
                grid.qList.push_back(std::stoul(tok));
            require(!grid.qList.empty(), Errc::parse_error, "--q-list must not be empty");
            for (unsigned long q : grid.qList) factorPrimePower(static_cast<long long>(q));
            const SweepReport report = sweepLemmas(grid);
            writeOutput(swOut.empty() ? std::nullopt : std::optional(swOut),
                        dumpCanonical(sweepReportToJson(report)));
            return report.allPass() ? 0 : 1;
        }
    } catch (const Error& err) {
        std::cerr << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 2;
}
