// Command-line front end: every computation and verification sweep, with
// machine-readable JSON output (rationals always serialized as "p/q").

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "umbralsum/bernoulli.hpp"
#include "umbralsum/egf.hpp"
#include "umbralsum/extbern.hpp"
#include "umbralsum/mzv.hpp"
#include "umbralsum/powersum.hpp"
#include "umbralsum/verify.hpp"

using nlohmann::json;
using namespace umbralsum;

namespace {

struct Options {
    std::string format = "json";
};

void emit(const Options& opt, const json& payload) {
    if (opt.format == "text") {
        for (const auto& [k, v] : payload.items()) {
            if (v.is_string()) {
                std::cout << k << ": " << v.get<std::string>() << "\n";
            } else {
                std::cout << k << ": " << v.dump() << "\n";
            }
        }
    } else {
        std::cout << payload.dump() << "\n";
    }
}

Rational parseRational(const std::string& s) { return Rational::fromString(s); }

json reportToJson(const VerifyReport& report) {
    json failures = json::array();
    for (const auto& f : report.failures) {
        failures.push_back({{"case", f.caseKey}, {"expected", f.expected}, {"got", f.got}});
    }
    return json{{"suite", report.suite},
                {"cases", report.cases},
                {"failures", failures},
                {"elapsed_ms", report.elapsedMs}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact nested power sums, extended Bernoulli polynomials and "
                 "multiple zeta values at negative integers"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    int exitCode = 0;

    // --- bern ---------------------------------------------------------------
    auto* bern = app.add_subcommand("bern", "Bernoulli / Apostol-Bernoulli values");
    Nat bernN = 0;
    std::string bernX, bernLambda;
    bern->add_option("--n", bernN, "index n")->required();
    bern->add_option("--x", bernX, "evaluation point as p/q (default 0)");
    bern->add_option("--lambda", bernLambda, "Apostol parameter as p/q");
    bern->callback([&]() {
        json out;
        out["n"] = bernN;
        const Rational x = bernX.empty() ? Rational(0) : parseRational(bernX);
        if (bernLambda.empty()) {
            const Rational v = bernX.empty() ? bernoulliNumber(bernN) : bernoulliPoly(bernN).eval(x);
            out["value"] = v.toString();
        } else {
            const Rational lambda = parseRational(bernLambda);
            out["lambda"] = lambda.toString();
            out["value"] = apostolBernoulliPoly(bernN, ApostolParams{lambda}).eval(x).toString();
        }
        emit(opt, out);
    });

    // --- powersum -----------------------------------------------------------
    auto* ps = app.add_subcommand("powersum", "multiple power sums H / weak sums S");
    std::string psIndices, psUpper;
    bool psPoly = false, psWeak = false;
    ps->add_option("--indices", psIndices, "comma-separated exponents n1,...,nr")->required();
    ps->add_option("--upper", psUpper, "upper limit N (integer or p/q)");
    ps->add_flag("--poly", psPoly, "emit the polynomial in N instead of a value");
    ps->add_flag("--weak", psWeak, "weak inequalities (N >= i_1 >= ... >= 1)");
    ps->callback([&]() {
        const MultiIndex idx = MultiIndex::parse(psIndices);
        if (psPoly == !psUpper.empty()) {
            throw CLI::ValidationError("powersum", "exactly one of --upper or --poly is required");
        }
        json out;
        out["indices"] = idx.toString();
        if (psPoly) {
            const Poly p = psWeak ? symbolicSPoly(idx) : symbolicH(idx).poly;
            out["coeffs"] = p.coeffStrings();
        } else {
            const Rational N = parseRational(psUpper);
            const Rational v = psWeak ? symbolicS(idx, N) : symbolicH(idx, N);
            out["value"] = v.toString();
        }
        emit(opt, out);
    });

    // --- polylog ------------------------------------------------------------
    auto* li = app.add_subcommand("polylog", "truncated polylogarithm at negative indices");
    std::string liIndices, liZ;
    Nat liUpper = 0;
    li->add_option("--indices", liIndices)->required();
    li->add_option("--z", liZ, "weight base as p/q")->required();
    li->add_option("--upper", liUpper, "upper limit N")->required();
    li->callback([&]() {
        const MultiIndex idx = MultiIndex::parse(liIndices);
        const Rational z = parseRational(liZ);
        if (z.isZero()) throw CLI::ValidationError("polylog", "z must be nonzero");
        json out;
        out["indices"] = idx.toString();
        out["z"] = z.toString();
        out["value"] = symbolicLi(idx, z, liUpper).toString();
        emit(opt, out);
    });

    // --- extbern ------------------------------------------------------------
    auto* eb = app.add_subcommand("extbern", "extended Bernoulli polynomials");
    std::string ebIndices, ebZ, ebVariant = "shifted";
    bool ebPoly = false;
    eb->add_option("--indices", ebIndices)->required();
    eb->add_option("--z", ebZ, "evaluation point as p/q");
    eb->add_flag("--poly", ebPoly, "emit coefficients");
    eb->add_option("--variant", ebVariant, "shifted|tilde")
        ->check(CLI::IsMember({"shifted", "tilde"}));
    eb->callback([&]() {
        const MultiIndex idx = MultiIndex::parse(ebIndices);
        if (ebPoly == !ebZ.empty()) {
            throw CLI::ValidationError("extbern", "exactly one of --z or --poly is required");
        }
        const ExtBernoulliPoly b = ebVariant == "tilde" ? betaTilde(idx) : betaSymbolic(idx);
        json out;
        out["indices"] = idx.toString();
        out["variant"] = ebVariant;
        if (ebPoly) {
            out["coeffs"] = b.poly.coeffStrings();
        } else {
            out["value"] = b.poly.eval(parseRational(ebZ)).toString();
        }
        emit(opt, out);
    });

    // --- zeta ---------------------------------------------------------------
    auto* ze = app.add_subcommand("zeta", "multiple zeta values at non-positive integers");
    std::string zeIndices, zeMethod = "all";
    ze->add_option("--indices", zeIndices, "n1,...,nr meaning zeta(-n1,...,-nr)")->required();
    ze->add_option("--method", zeMethod)
        ->check(CLI::IsMember({"raabe", "renorm", "constant-term", "depth2", "all"}));
    ze->callback([&]() {
        const MultiIndex idx = MultiIndex::parse(zeIndices);
        json out;
        if (zeMethod == "raabe") {
            out["value"] = zetaRaabe(idx).toString();
        } else if (zeMethod == "renorm") {
            out["value"] = zetaRenorm(idx).toString();
        } else if (zeMethod == "constant-term") {
            out["value"] = zetaConstantTerm(idx).toString();
        } else if (zeMethod == "depth2") {
            if (idx.depth() != 2) throw CLI::ValidationError("zeta", "depth2 needs exactly two indices");
            out["value"] = zetaDepth2(idx.n[0], idx.n[1]).toString();
        } else {
            const Rational a = zetaRaabe(idx);
            const Rational b = zetaRenorm(idx);
            const Rational c = zetaConstantTerm(idx);
            out["raabe"] = a.toString();
            out["renorm"] = b.toString();
            out["constant_term"] = c.toString();
            out["agree"] = (a == b && b == c);
        }
        emit(opt, out);
    });

    // --- verify -------------------------------------------------------------
    auto* ver = app.add_subcommand("verify", "run a property sweep");
    std::string suite;
    VerifyLimits limits;
    Nat jobs = 1;
    ver->add_option("--suite", suite, "suite name")->required()->check(CLI::IsMember(suiteNames()));
    ver->add_option("--max-depth", limits.maxDepth, "max index depth r");
    ver->add_option("--max-weight", limits.maxWeight,
                    "per-exponent bound (total weight for zeta-triple)");
    ver->add_option("--max-upper", limits.maxUpper, "max upper limit N");
    ver->add_option("--bound", limits.bound, "EGF truncation degree");
    ver->add_option("--jobs", jobs, "parallel workers");
    ver->callback([&]() {
        const VerifyReport report = runSuite(suite, limits, jobs == 0 ? 1 : jobs);
        if (opt.format == "text") {
            std::cout << "suite " << report.suite << ": " << report.cases << " cases, "
                      << report.failures.size() << " failures (" << report.elapsedMs << " ms)\n";
            for (const auto& f : report.failures) {
                std::cout << "  " << f.caseKey << ": expected " << f.expected << ", got " << f.got
                          << "\n";
            }
        } else {
            emit(opt, reportToJson(report));
        }
        if (!report.failures.empty()) exitCode = 1;
    });

    // --- probe --------------------------------------------------------------
    auto* probe = app.add_subcommand("probe", "diagnostic probes (never assert)");
    probe->require_subcommand(1);
    auto* conn = probe->add_subcommand("beta-connection",
                                       "residual of the beta/B/H connection formula");
    std::string pcIndices, pcConvention = "shifted-zero";
    Nat pcUpper = 0;
    conn->add_option("--indices", pcIndices)->required();
    conn->add_option("--upper", pcUpper, "evaluation point N")->required();
    conn->add_option("--convention", pcConvention)
        ->check(CLI::IsMember({"tilde", "shifted-zero"}));
    conn->callback([&]() {
        const MultiIndex idx = MultiIndex::parse(pcIndices);
        const auto convention = pcConvention == "tilde" ? ConnectionConvention::tilde
                                                        : ConnectionConvention::shiftedZero;
        const auto rep = connectionProbe(idx, pcUpper, convention);
        json out;
        out["indices"] = idx.toString();
        out["upper"] = pcUpper;
        out["convention"] = pcConvention;
        out["lhs"] = rep.lhs.toString();
        out["rhs"] = rep.rhs.toString();
        out["residual"] = rep.residual.toString();
        emit(opt, out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exitCode;
}
