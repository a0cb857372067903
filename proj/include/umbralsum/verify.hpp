#pragma once

#include <atomic>
#include <chrono>
#include <functional>
#include <future>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "umbralsum/egf.hpp"
#include "umbralsum/extbern.hpp"
#include "umbralsum/mzv.hpp"
#include "umbralsum/powersum.hpp"

namespace umbralsum {

struct VerifyLimits {
    Nat maxDepth = 0;  // 0 selects the suite default
    Nat maxWeight = 0;
    Nat maxUpper = 0;
    Nat bound = 0;
};

struct VerifyFailure {
    std::string caseKey;
    std::string expected;
    std::string got;
};

struct VerifyReport {
    std::string suite;
    std::size_t cases = 0;
    std::vector<VerifyFailure> failures;
    long long elapsedMs = 0;
};

namespace detail {

struct SweepCase {
    std::string key;
    std::function<std::optional<VerifyFailure>()> run;
};

// depth-ascending, then lexicographic over the tuple
inline void forEachIndex(Nat minDepth, Nat maxDepth, Nat lo, Nat hi,
                         const std::function<void(const std::vector<Nat>&)>& f) {
    for (Nat depth = minDepth; depth <= maxDepth; ++depth) {
        std::vector<Nat> idx(depth, lo);
        std::function<void(std::size_t)> rec = [&](std::size_t pos) {
            if (pos == depth) {
                f(idx);
                return;
            }
            for (Nat v = lo; v <= hi; ++v) {
                idx[pos] = v;
                rec(pos + 1);
            }
        };
        rec(0);
    }
}

// tuples with entries >= 0 and total weight <= maxWeight
inline void forEachWeightedIndex(Nat maxDepth, Nat maxWeight,
                                 const std::function<void(const std::vector<Nat>&)>& f) {
    for (Nat depth = 1; depth <= maxDepth; ++depth) {
        std::vector<Nat> idx(depth, 0);
        std::function<void(std::size_t, Nat)> rec = [&](std::size_t pos, Nat used) {
            if (pos == depth) {
                f(idx);
                return;
            }
            for (Nat v = 0; v + used <= maxWeight; ++v) {
                idx[pos] = v;
                rec(pos + 1, used + v);
            }
        };
        rec(0, 0);
    }
}

inline std::optional<VerifyFailure> expectEq(const std::string& key, const Rational& expected,
                                             const Rational& got, const std::string& what) {
    if (expected == got) return std::nullopt;
    return VerifyFailure{key, what + " " + expected.toString(), got.toString()};
}

inline std::vector<Rational> liSamples() {
    return {Rational(1), Rational(1, 2), Rational(2), Rational(-1), Rational(3, 4)};
}
inline std::vector<Rational> gSamples() {
    return {Rational(0), Rational(1), Rational(2), Rational(1, 2), Rational(-1)};
}
inline std::vector<Rational> lambdaSamples() {
    return {Rational(1), Rational(2), Rational(1, 2), Rational(-1), Rational(3, 5)};
}
inline std::vector<Rational> hansenSamples() {
    return {Rational(0), Rational(1),    Rational(-1), Rational(2),
            Rational(-2), Rational(1, 2), Rational(5, 3)};
}

inline std::vector<SweepCase> buildOracleH(const VerifyLimits& lim) {
    std::vector<SweepCase> cases;
    forEachIndex(1, lim.maxDepth, 1, lim.maxWeight, [&](const std::vector<Nat>& n) {
        const MultiIndex idx(n);
        cases.push_back({"h poly " + idx.toString(), [idx]() -> std::optional<VerifyFailure> {
                             const Poly sym = symbolicH(idx).poly;
                             const Poly exp = explicitExpansionH(idx).poly;
                             if (sym == exp) return std::nullopt;
                             return VerifyFailure{"h poly " + idx.toString(), sym.toString(),
                                                  exp.toString()};
                         }});
        for (Nat N = 0; N <= lim.maxUpper; ++N) {
            const std::string key = "h " + idx.toString() + " N=" + std::to_string(N);
            cases.push_back({key, [idx, N, key]() -> std::optional<VerifyFailure> {
                                 const Rational want = oracleH(idx, N);
                                 const Rational NR(static_cast<long>(N));
                                 if (auto f = expectEq(key, want, symbolicH(idx, NR), "symbolic vs oracle"))
                                     return f;
                                 if (idx.depth() >= 2) {
                                     if (auto f = expectEq(key, want, recurrenceH(idx, NR),
                                                           "recurrence vs oracle"))
                                         return f;
                                 }
                                 return expectEq(key, want, explicitExpansionH(idx).poly.eval(NR),
                                                 "explicit vs oracle");
                             }});
        }
    });
    return cases;
}

inline std::vector<SweepCase> buildOracleS(const VerifyLimits& lim) {
    std::vector<SweepCase> cases;
    forEachIndex(1, lim.maxDepth, 0, lim.maxWeight, [&](const std::vector<Nat>& n) {
        const MultiIndex idx(n);
        for (Nat N = 0; N <= lim.maxUpper; ++N) {
            const std::string key = "s " + idx.toString() + " N=" + std::to_string(N);
            cases.push_back({key, [idx, N, key]() {
                                 return expectEq(key, oracleS(idx, N),
                                                 symbolicS(idx, Rational(static_cast<long>(N))),
                                                 "symbolic vs oracle");
                             }});
        }
    });
    return cases;
}

inline std::vector<SweepCase> buildOracleLi(const VerifyLimits& lim) {
    std::vector<SweepCase> cases;
    forEachIndex(1, lim.maxDepth, 1, lim.maxWeight, [&](const std::vector<Nat>& n) {
        const MultiIndex idx(n);
        for (Nat N = 0; N <= lim.maxUpper; ++N) {
            for (const Rational& z : liSamples()) {
                const std::string key =
                    "li " + idx.toString() + " z=" + z.toString() + " N=" + std::to_string(N);
                cases.push_back({key, [idx, z, N, key]() -> std::optional<VerifyFailure> {
                                     const Rational want = oracleLi(idx, z, N);
                                     if (auto f = expectEq(key, want, symbolicLi(idx, z, N),
                                                           "symbolic vs oracle"))
                                         return f;
                                     if (z == Rational(1)) {
                                         return expectEq(key, want,
                                                         symbolicH(idx, Rational(static_cast<long>(N))),
                                                         "z=1 vs symbolicH");
                                     }
                                     return std::nullopt;
                                 }});
            }
        }
    });
    return cases;
}

inline std::vector<SweepCase> buildRecurrence1(const VerifyLimits& lim) {
    std::vector<SweepCase> cases;
    forEachIndex(2, std::max<Nat>(lim.maxDepth, 2), 0, lim.maxWeight, [&](const std::vector<Nat>& n) {
        const MultiIndex idx(n);
        for (Nat N = 1; N <= lim.maxUpper; ++N) {
            const std::string key = "rec " + idx.toString() + " N=" + std::to_string(N);
            cases.push_back({key, [idx, N, key]() {
                                 return expectEq(key, oracleH(idx, N),
                                                 recurrenceH(idx, Rational(static_cast<long>(N))),
                                                 "recurrence vs oracle");
                             }});
        }
    });
    return cases;
}

inline std::vector<SweepCase> buildExplicitExpansion(const VerifyLimits& lim) {
    std::vector<SweepCase> cases;
    forEachIndex(1, lim.maxDepth, 1, lim.maxWeight, [&](const std::vector<Nat>& n) {
        const MultiIndex idx(n);
        const std::string key = "faulhaber " + idx.toString();
        cases.push_back({key, [idx, key]() -> std::optional<VerifyFailure> {
                             const PowerSumPoly e = explicitExpansionH(idx);
                             if (e.poly != symbolicH(idx).poly) {
                                 return VerifyFailure{key, symbolicH(idx).poly.toString(),
                                                      e.poly.toString()};
                             }
                             if (!e.poly.coeff(0).isZero()) {
                                 return VerifyFailure{key, "zero constant term", e.poly.coeff(0).toString()};
                             }
                             const long wantDeg = static_cast<long>(idx.weight() + idx.depth());
                             if (e.poly.degree() != wantDeg) {
                                 return VerifyFailure{key, "degree " + std::to_string(wantDeg),
                                                      std::to_string(e.poly.degree())};
                             }
                             for (Nat root = 0; root <= idx.depth(); ++root) {
                                 const Rational v = e.poly.eval(Rational(static_cast<long>(root)));
                                 if (!v.isZero()) {
                                     return VerifyFailure{key, "root at " + std::to_string(root),
                                                          v.toString()};
                                 }
                             }
                             return std::nullopt;
                         }});
    });
    return cases;
}

inline std::vector<SweepCase> buildBetaRecurrence(const VerifyLimits& lim) {
    std::vector<SweepCase> cases;
    forEachIndex(2, std::max<Nat>(lim.maxDepth, 2), 1, lim.maxWeight, [&](const std::vector<Nat>& n) {
        const MultiIndex idx(n);
        const std::string key = "beta-rec " + idx.toString();
        cases.push_back({key, [idx, key]() -> std::optional<VerifyFailure> {
                             const auto rep = betaRecurrenceCheck(idx);
                             if (rep.pass) return std::nullopt;
                             return VerifyFailure{key, "0", rep.residual.toString()};
                         }});
    });
    return cases;
}

inline std::vector<SweepCase> buildDerivativeLink(const VerifyLimits& lim) {
    std::vector<SweepCase> cases;
    forEachIndex(1, lim.maxDepth, 1, lim.maxWeight, [&](const std::vector<Nat>& n) {
        const MultiIndex idx(n);
        const std::string key = "dlink " + idx.toString();
        cases.push_back({key, [idx, key]() -> std::optional<VerifyFailure> {
                             const auto rep = derivativeLinkCheck(idx);
                             if (rep.pass) return std::nullopt;
                             return VerifyFailure{key, rep.betaRoute.toString(),
                                                  rep.derivativeRoute.toString()};
                         }});
    });
    return cases;
}

inline std::vector<SweepCase> buildBetaExample(const VerifyLimits& lim) {
    std::vector<SweepCase> cases;
    for (Nat m = 0; m <= lim.maxWeight; ++m) {
        for (Nat N = 1; N <= lim.maxUpper; ++N) {
            const std::string key = "beta2m m=" + std::to_string(m) + " N=" + std::to_string(N);
            cases.push_back({key, [m, N, key]() -> std::optional<VerifyFailure> {
                                 const auto rep = betaExampleIdentity(m, N);
                                 if (rep.pass) return std::nullopt;
                                 return VerifyFailure{key, rep.lhs.toString(), rep.rhs.toString()};
                             }});
        }
    }
    return cases;
}

inline std::vector<SweepCase> buildEgfF(const VerifyLimits& lim) {
    std::vector<SweepCase> cases;
    for (Nat r = 2; r <= std::max<Nat>(lim.maxDepth, 2); ++r) {
        for (Nat N = 2; N <= lim.maxUpper; ++N) {
            const std::string key = "egf-f r=" + std::to_string(r) + " N=" + std::to_string(N);
            const Nat D = lim.bound;
            cases.push_back({key, [r, N, D, key]() -> std::optional<VerifyFailure> {
                                 const auto rep = verifyFRecurrence(r, Rational(static_cast<long>(N)), D);
                                 if (rep.pass) return std::nullopt;
                                 return VerifyFailure{key + " tuple " + MultiIndex(rep.firstMismatch).toString(),
                                                      rep.rhs.toString(), rep.lhs.toString()};
                             }});
        }
    }
    return cases;
}

inline std::vector<SweepCase> buildEgfG(const VerifyLimits& lim) {
    std::vector<SweepCase> cases;
    for (Nat r = 2; r <= std::max<Nat>(lim.maxDepth, 2); ++r) {
        for (const Rational& z : gSamples()) {
            const std::string key = "egf-g r=" + std::to_string(r) + " z=" + z.toString();
            const Nat D = lim.bound;
            cases.push_back({key, [r, z, D, key]() -> std::optional<VerifyFailure> {
                                 const auto rep = verifyGRecurrence(r, z, D);
                                 if (rep.pass) return std::nullopt;
                                 return VerifyFailure{key + " tuple " + MultiIndex(rep.firstMismatch).toString(),
                                                      rep.rhs.toString(), rep.lhs.toString()};
                             }});
        }
    }
    return cases;
}

inline std::vector<SweepCase> buildZetaTriple(const VerifyLimits& lim) {
    std::vector<SweepCase> cases;
    forEachWeightedIndex(lim.maxDepth, lim.maxWeight, [&](const std::vector<Nat>& n) {
        const MultiIndex idx(n);
        const std::string key = "zeta " + idx.toString();
        cases.push_back({key, [idx, key]() -> std::optional<VerifyFailure> {
                             const Rational raabe = zetaRaabe(idx);
                             if (auto f = expectEq(key, raabe, zetaRenorm(idx), "renorm vs raabe"))
                                 return f;
                             return expectEq(key, raabe, zetaConstantTerm(idx), "constant-term vs raabe");
                         }});
    });
    // depth-2 closed form against the general methods
    for (Nat n = 0; n <= 5; ++n) {
        for (Nat m = 0; m <= 5; ++m) {
            const std::string key = "zeta depth2 " + std::to_string(n) + "," + std::to_string(m);
            cases.push_back({key, [n, m, key]() {
                                 return expectEq(key, zetaRaabe(MultiIndex{n, m}), zetaDepth2(n, m),
                                                 "depth2 vs raabe");
                             }});
        }
    }
    // frozen spot values, re-derived from the depth-2 closed form and from
    // (-1)^n B_{n+1}/(n+1)
    const std::vector<std::pair<MultiIndex, Rational>> spots = {
        {MultiIndex{0}, Rational(-1, 2)},    {MultiIndex{1}, Rational(-1, 12)},
        {MultiIndex{2}, Rational(0)},        {MultiIndex{3}, Rational(1, 120)},
        {MultiIndex{1, 1}, Rational(1, 360)}, {MultiIndex{1, 0}, Rational(1, 24)},
        {MultiIndex{0, 0}, Rational(1, 3)},
    };
    for (const auto& [idx, want] : spots) {
        const std::string key = "zeta spot " + idx.toString();
        const MultiIndex i = idx;
        const Rational w = want;
        cases.push_back({key, [i, w, key]() { return expectEq(key, w, zetaRaabe(i), "spot"); }});
    }
    return cases;
}

inline std::vector<SweepCase> buildCancellation(const VerifyLimits& lim) {
    std::vector<SweepCase> cases;
    for (Nat n = 0; n <= lim.maxWeight; ++n) {
        const std::string key = "cancel n=" + std::to_string(n);
        cases.push_back({key, [n, key]() -> std::optional<VerifyFailure> {
                             const std::vector<std::string> vars{"x", "b", "u"};
                             const UmbralPoly sum = UmbralPoly::variable(vars, "x") +
                                                    UmbralPoly::variable(vars, "b") +
                                                    UmbralPoly::variable(vars, "u");
                             const UmbralPoly p = sum.pow(static_cast<unsigned>(n));
                             const UmbralPoly bu = reduceUniformSymbol(reduceBernoulliSymbol(p, "b"), "u");
                             const UmbralPoly ub = reduceBernoulliSymbol(reduceUniformSymbol(p, "u"), "b");
                             UmbralPoly want(std::vector<std::string>{"x"});
                             want.addTerm({static_cast<unsigned>(n)}, Rational(1));
                             if (bu == want && ub == want) return std::nullopt;
                             return VerifyFailure{key, want.toString(), bu.toString()};
                         }});
    }
    return cases;
}

inline std::vector<SweepCase> buildHansen(const VerifyLimits& lim) {
    std::vector<SweepCase> cases;
    for (Nat p = 0; p <= lim.maxWeight; ++p) {
        for (const Rational& z : hansenSamples()) {
            const std::string key = "hansen p=" + std::to_string(p) + " z=" + z.toString();
            cases.push_back({key, [p, z, key]() {
                                 return expectEq(key, faulhaberPoly(p).eval(z), hansenReduce(p, z),
                                                 "identity");
                             }});
        }
    }
    return cases;
}

inline std::vector<SweepCase> buildApostolFaulhaber(const VerifyLimits& lim) {
    std::vector<SweepCase> cases;
    for (Nat n = 0; n <= lim.maxWeight; ++n) {
        for (Nat m = 1; m <= lim.maxUpper; ++m) {
            for (const Rational& lambda : lambdaSamples()) {
                const std::string key = "apostol n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                        " lambda=" + lambda.toString();
                cases.push_back({key, [n, m, lambda, key]() {
                                     Rational brute(0);
                                     for (Nat j = 1; j < m; ++j) {
                                         brute += lambda.pow(static_cast<long>(j)) * ipow(j, n);
                                     }
                                     return expectEq(key, brute, apostolFaulhaber(n, lambda, m),
                                                     "closed form vs brute force");
                                 }});
            }
        }
    }
    return cases;
}

struct SuiteSpec {
    std::function<std::vector<SweepCase>(const VerifyLimits&)> build;
    VerifyLimits defaults;
};

inline const std::vector<std::pair<std::string, SuiteSpec>>& suiteRegistry() {
    static const std::vector<std::pair<std::string, SuiteSpec>> reg = {
        {"oracle-h", {buildOracleH, {3, 4, 12, 0}}},
        {"oracle-s", {buildOracleS, {3, 3, 10, 0}}},
        {"oracle-li", {buildOracleLi, {3, 3, 10, 0}}},
        {"recurrence1", {buildRecurrence1, {3, 4, 12, 0}}},
        {"explicit-expansion", {buildExplicitExpansion, {3, 4, 0, 0}}},
        {"beta-recurrence", {buildBetaRecurrence, {3, 4, 0, 0}}},
        {"derivative-link", {buildDerivativeLink, {3, 3, 0, 0}}},
        {"beta-example", {buildBetaExample, {0, 4, 10, 0}}},
        {"egf-f", {buildEgfF, {3, 0, 8, 6}}},
        {"egf-g", {buildEgfG, {3, 0, 0, 6}}},
        {"zeta-triple", {buildZetaTriple, {4, 6, 0, 0}}},
        {"cancellation", {buildCancellation, {0, 8, 0, 0}}},
        {"hansen", {buildHansen, {0, 6, 0, 0}}},
        {"apostol-faulhaber", {buildApostolFaulhaber, {0, 6, 12, 0}}},
    };
    return reg;
}

}  // namespace detail

inline std::vector<std::string> suiteNames() {
    std::vector<std::string> names;
    for (const auto& [name, spec] : detail::suiteRegistry()) names.push_back(name);
    return names;
}

// Runs the named property suite. jobs > 1 evaluates cases concurrently; the
// report is assembled in enumeration order either way.
inline VerifyReport runSuite(const std::string& name, VerifyLimits limits = {}, Nat jobs = 1) {
    const detail::SuiteSpec* spec = nullptr;
    for (const auto& [n, s] : detail::suiteRegistry()) {
        if (n == name) spec = &s;
    }
    if (spec == nullptr) throw std::invalid_argument("unknown suite '" + name + "'");

    VerifyLimits eff = limits;
    if (eff.maxDepth == 0) eff.maxDepth = spec->defaults.maxDepth;
    if (eff.maxWeight == 0) eff.maxWeight = spec->defaults.maxWeight;
    if (eff.maxUpper == 0) eff.maxUpper = spec->defaults.maxUpper;
    if (eff.bound == 0) eff.bound = spec->defaults.bound;

    const auto start = std::chrono::steady_clock::now();
    auto cases = spec->build(eff);

    std::vector<std::optional<VerifyFailure>> results(cases.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < cases.size(); ++i) results[i] = cases[i].run();
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            for (std::size_t i = next.fetch_add(1); i < cases.size(); i = next.fetch_add(1)) {
                results[i] = cases[i].run();
            }
        };
        std::vector<std::future<void>> pool;
        for (Nat t = 0; t < jobs; ++t) pool.push_back(std::async(std::launch::async, worker));
        for (auto& f : pool) f.get();
    }

    VerifyReport report;
    report.suite = name;
    report.cases = cases.size();
    for (auto& r : results) {
        if (r.has_value()) report.failures.push_back(std::move(*r));
    }
    report.elapsedMs = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
    return report;
}

}  // namespace umbralsum
