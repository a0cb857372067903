#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "umbralsum/bernoulli.hpp"
#include "umbralsum/multi_index.hpp"
#include "umbralsum/poly.hpp"
#include "umbralsum/rational.hpp"

namespace umbralsum {

// ---------------------------------------------------------------------------
// UmbralPoly: sparse multivariate polynomial over a declared, ordered set of
// symbol variables. Reduction operations replace powers of one variable by
// prescribed values and remove the variable from the set.
// ---------------------------------------------------------------------------

class UmbralPoly {
public:
    using Exponents = std::vector<unsigned>;

    explicit UmbralPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static UmbralPoly constant(std::vector<std::string> vars, const Rational& c) {
        UmbralPoly p(std::move(vars));
        if (!c.isZero()) p.terms_[Exponents(p.vars_.size(), 0)] = c;
        return p;
    }

    static UmbralPoly variable(std::vector<std::string> vars, const std::string& name) {
        UmbralPoly p(std::move(vars));
        Exponents e(p.vars_.size(), 0);
        e[p.varIndex(name)] = 1;
        p.terms_[e] = Rational(1);
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }

    std::size_t varIndex(const std::string& name) const {
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) throw std::invalid_argument("UmbralPoly: unknown variable '" + name + "'");
        return static_cast<std::size_t>(it - vars_.begin());
    }

    void addTerm(const Exponents& e, const Rational& c) {
        if (e.size() != vars_.size()) throw std::invalid_argument("UmbralPoly: exponent arity mismatch");
        if (c.isZero()) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.isZero()) terms_.erase(it);
        }
    }

    UmbralPoly& operator+=(const UmbralPoly& o) {
        requireSameVars(o);
        for (const auto& [e, c] : o.terms_) addTerm(e, c);
        return *this;
    }
    UmbralPoly& operator-=(const UmbralPoly& o) {
        requireSameVars(o);
        for (const auto& [e, c] : o.terms_) addTerm(e, -c);
        return *this;
    }
    friend UmbralPoly operator+(UmbralPoly a, const UmbralPoly& b) { a += b; return a; }
    friend UmbralPoly operator-(UmbralPoly a, const UmbralPoly& b) { a -= b; return a; }

    friend UmbralPoly operator*(const UmbralPoly& a, const UmbralPoly& b) {
        a.requireSameVars(b);
        UmbralPoly out(a.vars_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                out.addTerm(e, ca * cb);
            }
        }
        return out;
    }

    friend UmbralPoly operator*(const Rational& s, const UmbralPoly& p) {
        UmbralPoly out(p.vars_);
        if (s.isZero()) return out;
        for (const auto& [e, c] : p.terms_) out.terms_[e] = s * c;
        return out;
    }

    UmbralPoly pow(unsigned k) const {
        UmbralPoly acc = constant(vars_, Rational(1));
        for (unsigned i = 0; i < k; ++i) acc = acc * *this;
        return acc;
    }

    friend bool operator==(const UmbralPoly& a, const UmbralPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    std::string toString() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [e, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += c.toString();
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                s += "*" + vars_[i];
                if (e[i] > 1) s += "^" + std::to_string(e[i]);
            }
        }
        return s;
    }

    std::vector<std::string> varsWithout(const std::string& name) const {
        std::vector<std::string> out;
        const std::size_t vi = varIndex(name);
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (i != vi) out.push_back(vars_[i]);
        }
        return out;
    }

private:
    void requireSameVars(const UmbralPoly& o) const {
        if (vars_ != o.vars_) throw std::invalid_argument("UmbralPoly: variable sets differ");
    }

    std::vector<std::string> vars_;
    std::map<Exponents, Rational> terms_;
};

namespace detail {

inline UmbralPoly::Exponents dropSlot(const UmbralPoly::Exponents& e, std::size_t slot) {
    UmbralPoly::Exponents out;
    out.reserve(e.size() - 1);
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i != slot) out.push_back(e[i]);
    }
    return out;
}

// coefficient-wise replacement var^m -> f(m); var leaves the variable set
template <class F>
UmbralPoly replacePowers(const UmbralPoly& p, const std::string& var, F valueOf) {
    const std::size_t vi = p.varIndex(var);
    UmbralPoly out(p.varsWithout(var));
    for (const auto& [e, c] : p.terms()) {
        out.addTerm(dropSlot(e, vi), c * valueOf(e[vi]));
    }
    return out;
}

}  // namespace detail

// Bernoulli symbol rule: var^m -> B_m (so var^0 -> B_0 = 1).
inline UmbralPoly reduceBernoulliSymbol(const UmbralPoly& p, const std::string& var) {
    return detail::replacePowers(p, var, [](unsigned m) { return bernoulliNumber(m); });
}

// Uniform symbol rule: var^m -> 1/(m+1).
inline UmbralPoly reduceUniformSymbol(const UmbralPoly& p, const std::string& var) {
    return detail::replacePowers(p, var, [](unsigned m) { return Rational(1, static_cast<long>(m) + 1); });
}

// Formal partial derivative; applied before any reduction of var.
inline UmbralPoly umbralDerivative(const UmbralPoly& p, const std::string& var) {
    const std::size_t vi = p.varIndex(var);
    UmbralPoly out(p.vars());
    for (const auto& [e, c] : p.terms()) {
        if (e[vi] == 0) continue;
        auto de = e;
        de[vi] -= 1;
        out.addTerm(de, c * Rational(static_cast<long>(e[vi])));
    }
    return out;
}

// integral rule of the V symbol: var^m -> upper^{m+1}/(m+1) on every
// monomial, including m = 0 (so the zeroth power becomes upper, not 1).
// upper must be declared over exactly the remaining variables.
inline UmbralPoly vIntegrate(const UmbralPoly& p, const std::string& var, const UmbralPoly& upper) {
    const std::size_t vi = p.varIndex(var);
    if (upper.vars() != p.varsWithout(var)) {
        throw std::invalid_argument("vIntegrate: upper bound must use the remaining variables");
    }
    UmbralPoly out(upper.vars());
    std::map<unsigned, UmbralPoly> powers;  // upper^{m+1} memo
    for (const auto& [e, c] : p.terms()) {
        const unsigned m = e[vi];
        auto it = powers.find(m);
        if (it == powers.end()) it = powers.emplace(m, upper.pow(m + 1)).first;
        UmbralPoly rest(out.vars());
        rest.addTerm(detail::dropSlot(e, vi), c / Rational(static_cast<long>(m) + 1));
        out += rest * it->second;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Nested symbol reduction. A product  prod_k H_{1..k}^{n_k}  is evaluated
// right-to-left as a single polynomial in the current level's symbol.
// Exponents of the same symbol accumulate before the level rule applies, and
// zeroth powers still pass through the rule.
//
// Zero-exponent convention:
//   strictSum  — level rules carry the -[p=0] correction, so values agree
//                with the strict sums over N > i_1 > ... > i_r > 0;
//   extended   — the rules exactly as displayed, i.e. the polynomial family
//                whose innermost summation index is relaxed to i_r >= 0
//                (the one the generating-function recurrences satisfy).
// The two coincide whenever every n_k >= 1.
// ---------------------------------------------------------------------------

enum class ZeroPowers { strictSum, extended };

struct FiniteUpper {
    std::optional<Rational> upper;  // nullopt: keep N symbolic
};
struct Renormalized {};
struct Apostol {
    Rational lambda;
    Nat upper;
};
using ReductionBase = std::variant<FiniteUpper, Renormalized, Apostol>;
using NestedValue = std::variant<Rational, Poly>;

namespace detail {

// h^p -> ((b + h')^{p+1} - B_{p+1})/(p+1) with b reduced eagerly; the
// subtraction cancels the j=0 binomial term. strict adds -h'^0 at p = 0.
inline std::vector<Rational> finiteLevelRule(unsigned p, ZeroPowers zp) {
    std::vector<Rational> rule(p + 2, Rational(0));
    const Rational inv(1, static_cast<long>(p) + 1);
    for (unsigned j = 1; j <= p + 1; ++j) {
        rule[j] = binomial(p + 1, j) * bernoulliNumber(p + 1 - j) * inv;
    }
    if (p == 0 && zp == ZeroPowers::strictSum) rule[0] = Rational(-1);
    return rule;
}

// renormalization keeps the j=0 term and subtracts nothing
inline std::vector<Rational> renormLevelRule(unsigned p) {
    std::vector<Rational> rule(p + 2, Rational(0));
    const Rational inv(1, static_cast<long>(p) + 1);
    for (unsigned j = 0; j <= p + 1; ++j) {
        rule[j] = binomial(p + 1, j) * bernoulliNumber(p + 1 - j) * inv;
    }
    return rule;
}

// weak-inequality chain: the level argument is shifted by one,
// h^p -> sum_{k=1}^{h'+1 - 1}... i.e. faulhaber(p) at (h'+1), strict at p=0.
// The h'^0 coefficient vanishes identically.
inline std::vector<Rational> weakLevelRule(unsigned p) {
    Poly shifted = faulhaberPoly(p).shiftArg(Rational(1));
    if (p == 0) shifted -= Poly(Rational(1));
    std::vector<Rational> rule(p + 2, Rational(0));
    for (unsigned j = 0; j <= static_cast<unsigned>(shifted.degree()); ++j) rule[j] = shifted.coeff(j);
    return rule;
}

// Runs levels r..2: apply the level rule to every monomial of q, then merge
// in the next factor's exponent. Returns coefficients over the base symbol.
template <class LevelRule>
std::vector<Rational> chainToBase(const std::vector<Nat>& n, LevelRule level) {
    const std::size_t r = n.size();
    std::vector<Rational> q(n[r - 1] + 1, Rational(0));
    q[n[r - 1]] = Rational(1);
    for (std::size_t k = r; k >= 2; --k) {
        std::vector<Rational> mapped(q.size() + 1, Rational(0));
        for (unsigned p = 0; p < q.size(); ++p) {
            if (q[p].isZero()) continue;
            const auto rule = level(p);
            for (unsigned j = 0; j < rule.size(); ++j) {
                if (!rule[j].isZero()) mapped[j] += q[p] * rule[j];
            }
        }
        const Nat shift = n[k - 2];
        std::vector<Rational> next(mapped.size() + shift, Rational(0));
        for (unsigned p = 0; p < mapped.size(); ++p) next[p + shift] = mapped[p];
        q = std::move(next);
    }
    return q;
}

}  // namespace detail

// Multiple power sum as a polynomial in the (symbolic) upper limit.
inline Poly nestedPowerSumPoly(const MultiIndex& idx, ZeroPowers zp) {
    const auto q = detail::chainToBase(idx.n, [zp](unsigned p) { return detail::finiteLevelRule(p, zp); });
    Poly out;
    for (unsigned p = 0; p < q.size(); ++p) {
        if (q[p].isZero()) continue;
        Poly base = faulhaberPoly(p);
        if (p == 0 && zp == ZeroPowers::strictSum) base -= Poly(Rational(1));
        out += q[p] * base;
    }
    return out;
}

// Weak-inequality sum (N >= i_1 >= ... >= i_r >= 1) as a polynomial in N.
inline Poly nestedWeakSumPoly(const MultiIndex& idx) {
    const auto q = detail::chainToBase(idx.n, [](unsigned p) { return detail::weakLevelRule(p); });
    Poly out;
    for (unsigned p = 0; p < q.size(); ++p) {
        if (q[p].isZero()) continue;
        Poly base = faulhaberPoly(p).shiftArg(Rational(1));
        if (p == 0) base -= Poly(Rational(1));
        out += q[p] * base;
    }
    return out;
}

// Renormalized value of the divergent N -> infinity limit.
inline Rational nestedRenormProduct(const MultiIndex& idx) {
    const auto q = detail::chainToBase(idx.n, [](unsigned p) { return detail::renormLevelRule(p); });
    Rational out(0);
    for (unsigned p = 0; p < q.size(); ++p) {
        if (q[p].isZero()) continue;
        out += q[p] * bernoulliNumber(p + 1) / Rational(static_cast<long>(p) + 1);
    }
    return out;
}

// Apostol base: geometric weight lambda^{i_1}; N must be concrete so that
// lambda^N is an exact rational. Inner levels are the finite rules.
inline Rational nestedApostolProduct(const MultiIndex& idx, const Rational& lambda, Nat upper) {
    if (lambda.isZero()) throw std::invalid_argument("nestedApostolProduct: lambda must be nonzero");
    const auto q = detail::chainToBase(
        idx.n, [](unsigned p) { return detail::finiteLevelRule(p, ZeroPowers::strictSum); });
    const auto family = detail::apostolFamily(static_cast<Nat>(q.size()), lambda);
    const Rational lN = lambda.pow(static_cast<long>(upper));
    const Rational N(static_cast<long>(upper));
    Rational out(0);
    for (unsigned p = 0; p < q.size(); ++p) {
        if (q[p].isZero()) continue;
        Rational base = (lN * family[p + 1].eval(N) - family[p + 1].eval(Rational(0))) /
                        Rational(static_cast<long>(p) + 1);
        if (p == 0) base -= Rational(1);
        out += q[p] * base;
    }
    return out;
}

// The spec-facing entry point; strict-sum semantics throughout.
inline NestedValue reduceNestedProduct(const MultiIndex& idx, const ReductionBase& base) {
    if (std::holds_alternative<Renormalized>(base)) {
        return nestedRenormProduct(idx);
    }
    if (const auto* ap = std::get_if<Apostol>(&base)) {
        return nestedApostolProduct(idx, ap->lambda, ap->upper);
    }
    const auto& fin = std::get<FiniteUpper>(base);
    Poly p = nestedPowerSumPoly(idx, ZeroPowers::strictSum);
    if (fin.upper.has_value()) return p.eval(*fin.upper);
    return p;
}

}  // namespace umbralsum
