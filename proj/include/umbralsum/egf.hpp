#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "umbralsum/extbern.hpp"
#include "umbralsum/multi_index.hpp"
#include "umbralsum/powersum.hpp"
#include "umbralsum/rational.hpp"

namespace umbralsum {

// Truncated multivariate EGF: coefficient of prod w_i^{d_i}/d_i! at every
// exponent tuple with total degree <= bound. Divided-power normalization
// makes the substitution w <- w' + w'' a pure re-indexing.
class EgfTable {
public:
    using Tuple = std::vector<Nat>;

    EgfTable(Nat arity, Nat bound) : arity_(arity), bound_(bound) {
        if (arity == 0) throw std::invalid_argument("EgfTable: arity must be >= 1");
    }

    Nat arity() const { return arity_; }
    Nat bound() const { return bound_; }

    Rational coeff(const Tuple& t) const {
        auto it = c_.find(t);
        return it == c_.end() ? Rational(0) : it->second;
    }

    void set(const Tuple& t, const Rational& v) {
        if (t.size() != arity_) throw std::invalid_argument("EgfTable: tuple arity mismatch");
        if (total(t) > bound_) return;
        if (v.isZero()) {
            c_.erase(t);
        } else {
            c_[t] = v;
        }
    }

    void add(const Tuple& t, const Rational& v) { set(t, coeff(t) + v); }

    const std::map<Tuple, Rational>& coeffs() const { return c_; }

    static Nat total(const Tuple& t) {
        Nat s = 0;
        for (Nat x : t) s += x;
        return s;
    }

    // visits every tuple with total degree <= bound, lexicographically
    template <class F>
    void forEachTuple(F f) const {
        Tuple t(arity_, 0);
        std::function<void(std::size_t, Nat)> rec = [&](std::size_t pos, Nat used) {
            if (pos == arity_) {
                f(t);
                return;
            }
            for (Nat d = 0; d + used <= bound_; ++d) {
                t[pos] = d;
                rec(pos + 1, used + d);
            }
            t[pos] = 0;
        };
        rec(0, 0);
    }

    friend bool operator==(const EgfTable& a, const EgfTable& b) {
        return a.arity_ == b.arity_ && a.bound_ == b.bound_ && a.c_ == b.c_;
    }

private:
    Nat arity_;
    Nat bound_;
    std::map<Tuple, Rational> c_;
};

// F_r table: coefficient at (n_1,...,n_r) is the nested power-sum value at
// N. Zero-exponent tuples take the extended (polynomial-family) values; that
// family is the one satisfying the generating-function recurrence.
inline EgfTable buildF(Nat r, const Rational& N, Nat D) {
    EgfTable t(r, D);
    t.forEachTuple([&](const EgfTable::Tuple& tuple) {
        t.set(tuple, nestedPowerSumPoly(MultiIndex(tuple), ZeroPowers::extended)
                         .eval(N));
    });
    return t;
}

// G_r table: coefficient at (n_1,...,n_r) is beta_{n_1,...,n_r}(z); zero
// whenever any n_k = 0.
inline EgfTable buildG(Nat r, const Rational& z, Nat D) {
    EgfTable t(r, D);
    t.forEachTuple([&](const EgfTable::Tuple& tuple) {
        for (Nat x : tuple) {
            if (x == 0) return;
        }
        t.set(tuple, betaSymbolic(MultiIndex(tuple)).poly.eval(z));
    });
    return t;
}

// f(w_1,...,w_m) -> f(w_1,...,w_{m-1}+w_m) as an arity m+1 table:
// out[..., a, b] = in[..., a+b].
inline EgfTable shiftLastVariable(const EgfTable& in) {
    EgfTable out(in.arity() + 1, in.bound());
    for (const auto& [t, v] : in.coeffs()) {
        const Nat c = t.back();
        EgfTable::Tuple nt(t.begin(), t.end() - 1);
        nt.push_back(0);
        nt.push_back(0);
        for (Nat a = 0; a <= c; ++a) {
            nt[nt.size() - 2] = a;
            nt[nt.size() - 1] = c - a;
            out.set(nt, v);
        }
    }
    return out;
}

// embeds an arity-m table as arity m+1 with the new last variable absent
inline EgfTable embedNewLast(const EgfTable& in) {
    EgfTable out(in.arity() + 1, in.bound());
    for (const auto& [t, v] : in.coeffs()) {
        EgfTable::Tuple nt = t;
        nt.push_back(0);
        out.set(nt, v);
    }
    return out;
}

// multiply by (e^{w_i} - 1): out[t] = sum_{s < t_i} C(t_i, s) in[t with i<-s]
inline EgfTable mulExpMinusOne(const EgfTable& in, Nat varIndex) {
    if (varIndex >= in.arity()) throw std::invalid_argument("mulExpMinusOne: variable index out of range");
    EgfTable out(in.arity(), in.bound());
    out.forEachTuple([&](const EgfTable::Tuple& t) {
        const Nat ti = t[varIndex];
        if (ti == 0) return;
        Rational acc(0);
        EgfTable::Tuple src = t;
        for (Nat s = 0; s < ti; ++s) {
            src[varIndex] = s;
            acc += binomial(ti, s) * in.coeff(src);
        }
        out.set(t, acc);
    });
    return out;
}

// multiply by w_i: out[t] = t_i * in[t with i-th lowered]
inline EgfTable mulVariable(const EgfTable& in, Nat varIndex) {
    if (varIndex >= in.arity()) throw std::invalid_argument("mulVariable: variable index out of range");
    EgfTable out(in.arity(), in.bound());
    for (const auto& [t, v] : in.coeffs()) {
        EgfTable::Tuple nt = t;
        nt[varIndex] += 1;
        if (EgfTable::total(nt) > in.bound()) continue;
        out.add(nt, Rational(static_cast<long>(nt[varIndex])) * v);
    }
    return out;
}

inline EgfTable sub(const EgfTable& a, const EgfTable& b) {
    if (a.arity() != b.arity() || a.bound() != b.bound()) {
        throw std::invalid_argument("EgfTable: shape mismatch");
    }
    EgfTable out = a;
    for (const auto& [t, v] : b.coeffs()) out.add(t, -v);
    return out;
}

inline EgfTable addTables(const EgfTable& a, const EgfTable& b) {
    if (a.arity() != b.arity() || a.bound() != b.bound()) {
        throw std::invalid_argument("EgfTable: shape mismatch");
    }
    EgfTable out = a;
    for (const auto& [t, v] : b.coeffs()) out.add(t, v);
    return out;
}

struct EgfCheckReport {
    bool pass = true;
    EgfTable::Tuple firstMismatch;
    Rational lhs;
    Rational rhs;
};

namespace detail {

inline EgfCheckReport compareTables(const EgfTable& lhs, const EgfTable& rhs) {
    EgfCheckReport report;
    lhs.forEachTuple([&](const EgfTable::Tuple& t) {
        if (!report.pass) return;
        const Rational a = lhs.coeff(t);
        const Rational b = rhs.coeff(t);
        if (a != b) {
            report.pass = false;
            report.firstMismatch = t;
            report.lhs = a;
            report.rhs = b;
        }
    });
    return report;
}

}  // namespace detail

// (e^{w_r} - 1) F_r = F_{r-1}(w_1,...,w_{r-1}+w_r) - F_{r-1}(w_1,...,w_{r-1})
// compared coefficient-wise to total degree D.
inline EgfCheckReport verifyFRecurrence(Nat r, const Rational& N, Nat D) {
    if (r < 2) throw std::invalid_argument("verifyFRecurrence: r must be >= 2");
    const EgfTable fr = buildF(r, N, D);
    const EgfTable fr1 = buildF(r - 1, N, D);
    const EgfTable lhs = mulExpMinusOne(fr, r - 1);
    const EgfTable rhs = sub(shiftLastVariable(fr1), embedNewLast(fr1));
    return detail::compareTables(lhs, rhs);
}

// Fraction-free form of the G recurrence:
// (w_{r-1}+w_r)(e^{w_r}-1) G_r
//    = w_r [ w_{r-1} G_{r-1}(...,w_{r-1}+w_r) - (w_{r-1}+w_r) G_{r-1}(...,w_{r-1}) ].
inline EgfCheckReport verifyGRecurrence(Nat r, const Rational& z, Nat D) {
    if (r < 2) throw std::invalid_argument("verifyGRecurrence: r must be >= 2");
    const EgfTable gr = buildG(r, z, D);
    const EgfTable gr1 = buildG(r - 1, z, D);

    const EgfTable e = mulExpMinusOne(gr, r - 1);
    const EgfTable lhs = addTables(mulVariable(e, r - 2), mulVariable(e, r - 1));

    const EgfTable shifted = shiftLastVariable(gr1);
    const EgfTable embedded = embedNewLast(gr1);
    const EgfTable inner =
        sub(mulVariable(shifted, r - 2),
            addTables(mulVariable(embedded, r - 2), mulVariable(embedded, r - 1)));
    const EgfTable rhs = mulVariable(inner, r - 1);
    return detail::compareTables(lhs, rhs);
}

}  // namespace umbralsum
