#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "umbralsum/multi_index.hpp"
#include "umbralsum/poly.hpp"
#include "umbralsum/umbral.hpp"

namespace umbralsum {

// H_{-n_1,...,-n_r} as a polynomial in the upper limit N.
struct PowerSumPoly {
    Poly poly;
    MultiIndex index;
};

namespace detail {

inline Rational ipow(Nat base, Nat e) {
    mpz_class z;
    mpz_ui_pow_ui(z.get_mpz_t(), base, e);
    return Rational(z);
}

}  // namespace detail

// Ground truth: direct summation over N > i_1 > ... > i_r > 0.
inline Rational oracleH(const MultiIndex& idx, Nat N) {
    const std::size_t r = idx.depth();
    Rational total(0);
    std::function<void(std::size_t, Nat, const Rational&)> rec =
        [&](std::size_t k, Nat hi, const Rational& partial) {
            if (hi <= 1) return;
            for (Nat i = 1; i < hi; ++i) {
                const Rational term = partial * detail::ipow(i, idx.n[k]);
                if (k + 1 == r) {
                    total += term;
                } else {
                    rec(k + 1, i, term);
                }
            }
        };
    rec(0, N, Rational(1));
    return total;
}

// Weak inequalities: N >= i_1 >= ... >= i_r >= 1.
inline Rational oracleS(const MultiIndex& idx, Nat N) {
    const std::size_t r = idx.depth();
    Rational total(0);
    std::function<void(std::size_t, Nat, const Rational&)> rec =
        [&](std::size_t k, Nat hi, const Rational& partial) {
            for (Nat i = 1; i <= hi; ++i) {
                const Rational term = partial * detail::ipow(i, idx.n[k]);
                if (k + 1 == r) {
                    total += term;
                } else {
                    rec(k + 1, i, term);
                }
            }
        };
    rec(0, N, Rational(1));
    return total;
}

// Truncated polylogarithm at negative indices: weight z^{i_1}.
inline Rational oracleLi(const MultiIndex& idx, const Rational& z, Nat N) {
    const std::size_t r = idx.depth();
    Rational total(0);
    std::function<void(std::size_t, Nat, const Rational&)> rec =
        [&](std::size_t k, Nat hi, const Rational& partial) {
            if (hi <= 1) return;
            for (Nat i = 1; i < hi; ++i) {
                Rational term = partial * detail::ipow(i, idx.n[k]);
                if (k == 0) term *= z.pow(static_cast<long>(i));
                if (k + 1 == r) {
                    total += term;
                } else {
                    rec(k + 1, i, term);
                }
            }
        };
    rec(0, N, Rational(1));
    return total;
}

// Multivariate weights prod z_k^{i_k}; used to verify the all-ones
// degeneration against oracleH.
inline Rational oracleMultiLi(const MultiIndex& idx, const std::vector<Rational>& zs, Nat N) {
    if (zs.size() != idx.depth()) throw std::invalid_argument("oracleMultiLi: weights/index length mismatch");
    const std::size_t r = idx.depth();
    Rational total(0);
    std::function<void(std::size_t, Nat, const Rational&)> rec =
        [&](std::size_t k, Nat hi, const Rational& partial) {
            if (hi <= 1) return;
            for (Nat i = 1; i < hi; ++i) {
                const Rational term =
                    partial * detail::ipow(i, idx.n[k]) * zs[k].pow(static_cast<long>(i));
                if (k + 1 == r) {
                    total += term;
                } else {
                    rec(k + 1, i, term);
                }
            }
        };
    rec(0, N, Rational(1));
    return total;
}

inline PowerSumPoly symbolicH(const MultiIndex& idx) {
    return PowerSumPoly{nestedPowerSumPoly(idx, ZeroPowers::strictSum), idx};
}

inline Rational symbolicH(const MultiIndex& idx, const Rational& N) {
    return symbolicH(idx).poly.eval(N);
}

inline Poly symbolicSPoly(const MultiIndex& idx) { return nestedWeakSumPoly(idx); }

inline Rational symbolicS(const MultiIndex& idx, const Rational& N) {
    return symbolicSPoly(idx).eval(N);
}

// Explicit expansion of the nested Faulhaber formula: sums over tuples
// (k_r, ..., k_1) with k_j <= D_j - 1; the j = 1 bound excludes the
// would-be constant term by construction.
inline PowerSumPoly explicitExpansionH(const MultiIndex& idx) {
    const std::size_t r = idx.depth();
    const Nat weight = idx.weight();
    std::vector<Nat> S(r + 2, 0);  // S[j] = n_j + ... + n_r, 1-based
    for (std::size_t j = r; j >= 1; --j) S[j] = S[j + 1] + idx.n[j - 1];

    std::vector<Rational> coeffs(weight + r + 1, Rational(0));
    std::function<void(std::size_t, Nat, const Rational&)> rec =
        [&](std::size_t j, Nat kSum, const Rational& factor) {
            const Nat D = S[j] + (r - j + 1) - kSum;
            for (Nat k = 0; k + 1 <= D; ++k) {
                const Rational f =
                    factor * binomial(D, k) * bernoulliNumber(k) / Rational(static_cast<long>(D));
                if (f.isZero()) continue;
                if (j == 1) {
                    coeffs[weight + r - (kSum + k)] += f;
                } else {
                    rec(j - 1, kSum + k, f);
                }
            }
        };
    rec(r, 0, Rational(1));
    return PowerSumPoly{Poly(std::move(coeffs)), idx};
}

// Depth-lowering recurrence: H_{-n_1,...,-n_r}(N) =
//   1/(n_r+1) sum_{k=1}^{n_r+1} C(n_r+1,k) B_{n_r+1-k} H_{-n_1,...,-(n_{r-1}+k)}(N),
// with the strict-sum correction -H_{-n_1,...,-n_{r-1}}(N) when n_r = 0
// (the displayed form presumes n_r >= 1).
inline Rational recurrenceH(const MultiIndex& idx, const Rational& N) {
    if (idx.depth() < 2) throw std::invalid_argument("recurrenceH: depth must be >= 2");
    std::function<Rational(const std::vector<Nat>&)> eval = [&](const std::vector<Nat>& n) -> Rational {
        if (n.size() == 1) return symbolicH(MultiIndex(n), N);
        const Nat nr = n.back();
        std::vector<Nat> lowered(n.begin(), n.end() - 1);
        Rational acc(0);
        for (Nat k = 1; k <= nr + 1; ++k) {
            lowered.back() = n[n.size() - 2] + k;
            acc += binomial(nr + 1, k) * bernoulliNumber(nr + 1 - k) * eval(lowered);
        }
        acc /= Rational(static_cast<long>(nr) + 1);
        if (nr == 0) {
            lowered.back() = n[n.size() - 2];
            acc -= eval(lowered);
        }
        return acc;
    };
    return eval(idx.n);
}

// sum over N > i_1 > ... > i_r > 0 of P_1(i_1)...P_r(i_r) by linearity over
// the monomials of each P_k. Constant terms change the meaning of the sum
// and are rejected.
inline Rational weightedNestedSum(const std::vector<Poly>& polys, const Rational& N) {
    if (polys.empty()) throw std::invalid_argument("weightedNestedSum: need at least one polynomial");
    for (const auto& p : polys) {
        if (!p.coeff(0).isZero()) {
            throw std::invalid_argument("weightedNestedSum: polynomials must have zero constant term");
        }
    }
    Rational total(0);
    std::vector<Nat> exps(polys.size(), 1);
    std::function<void(std::size_t, const Rational&)> rec = [&](std::size_t k, const Rational& c) {
        if (k == polys.size()) {
            total += c * symbolicH(MultiIndex(exps), N);
            return;
        }
        const auto& p = polys[k];
        for (long d = 1; d <= p.degree(); ++d) {
            if (p.coeff(d).isZero()) continue;
            exps[k] = static_cast<Nat>(d);
            rec(k + 1, c * p.coeff(d));
        }
    };
    rec(0, Rational(1));
    return total;
}

// Thm 3 evaluation: the base level carries the Apostol symbol A_z, the inner
// levels stay Bernoulli. Must agree with symbolicH at z = 1.
inline Rational symbolicLi(const MultiIndex& idx, const Rational& z, Nat N) {
    if (z.isZero()) throw std::invalid_argument("symbolicLi: z must be nonzero");
    return nestedApostolProduct(idx, z, N);
}

}  // namespace umbralsum
