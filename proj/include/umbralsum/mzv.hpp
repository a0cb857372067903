#pragma once

#include <functional>
#include <vector>

#include "umbralsum/bernoulli.hpp"
#include "umbralsum/combinatorics.hpp"
#include "umbralsum/multi_index.hpp"
#include "umbralsum/umbral.hpp"

namespace umbralsum {

// zeta(-n_1, ..., -n_r) by three independent routes. All three return zeta
// itself; the (-1)^{n_1+...+n_r} sign is applied internally.

namespace detail {

inline Rational zetaSign(const MultiIndex& idx) {
    return idx.weight() % 2 == 0 ? Rational(1) : Rational(-1);
}

// One factor of the Raabe / constant-term summand: C(D,k) B_k / D.
inline Rational raabeFactor(Nat D, Nat k) {
    return binomial(D, k) * bernoulliNumber(k) / Rational(static_cast<long>(D));
}

}  // namespace detail

// Raabe's explicit (r-1)-fold sum. The tuple ranges are 0 <= k_j <= D_j with
// D_j = sum_{i=j}^r n_i + r - j + 1 - sum_{i>j} k_i, iterated j = r..2; the
// leading factor B_{D_1}/D_1 is the collapsed j = 1 term.
inline Rational zetaRaabe(const MultiIndex& idx) {
    const std::size_t r = idx.depth();
    std::vector<Nat> S(r + 2, 0);
    for (std::size_t j = r; j >= 1; --j) S[j] = S[j + 1] + idx.n[j - 1];

    Rational total(0);
    std::function<void(std::size_t, Nat, const Rational&)> rec =
        [&](std::size_t j, Nat kSum, const Rational& factor) {
            if (j == 1) {
                const Nat D1 = S[1] + r - kSum;
                total += factor * bernoulliNumber(D1) / Rational(static_cast<long>(D1));
                return;
            }
            const Nat D = S[j] + (r - j + 1) - kSum;
            for (Nat k = 0; k <= D; ++k) {
                const Rational f = factor * detail::raabeFactor(D, k);
                if (!f.isZero()) rec(j - 1, kSum + k, f);
            }
        };
    rec(r, 0, Rational(1));
    return detail::zetaSign(idx) * total;
}

// Renormalized N -> infinity limit of the nested power-sum symbols.
inline Rational zetaRenorm(const MultiIndex& idx) {
    return detail::zetaSign(idx) * nestedRenormProduct(idx);
}

// Constant-term extension of the explicit nested Faulhaber expansion: sums
// the same summand over all tuples (k_1, ..., k_r) with total n~ + r, where
// the forced k_1 = D_1 collapses the j = 1 binomial to 1.
inline Rational zetaConstantTerm(const MultiIndex& idx) {
    const std::size_t r = idx.depth();
    const Nat target = idx.weight() + r;
    std::vector<Nat> S(r + 2, 0);
    for (std::size_t j = r; j >= 1; --j) S[j] = S[j + 1] + idx.n[j - 1];

    Rational total(0);
    std::function<void(std::size_t, Nat, const Rational&)> rec =
        [&](std::size_t j, Nat kSum, const Rational& factor) {
            const Nat D = S[j] + (r - j + 1) - kSum;
            if (j == 1) {
                // remaining budget must land exactly on k_1 = D_1
                if (target - kSum != D) return;
                total += factor * detail::raabeFactor(D, D);
                return;
            }
            for (Nat k = 0; k <= D && kSum + k <= target; ++k) {
                const Rational f = factor * detail::raabeFactor(D, k);
                if (!f.isZero()) rec(j - 1, kSum + k, f);
            }
        };
    rec(r, 0, Rational(1));
    return detail::zetaSign(idx) * total;
}

// Depth-2 closed form:
// (-1)^{m+n} zeta(-n,-m) = sum_{k=0}^{m+1} C(m+1,k) B_k/(m+1) B_{n+m+2-k}/(n+m+2-k).
inline Rational zetaDepth2(Nat n, Nat m) {
    Rational acc(0);
    for (Nat k = 0; k <= m + 1; ++k) {
        acc += binomial(m + 1, k) * bernoulliNumber(k) / Rational(static_cast<long>(m) + 1) *
               bernoulliNumber(n + m + 2 - k) / Rational(static_cast<long>(n + m + 2 - k));
    }
    const Rational sign = (n + m) % 2 == 0 ? Rational(1) : Rational(-1);
    return sign * acc;
}

enum class ZetaMethod { raabe, renorm, constantTerm, depth2 };

struct ZetaValue {
    MultiIndex index;
    Rational value;
    ZetaMethod method;
};

}  // namespace umbralsum
