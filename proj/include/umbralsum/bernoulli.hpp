#pragma once

#include <mutex>
#include <stdexcept>
#include <vector>

#include "umbralsum/combinatorics.hpp"
#include "umbralsum/poly.hpp"
#include "umbralsum/rational.hpp"

namespace umbralsum {

// B_n by the defining recurrence sum_{k=0}^{n} C(n+1,k) B_k = 0, B_0 = 1.
// The cache grows monotonically under a lock; entries never change once
// computed, so returned copies are stable.
inline Rational bernoulliNumber(Nat n) {
    static std::vector<Rational> cache{Rational(1)};
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    while (cache.size() <= n) {
        const Nat m = cache.size();
        Rational acc(0);
        for (Nat k = 0; k < m; ++k) acc += binomial(m + 1, k) * cache[k];
        cache.push_back(-acc / Rational(static_cast<long>(m + 1)));
    }
    return cache[n];
}

// B_n(x) = sum_k C(n,k) B_{n-k} x^k
inline Poly bernoulliPoly(Nat n) {
    std::vector<Rational> c(n + 1);
    for (Nat k = 0; k <= n; ++k) c[k] = binomial(n, k) * bernoulliNumber(n - k);
    return Poly(std::move(c));
}

// (B_{p+1}(x) - B_{p+1})/(p+1), built without the constant term so the
// cancellation is structural. Equals sum_{k=0}^{x-1} k^p at integers x >= 1
// (with the k=0 term counting 1 when p = 0).
inline Poly faulhaberPoly(Nat p) {
    std::vector<Rational> c(p + 2, Rational(0));
    const Rational inv(1, static_cast<long>(p) + 1);
    for (Nat k = 1; k <= p + 1; ++k) {
        c[k] = binomial(p + 1, k) * bernoulliNumber(p + 1 - k) * inv;
    }
    return Poly(std::move(c));
}

struct ApostolParams {
    Rational lambda;
};

namespace detail {

// For lambda != 1: B_0(x|l) = 0 and degree-by-degree
// (l-1) B_n(x|l) = n x^{n-1} - l * sum_{k<n} C(n,k) B_k(x|l).
inline std::vector<Poly> apostolFamily(Nat nmax, const Rational& lambda) {
    std::vector<Poly> fam;
    fam.reserve(nmax + 1);
    if (lambda == Rational(1)) {
        for (Nat n = 0; n <= nmax; ++n) fam.push_back(bernoulliPoly(n));
        return fam;
    }
    const Rational invLm1 = Rational(1) / (lambda - Rational(1));
    fam.push_back(Poly());
    for (Nat n = 1; n <= nmax; ++n) {
        Poly rhs = Poly::monomial(n - 1, Rational(static_cast<long>(n)));
        Poly acc;
        for (Nat k = 0; k < n; ++k) acc += binomial(n, k) * fam[k];
        rhs -= lambda * acc;
        fam.push_back(invLm1 * rhs);
    }
    return fam;
}

}  // namespace detail

inline Poly apostolBernoulliPoly(Nat n, const ApostolParams& params) {
    return detail::apostolFamily(n, params.lambda)[n];
}

// sum_{j=1}^{m-1} lambda^j j^n via the closed form
// (lambda^m B_{n+1}(m|lambda) - B_{n+1}(0|lambda))/(n+1).
// At n = 0 the closed form counts the j=0 term (0^0 = 1), hence the -1.
inline Rational apostolFaulhaber(Nat n, const Rational& lambda, Nat m) {
    if (m == 0) throw std::invalid_argument("apostolFaulhaber: m must be >= 1");
    const Poly b = apostolBernoulliPoly(n + 1, ApostolParams{lambda});
    const Rational lm = lambda.pow(static_cast<long>(m));
    Rational value = (lm * b.eval(Rational(static_cast<long>(m))) - b.eval(Rational(0))) /
                     Rational(static_cast<long>(n) + 1);
    if (n == 0) value -= Rational(1);
    return value;
}

// Pochhammer convention for the (-z)_{l+1} factor below, frozen empirically:
// rising satisfies the identity at (p,z) = (1,1) and (2,2); falling does not.
inline constexpr Pochhammer kHansenConvention = Pochhammer::rising;

// sum_{l=0}^{p} S(p,l) l! (-1)^{l+1}/(l+1)! (-z)_{l+1}
// contract: equals (B_{p+1}(z) - B_{p+1})/(p+1).
inline Rational hansenReduce(Nat p, const Rational& z) {
    Rational acc(0);
    for (Nat l = 0; l <= p; ++l) {
        const Rational sign = (l % 2 == 0) ? Rational(-1) : Rational(1);  // (-1)^{l+1}
        acc += stirling2(p, l) * factorial(l) * sign / factorial(l + 1) *
               pochhammer(-z, l + 1, kHansenConvention);
    }
    return acc;
}

}  // namespace umbralsum
