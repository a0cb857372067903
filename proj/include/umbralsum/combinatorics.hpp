#pragma once

#include <stdexcept>
#include <vector>

#include "umbralsum/rational.hpp"

namespace umbralsum {

// C(n,k), exact; 0 when k > n so edge terms of summation formulas vanish
// without special-casing.
inline Rational binomial(Nat n, Nat k) {
    if (k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

inline Rational factorial(Nat n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

// Stirling numbers of the second kind via S(p,l) = l*S(p-1,l) + S(p-1,l-1).
inline Rational stirling2(Nat p, Nat l) {
    if (l > p) return Rational(0);
    // row-by-row table; sizes here are tiny (p <= ~20 in every sweep)
    std::vector<mpz_class> row(p + 1, 0);
    row[0] = 1;
    for (Nat i = 1; i <= p; ++i) {
        for (Nat j = std::min(i, p); j >= 1; --j) {
            row[j] = mpz_class(j) * row[j] + row[j - 1];
        }
        row[0] = 0;
    }
    return Rational(row[l]);
}

enum class Pochhammer { rising, falling };

// rising: x(x+1)...(x+l-1); falling: x(x-1)...(x-l+1); empty product is 1.
inline Rational pochhammer(const Rational& x, Nat l, Pochhammer convention) {
    Rational result(1);
    Rational term = x;
    const Rational step = convention == Pochhammer::rising ? Rational(1) : Rational(-1);
    for (Nat i = 0; i < l; ++i) {
        result *= term;
        term += step;
    }
    return result;
}

}  // namespace umbralsum
