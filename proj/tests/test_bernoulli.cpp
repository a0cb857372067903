#include <catch2/catch_amalgamated.hpp>

#include "umbralsum/bernoulli.hpp"

using namespace umbralsum;

namespace {

Rational bruteForcePowerSum(Nat n, Nat N) {
    Rational acc(0);
    for (Nat k = 1; k < N; ++k) acc += Rational(static_cast<long>(k)).pow(static_cast<long>(n));
    return acc;
}

bool isPrime(Nat p) {
    if (p < 2) return false;
    for (Nat d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulliNumber(0) == Rational(1));
    CHECK(bernoulliNumber(1) == Rational(-1, 2));
    CHECK(bernoulliNumber(2) == Rational(1, 6));
    CHECK(bernoulliNumber(4) == Rational(-1, 30));
    CHECK(bernoulliNumber(12) == Rational(-691, 2730));
    for (Nat k = 1; k <= 10; ++k) CHECK(bernoulliNumber(2 * k + 1).isZero());
}

TEST_CASE("von Staudt-Clausen denominators") {
    // B_{2k} + sum over primes p with (p-1) | 2k of 1/p is an integer
    for (Nat k = 1; k <= 8; ++k) {
        Rational sum = bernoulliNumber(2 * k);
        for (Nat p = 2; p <= 2 * k + 1; ++p) {
            if (isPrime(p) && (2 * k) % (p - 1) == 0) sum += Rational(1, static_cast<long>(p));
        }
        CHECK(sum.isInteger());
    }
}

TEST_CASE("bernoulli polynomials") {
    CHECK(bernoulliPoly(0) == Poly(Rational(1)));
    const Poly b2 = bernoulliPoly(2);
    CHECK(b2.coeff(0) == Rational(1, 6));
    CHECK(b2.coeff(1) == Rational(-1));
    CHECK(b2.coeff(2) == Rational(1));
    for (Nat n = 0; n <= 12; ++n) {
        CHECK(bernoulliPoly(n).eval(Rational(0)) == bernoulliNumber(n));
    }
}

TEST_CASE("faulhaber consistency") {
    for (Nat n = 1; n <= 8; ++n) {
        for (Nat N = 0; N <= 20; ++N) {
            CHECK(faulhaberPoly(n).eval(Rational(static_cast<long>(N))) == bruteForcePowerSum(n, N));
        }
    }
}

TEST_CASE("apostol-bernoulli polynomials") {
    // lambda = 1 degenerates to the classical polynomials
    for (Nat n = 0; n <= 6; ++n) {
        CHECK(apostolBernoulliPoly(n, ApostolParams{Rational(1)}) == bernoulliPoly(n));
    }
    CHECK(apostolBernoulliPoly(0, ApostolParams{Rational(2)}).isZero());
    CHECK(apostolBernoulliPoly(1, ApostolParams{Rational(2)}) == Poly(Rational(1)));
    // B_2(x|l) = 2x/(l-1) - 2l/(l-1)^2
    const Poly b2 = apostolBernoulliPoly(2, ApostolParams{Rational(1, 2)});
    CHECK(b2.coeff(1) == Rational(-4));
    CHECK(b2.coeff(0) == Rational(-4));
}

TEST_CASE("apostol faulhaber identity") {
    CHECK(apostolFaulhaber(1, Rational(2), 3) == Rational(10));
    CHECK(apostolFaulhaber(2, Rational(1), 5) == Rational(30));
    CHECK(apostolFaulhaber(4, Rational(-1), 1) == Rational(0));
    CHECK(apostolFaulhaber(0, Rational(3, 5), 1) == Rational(0));
    for (Nat n = 0; n <= 6; ++n) {
        for (Nat m = 1; m <= 12; ++m) {
            for (const Rational& lambda :
                 {Rational(1), Rational(2), Rational(1, 2), Rational(-1), Rational(3, 5)}) {
                Rational brute(0);
                for (Nat j = 1; j < m; ++j) {
                    brute += lambda.pow(static_cast<long>(j)) *
                             Rational(static_cast<long>(j)).pow(static_cast<long>(n));
                }
                CHECK(apostolFaulhaber(n, lambda, m) == brute);
            }
        }
    }
    CHECK_THROWS_AS(apostolFaulhaber(1, Rational(2), 0), std::invalid_argument);
}

TEST_CASE("hansen identity") {
    CHECK(hansenReduce(0, Rational(1)) == Rational(1));
    CHECK(hansenReduce(1, Rational(0)) == Rational(0));
    // (B_3(2) - B_3)/3 equals the N=2, n=2 power sum
    CHECK(hansenReduce(2, Rational(2)) == Rational(1));
    for (Nat p = 0; p <= 6; ++p) {
        for (const Rational& z : {Rational(0), Rational(1), Rational(-1), Rational(2), Rational(-2),
                                  Rational(1, 2), Rational(5, 3)}) {
            CHECK(hansenReduce(p, z) == faulhaberPoly(p).eval(z));
        }
    }
}
