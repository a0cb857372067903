#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "umbralsum/combinatorics.hpp"
#include "umbralsum/poly.hpp"
#include "umbralsum/rational.hpp"

using namespace umbralsum;

namespace {

Rational randomRational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-1000, 1000);
    std::uniform_int_distribution<long> den(1, 60);
    return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4).toString() == "1/2");
    CHECK(Rational(-2, 4).toString() == "-1/2");
    CHECK(Rational(2, -4).toString() == "-1/2");
    CHECK(Rational(0, 7).toString() == "0/1");
    CHECK(Rational(5).toString() == "5/1");
    CHECK(Rational(6, 3) == Rational(2));
    CHECK(Rational(6, 3).denominator() == 1);
}

TEST_CASE("rational string round trip") {
    for (const char* s : {"3/7", "-3/7", "0/1", "155117520/1", "-691/2730"}) {
        CHECK(Rational::fromString(s).toString() == s);
    }
    CHECK(Rational::fromString("4/6") == Rational(2, 3));
    CHECK(Rational::fromString("12") == Rational(12));
    CHECK_THROWS_AS(Rational::fromString("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::fromString("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational field axioms on random triples") {
    std::mt19937 rng(20240517);
    for (int i = 0; i < 300; ++i) {
        const Rational a = randomRational(rng);
        const Rational b = randomRational(rng);
        const Rational c = randomRational(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.isZero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("binomial examples") {
    CHECK(binomial(5, 2) == Rational(10));
    CHECK(binomial(4, 7) == Rational(0));
    CHECK(binomial(30, 15) == Rational::fromString("155117520"));
    CHECK(binomial(0, 0) == Rational(1));
}

TEST_CASE("binomial against Pascal recurrence") {
    // independent oracle: Pascal triangle built with plain additions
    std::vector<std::vector<Rational>> pascal{{Rational(1)}};
    for (Nat n = 1; n <= 30; ++n) {
        std::vector<Rational> row(n + 1, Rational(1));
        for (Nat k = 1; k < n; ++k) row[k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
        pascal.push_back(row);
    }
    for (Nat n = 0; n <= 30; ++n) {
        Rational sum(0);
        for (Nat k = 0; k <= n; ++k) {
            CHECK(binomial(n, k) == pascal[n][k]);
            sum += binomial(n, k);
        }
        CHECK(sum == Rational(2).pow(static_cast<long>(n)));
    }
}

TEST_CASE("stirling2 values") {
    CHECK(stirling2(0, 0) == Rational(1));
    CHECK(stirling2(4, 2) == Rational(7));
    CHECK(stirling2(3, 5) == Rational(0));
    CHECK(stirling2(5, 2) == Rational(15));
    CHECK(stirling2(6, 3) == Rational(90));
}

TEST_CASE("stirling2 falling-factorial basis change") {
    // x^p = sum_l S(p,l) x(x-1)...(x-l+1)
    for (Nat p = 0; p <= 6; ++p) {
        for (long x = 0; x <= 6; ++x) {
            Rational rhs(0);
            for (Nat l = 0; l <= p; ++l) {
                rhs += stirling2(p, l) * pochhammer(Rational(x), l, Pochhammer::falling);
            }
            CHECK(rhs == Rational(x).pow(static_cast<long>(p)));
        }
    }
}

TEST_CASE("pochhammer conventions") {
    CHECK(pochhammer(Rational(17, 3), 0, Pochhammer::rising) == Rational(1));
    CHECK(pochhammer(Rational(17, 3), 0, Pochhammer::falling) == Rational(1));
    CHECK(pochhammer(Rational(3), 3, Pochhammer::rising) == Rational(60));
    CHECK(pochhammer(Rational(3), 3, Pochhammer::falling) == Rational(6));
}

TEST_CASE("poly arithmetic and evaluation") {
    const Poly p(std::vector<Rational>{Rational(0), Rational(-1, 2), Rational(1, 2)});
    CHECK(p.eval(Rational(4)) == Rational(6));
    CHECK(p.degree() == 2);
    CHECK(p.coeff(5) == Rational(0));

    const Poly q = Poly::monomial(1) * Poly::monomial(1) - Poly::monomial(1);
    CHECK(Rational(1, 2) * q == p);

    // (x+1)^2 via argument shift
    const Poly sq = Poly::monomial(2).shiftArg(Rational(1));
    CHECK(sq.eval(Rational(2)) == Rational(9));
    CHECK(sq.coeff(0) == Rational(1));
    CHECK(sq.coeff(1) == Rational(2));

    CHECK(Poly().isZero());
    CHECK((p - p).isZero());
    CHECK(p.derivative().eval(Rational(1)) == Rational(1, 2));
}
