#include <catch2/catch_amalgamated.hpp>

#include "umbralsum/powersum.hpp"
#include "umbralsum/umbral.hpp"

using namespace umbralsum;

namespace {

const std::vector<std::string> kXBU{"x", "b", "u"};

UmbralPoly var(const std::vector<std::string>& vars, const std::string& name) {
    return UmbralPoly::variable(vars, name);
}

}  // namespace

TEST_CASE("bernoulli symbol reduction") {
    const std::vector<std::string> vars{"b", "N"};
    UmbralPoly p(vars);
    p.addTerm({1, 0}, Rational(1));
    CHECK(reduceBernoulliSymbol(p, "b") ==
          UmbralPoly::constant({"N"}, Rational(-1, 2)));

    UmbralPoly q(vars);
    q.addTerm({2, 0}, Rational(3));
    q.addTerm({0, 0}, Rational(1));
    CHECK(reduceBernoulliSymbol(q, "b") == UmbralPoly::constant({"N"}, Rational(3, 2)));

    UmbralPoly mixed(vars);
    mixed.addTerm({1, 1}, Rational(1));  // b*N
    UmbralPoly want(std::vector<std::string>{"N"});
    want.addTerm({1}, Rational(-1, 2));
    CHECK(reduceBernoulliSymbol(mixed, "b") == want);

    CHECK_THROWS_AS(reduceBernoulliSymbol(p, "nope"), std::invalid_argument);
}

TEST_CASE("uniform symbol reduction") {
    UmbralPoly u0 = UmbralPoly::constant({"u"}, Rational(1));
    CHECK(reduceUniformSymbol(u0, "u") == UmbralPoly::constant({}, Rational(1)));

    UmbralPoly u3(std::vector<std::string>{"u"});
    u3.addTerm({3}, Rational(1));
    CHECK(reduceUniformSymbol(u3, "u") == UmbralPoly::constant({}, Rational(1, 4)));

    // (x+u)^2 -> x^2 + x + 1/3 = int_0^1 (x+t)^2 dt
    const std::vector<std::string> xu{"x", "u"};
    const UmbralPoly p = (var(xu, "x") + var(xu, "u")).pow(2);
    UmbralPoly want(std::vector<std::string>{"x"});
    want.addTerm({2}, Rational(1));
    want.addTerm({1}, Rational(1));
    want.addTerm({0}, Rational(1, 3));
    CHECK(reduceUniformSymbol(p, "u") == want);
}

TEST_CASE("cancellation identity") {
    // (x + B + U)^n = x^n, reducing in either order
    for (unsigned n = 0; n <= 8; ++n) {
        const UmbralPoly p = (var(kXBU, "x") + var(kXBU, "b") + var(kXBU, "u")).pow(n);
        UmbralPoly want(std::vector<std::string>{"x"});
        want.addTerm({n}, Rational(1));
        CHECK(reduceUniformSymbol(reduceBernoulliSymbol(p, "b"), "u") == want);
        CHECK(reduceBernoulliSymbol(reduceUniformSymbol(p, "u"), "b") == want);
    }
}

TEST_CASE("independent bernoulli symbols commute") {
    const std::vector<std::string> vars{"b1", "b2", "x"};
    const UmbralPoly p = (var(vars, "b1") + var(vars, "b2") + var(vars, "x")).pow(6);
    const UmbralPoly ab = reduceBernoulliSymbol(reduceBernoulliSymbol(p, "b1"), "b2");
    const UmbralPoly ba = reduceBernoulliSymbol(reduceBernoulliSymbol(p, "b2"), "b1");
    CHECK(ab == ba);
}

TEST_CASE("vIntegrate") {
    // x^k with upper bound j: j^{k+1}/(k+1)
    const std::vector<std::string> xj{"x", "j"};
    for (unsigned k = 0; k <= 5; ++k) {
        UmbralPoly p(xj);
        p.addTerm({k, 0}, Rational(1));
        UmbralPoly want(std::vector<std::string>{"j"});
        want.addTerm({k + 1}, Rational(1, static_cast<long>(k) + 1));
        CHECK(vIntegrate(p, "x", UmbralPoly::variable({"j"}, "j")) == want);
    }

    // constant 1 integrates to the upper bound itself
    const UmbralPoly one = UmbralPoly::constant({"x", "z"}, Rational(1));
    CHECK(vIntegrate(one, "x", UmbralPoly::variable({"z"}, "z")) ==
          UmbralPoly::variable({"z"}, "z"));

    // x^2 with symbolic upper bound b+N: (b+N)^3/3
    const std::vector<std::string> xbn{"x", "b", "N"};
    UmbralPoly sq(xbn);
    sq.addTerm({2, 0, 0}, Rational(1));
    const UmbralPoly upper = var({"b", "N"}, "b") + var({"b", "N"}, "N");
    CHECK(vIntegrate(sq, "x", upper) == Rational(1, 3) * upper.pow(3));

    CHECK_THROWS_AS(vIntegrate(sq, "x", UmbralPoly::variable({"b"}, "b")),
                    std::invalid_argument);
}

TEST_CASE("umbral derivative") {
    const std::vector<std::string> bn{"b", "N"};
    UmbralPoly p(bn);
    p.addTerm({2, 1}, Rational(1));  // b^2 N
    UmbralPoly want(bn);
    want.addTerm({1, 1}, Rational(2));
    CHECK(umbralDerivative(p, "b") == want);
    CHECK(umbralDerivative(UmbralPoly::constant(bn, Rational(5)), "b").isZero());
}

TEST_CASE("reduceNestedProduct finite upper") {
    // depth 1, n=1: classical Faulhaber N(N-1)/2
    const auto v = reduceNestedProduct(MultiIndex{1}, ReductionBase{FiniteUpper{}});
    const Poly p = std::get<Poly>(v);
    CHECK(p.coeff(0) == Rational(0));
    CHECK(p.coeff(1) == Rational(-1, 2));
    CHECK(p.coeff(2) == Rational(1, 2));

    const auto at4 =
        reduceNestedProduct(MultiIndex{1, 1}, ReductionBase{FiniteUpper{Rational(4)}});
    CHECK(std::get<Rational>(at4) == Rational(11));

    // N = r lands in the empty-sum region
    CHECK(std::get<Rational>(
              reduceNestedProduct(MultiIndex{3, 2, 1}, ReductionBase{FiniteUpper{Rational(3)}})) ==
          Rational(0));
}

TEST_CASE("reduceNestedProduct zero exponents") {
    // composite zeroth powers still pass through the rule: H_0(N) = N - 1
    const Poly h0 = std::get<Poly>(reduceNestedProduct(MultiIndex{0}, ReductionBase{FiniteUpper{}}));
    CHECK(h0.coeff(0) == Rational(-1));
    CHECK(h0.coeff(1) == Rational(1));
    CHECK(h0.degree() == 1);

    // ... while the extended family keeps the displayed rules: value N
    CHECK(nestedPowerSumPoly(MultiIndex{0}, ZeroPowers::extended) == Poly::monomial(1));

    CHECK(std::get<Rational>(
              reduceNestedProduct(MultiIndex{0, 0}, ReductionBase{FiniteUpper{Rational(5)}})) ==
          Rational(6));
}

TEST_CASE("exponent accumulation is not multiplicative") {
    const Rational joint = std::get<Rational>(
        reduceNestedProduct(MultiIndex{1, 1}, ReductionBase{FiniteUpper{Rational(4)}}));
    const Rational separate = std::get<Rational>(reduceNestedProduct(
        MultiIndex{1}, ReductionBase{FiniteUpper{Rational(4)}}));
    CHECK(joint == Rational(11));
    CHECK(separate * separate == Rational(36));
    CHECK(joint != separate * separate);
}

TEST_CASE("reduceNestedProduct renormalized") {
    CHECK(std::get<Rational>(reduceNestedProduct(MultiIndex{1}, ReductionBase{Renormalized{}})) ==
          Rational(1, 12));
    CHECK(std::get<Rational>(reduceNestedProduct(MultiIndex{0}, ReductionBase{Renormalized{}})) ==
          Rational(-1, 2));
}

TEST_CASE("apostol base degenerates to finite at lambda=1") {
    for (const auto& idxVec :
         {std::vector<Nat>{1}, {2}, {1, 1}, {2, 1}, {0, 1}, {1, 0}, {2, 2, 1}}) {
        const MultiIndex idx(idxVec);
        for (Nat N = 1; N <= 7; ++N) {
            const Rational viaApostol = std::get<Rational>(
                reduceNestedProduct(idx, ReductionBase{Apostol{Rational(1), N}}));
            const Rational viaFinite = std::get<Rational>(
                reduceNestedProduct(idx, ReductionBase{FiniteUpper{Rational(static_cast<long>(N))}}));
            CHECK(viaApostol == viaFinite);
        }
    }
}

TEST_CASE("nested product rejects zero apostol lambda") {
    CHECK_THROWS_AS(reduceNestedProduct(MultiIndex{1}, ReductionBase{Apostol{Rational(0), 3}}),
                    std::invalid_argument);
}

TEST_CASE("variable set mismatches are errors") {
    UmbralPoly a(std::vector<std::string>{"x"});
    UmbralPoly b(std::vector<std::string>{"y"});
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
}
