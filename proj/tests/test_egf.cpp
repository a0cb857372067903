#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "umbralsum/egf.hpp"

using namespace umbralsum;

namespace {

// dense univariate-in-one-variable convolution oracle for EGF products:
// (A*B)[t] = sum_{a+b=t_i} C(t_i,a) A[a] B[t with i<-b]
EgfTable denseMulOracle(const EgfTable& table, const std::vector<Rational>& uni, Nat varIndex) {
    EgfTable out(table.arity(), table.bound());
    out.forEachTuple([&](const EgfTable::Tuple& t) {
        Rational acc(0);
        EgfTable::Tuple src = t;
        for (Nat a = 0; a < uni.size() && a <= t[varIndex]; ++a) {
            src[varIndex] = t[varIndex] - a;
            acc += binomial(t[varIndex], a) * uni[a] * table.coeff(src);
        }
        out.set(t, acc);
    });
    return out;
}

}  // namespace

TEST_CASE("buildF depth 1") {
    // strict power sums at positive exponents, extended value N at degree 0
    const EgfTable f = buildF(1, Rational(3), 2);
    CHECK(f.coeff({0}) == Rational(3));
    CHECK(f.coeff({1}) == Rational(3));
    CHECK(f.coeff({2}) == Rational(5));
}

TEST_CASE("buildF closed form F_1 = (e^{Nw}-1)/(e^w-1)") {
    // coefficient at degree n is sum_{k=0}^{N-1} k^n with 0^0 = 1
    for (Nat N = 1; N <= 8; ++N) {
        const EgfTable f = buildF(1, Rational(static_cast<long>(N)), 8);
        for (Nat n = 0; n <= 8; ++n) {
            Rational want(0);
            for (Nat k = 0; k < N; ++k) {
                want += k == 0 ? (n == 0 ? Rational(1) : Rational(0))
                               : Rational(static_cast<long>(k)).pow(static_cast<long>(n));
            }
            CHECK(f.coeff({n}) == want);
        }
    }
}

TEST_CASE("buildF empty region r=2 N=2") {
    // only the chain 2 > 1 > 0 survives, so coefficients live on (a, 0)
    const EgfTable f = buildF(2, Rational(2), 4);
    CHECK(f.coeff({1, 1}) == Rational(0));
    CHECK(f.coeff({2, 0}) == Rational(1));
    CHECK(f.coeff({0, 0}) == Rational(1));
}

TEST_CASE("buildF matches the oracle at positive tuples") {
    const EgfTable f = buildF(2, Rational(4), 4);
    CHECK(f.coeff({1, 1}) == Rational(11));
    CHECK(f.coeff({2, 1}) == Rational(31));
}

TEST_CASE("shiftLastVariable") {
    // e^w: all coefficients 1 -> all coefficients 1 at every (a,b)
    EgfTable expw(1, 4);
    for (Nat d = 0; d <= 4; ++d) expw.set({d}, Rational(1));
    const EgfTable shifted = shiftLastVariable(expw);
    shifted.forEachTuple([&](const EgfTable::Tuple& t) { CHECK(shifted.coeff(t) == Rational(1)); });

    // w -> w1 + w2
    EgfTable w(1, 3);
    w.set({1}, Rational(1));
    const EgfTable sw = shiftLastVariable(w);
    CHECK(sw.coeff({1, 0}) == Rational(1));
    CHECK(sw.coeff({0, 1}) == Rational(1));
    CHECK(sw.coeff({1, 1}) == Rational(0));

    // w^2/2!: EGF coefficient 1 at degree 2 -> 1 at (2,0),(1,1),(0,2)
    EgfTable w2(1, 3);
    w2.set({2}, Rational(1));
    const EgfTable sw2 = shiftLastVariable(w2);
    CHECK(sw2.coeff({2, 0}) == Rational(1));
    CHECK(sw2.coeff({1, 1}) == Rational(1));
    CHECK(sw2.coeff({0, 2}) == Rational(1));
}

TEST_CASE("mulExpMinusOne") {
    // constant 1 times (e^w - 1): coefficient 1 at every degree >= 1
    EgfTable one(1, 5);
    one.set({0}, Rational(1));
    const EgfTable e = mulExpMinusOne(one, 0);
    CHECK(e.coeff({0}) == Rational(0));
    for (Nat d = 1; d <= 5; ++d) CHECK(e.coeff({d}) == Rational(1));

    // w(e^w - 1): EGF coefficient d at degree d >= 2
    EgfTable w(1, 6);
    w.set({1}, Rational(1));
    const EgfTable we = mulExpMinusOne(w, 0);
    CHECK(we.coeff({1}) == Rational(0));
    for (Nat d = 2; d <= 6; ++d) CHECK(we.coeff({d}) == Rational(static_cast<long>(d)));

    CHECK_THROWS_AS(mulExpMinusOne(w, 3), std::invalid_argument);
}

TEST_CASE("mulExpMinusOne against dense convolution oracle") {
    std::mt19937 rng(555);
    std::uniform_int_distribution<long> c(-6, 6);
    for (int trial = 0; trial < 10; ++trial) {
        EgfTable t(2, 4);
        t.forEachTuple([&](const EgfTable::Tuple& tu) { t.set(tu, Rational(c(rng), 1)); });
        // e^w - 1 as a univariate coefficient list
        std::vector<Rational> uni(5, Rational(1));
        uni[0] = Rational(0);
        for (Nat v = 0; v < 2; ++v) {
            CHECK(mulExpMinusOne(t, v) == denseMulOracle(t, uni, v));
        }
    }
}

TEST_CASE("buildG values") {
    const EgfTable g = buildG(1, Rational(2), 4);
    CHECK(g.coeff({2}) == Rational(2));  // beta_2(2) = B_2(2) - B_2
    const EgfTable g2 = buildG(2, Rational(5, 7), 4);
    CHECK(g2.coeff({0, 2}) == Rational(0));
    CHECK(g2.coeff({3, 0}) == Rational(0));
    CHECK(g2.coeff({1, 1}) ==
          betaSymbolic(MultiIndex{1, 1}).poly.eval(Rational(5, 7)));
}

TEST_CASE("G_1 closed form w(e^{zw}-1)/(e^w-1)") {
    // cleared form: (e^w - 1) G_1 = w (e^{zw} - 1)
    for (const Rational& z : {Rational(0), Rational(3), Rational(1, 2), Rational(-1)}) {
        const EgfTable g1 = buildG(1, z, 6);
        const EgfTable lhs = mulExpMinusOne(g1, 0);
        EgfTable rhs(1, 6);
        for (Nat n = 2; n <= 6; ++n) {
            rhs.set({n}, Rational(static_cast<long>(n)) * z.pow(static_cast<long>(n) - 1));
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("F recurrence") {
    CHECK(verifyFRecurrence(2, Rational(4), 5).pass);
    CHECK(verifyFRecurrence(3, Rational(5), 5).pass);
    CHECK(verifyFRecurrence(2, Rational(2), 4).pass);
    CHECK_THROWS_AS(verifyFRecurrence(1, Rational(4), 5), std::invalid_argument);
}

TEST_CASE("G recurrence") {
    CHECK(verifyGRecurrence(2, Rational(3), 5).pass);
    CHECK(verifyGRecurrence(2, Rational(0), 4).pass);
    CHECK(verifyGRecurrence(3, Rational(2), 4).pass);
}
