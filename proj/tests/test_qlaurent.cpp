#include <random>

#include "doctest.h"
#include "qcrystal/qlaurent.hpp"

using namespace qcrystal;

namespace {

LaurentInt q(long e = 1) { return LaurentInt::q(e); }

LaurentInt random_laurent(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 5), expo(-6, 6), coeff(-9, 9);
    LaurentInt p;
    const int k = nterms(rng);
    for (int i = 0; i < k; ++i) p += LaurentInt::monomial(coeff(rng), expo(rng));
    return p;
}

RatFunc random_ratfunc(std::mt19937& rng, bool nonzero = false) {
    LaurentInt n = random_laurent(rng);
    LaurentInt d = random_laurent(rng);
    while (d.is_zero()) d = random_laurent(rng);
    if (nonzero)
        while (n.is_zero()) n = random_laurent(rng);
    return RatFunc(n, d);
}

} // namespace

TEST_CASE("q_int values") {
    CHECK(q_int(0, 1).is_zero());
    CHECK(q_int(2, 1) == q(1) + q(-1));
    // expand the defining quotient directly
    CHECK(q_int(4, 1) == exact_div(q(4) - q(-4), q(1) - q(-1)));
    CHECK(q_int(4, 1) == q(3) + q(1) + q(-1) + q(-3));
    CHECK(q_int(-3, 1) == -q_int(3, 1));
    CHECK(q_int(2, 3) == q(3) + q(-3));
}

TEST_CASE("q_binomial values") {
    CHECK(q_binomial(5, 0, 1) == LaurentInt(1));
    CHECK(q_binomial(2, 1, 1) == q_int(2, 1));
    // expand [4][3]/([2][1])
    CHECK(q_binomial(4, 2, 1) ==
          exact_div(q_int(4, 1) * q_int(3, 1), q_int(2, 1) * q_int(1, 1)));
    CHECK(q_binomial(4, 2, 1) == q(4) + q(2) + LaurentInt(2) + q(-2) + q(-4));
}

TEST_CASE("bar involution") {
    CHECK(LaurentInt::q(1).bar() == q(-1));
    CHECK(q_int(5, 1).bar() == q_int(5, 1));
    CHECK((q(2) + LaurentInt(3)).bar() == q(-2) + LaurentInt(3));
    std::mt19937 rng(7);
    for (int t = 0; t < 50; ++t) {
        LaurentInt p = random_laurent(rng);
        CHECK(p.bar().bar() == p);
        RatFunc r = random_ratfunc(rng);
        CHECK(r.bar().bar() == r);
    }
}

TEST_CASE("deg, lc, lt") {
    RatFunc zero;
    CHECK(!zero.deg().has_value());
    CHECK(zero.lc() == 0);
    CHECK(zero.lt() == std::pair<mpq_class, long>(0, 0));

    RatFunc p(q(3) + LaurentInt(1));
    CHECK(*p.deg() == 3);
    CHECK(p.lc() == 1);
    CHECK(p.lt() == std::pair<mpq_class, long>(1, 3));

    RatFunc r(q(2) + q(-2), q(1) + q(-1));
    CHECK(*r.deg() == 1);
    CHECK(r.lc() == 1);
    CHECK(r.lt() == std::pair<mpq_class, long>(1, 1));
}

TEST_CASE("ev_infinity") {
    CHECK(RatFunc(LaurentInt(1) + q(-1)).ev_infinity() == 1);
    CHECK(RatFunc(q(-2)).ev_infinity() == 0);
    // (q + q^{-1}) / (q (1 + q^{-2})) simplifies to 1
    RatFunc r(q(1) + q(-1), q(1) * (LaurentInt(1) + q(-2)));
    CHECK(r.ev_infinity() == 1);
    CHECK_THROWS_AS(RatFunc(q(1)).ev_infinity(), NotInLattice);
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(11);
    for (int t = 0; t < 100; ++t) {
        LaurentInt a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a + b).bar() == a.bar() + b.bar());
        CHECK((a * b).bar() == a.bar() * b.bar());
    }
}

TEST_CASE("field axioms for RatFunc") {
    std::mt19937 rng(13);
    for (int t = 0; t < 60; ++t) {
        RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng), c = random_ratfunc(rng);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a - a == RatFunc());
        RatFunc d = random_ratfunc(rng, true);
        CHECK(d * d.inv() == RatFunc(1));
        CHECK(a / d * d == a);
    }
}

TEST_CASE("Gaussian binomials are bar-invariant with nonnegative coefficients") {
    for (long m = 0; m <= 12; ++m)
        for (long k = 0; k <= m; ++k) {
            LaurentInt b = q_binomial(m, k, 1);
            CHECK(b.bar() == b);
            for (const auto& [e, c] : b.terms()) CHECK(c > 0);
        }
}

TEST_CASE("Pascal identity") {
    for (long m = 0; m <= 10; ++m)
        for (long k = 1; k <= m; ++k) {
            LaurentInt lhs = q_binomial(m + 1, k, 1);
            LaurentInt rhs =
                q_binomial(m, k, 1).shifted(k) + q_binomial(m, k - 1, 1).shifted(k - m - 1);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("lt multiplicativity") {
    std::mt19937 rng(17);
    for (int t = 0; t < 100; ++t) {
        RatFunc a = random_ratfunc(rng, true), b = random_ratfunc(rng, true);
        auto [lca, dega] = a.lt();
        auto [lcb, degb] = b.lt();
        auto [lcab, degab] = (a * b).lt();
        CHECK(lcab == lca * lcb);
        CHECK(degab == dega + degb);
    }
}

TEST_CASE("Sqrt2Scalar field axioms") {
    std::mt19937 rng(19);
    const Sqrt2Scalar s2 = Sqrt2Scalar::sqrt2();
    CHECK(s2 * s2 == Sqrt2Scalar(RatFunc(2)));
    for (int t = 0; t < 40; ++t) {
        Sqrt2Scalar a(random_ratfunc(rng), random_ratfunc(rng));
        Sqrt2Scalar b(random_ratfunc(rng), random_ratfunc(rng));
        Sqrt2Scalar c(random_ratfunc(rng), random_ratfunc(rng));
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK(a * a.inv() == Sqrt2Scalar(RatFunc(1)));
        CHECK(a.bar().bar() == a);
    }
    Sqrt2Scalar mix(RatFunc(q(1) + q(-1)), RatFunc(LaurentInt(1), q(2) + LaurentInt(1)));
    CHECK(*mix.deg() == 1);
    Sqrt2Scalar low(RatFunc(q(-1)), RatFunc(1));
    CHECK(low.ev_infinity() == Sqrt2Rat(0, 1));
}
