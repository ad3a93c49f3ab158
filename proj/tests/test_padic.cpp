#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace ultraspec;
namespace tt = ultraspec::testing;

TEST_CASE("valuation of rationals") {
    CHECK(valuation(PadicScalar(75, 5)) == 2);
    CHECK(valuation(PadicScalar(make_rational(7, 8), 2)) == -3);
    CHECK(valuation(PadicScalar::zero(7)) == std::nullopt);
    CHECK(valuation(PadicScalar(make_rational(9, 2), 3)) == 2);
}

TEST_CASE("absolute value") {
    CHECK(abs(PadicScalar(75, 5)) == PMagnitude::finite(-2));
    CHECK(abs(PadicScalar(make_rational(1, 12), 2)) == PMagnitude::finite(2));
    CHECK(abs(PadicScalar(make_rational(9, 2), 3)) == PMagnitude::finite(-2));
    CHECK(abs(PadicScalar::zero(3)) == PMagnitude::zero());
}

TEST_CASE("magnitude ordering") {
    CHECK(PMagnitude::zero() < PMagnitude::finite(-100));
    CHECK(PMagnitude::finite(100) < PMagnitude::infinite());
    CHECK(PMagnitude::finite(-1) < PMagnitude::finite(0));
    CHECK(PMagnitude::finite(3) == PMagnitude::finite(3));
}

TEST_CASE("comparison against 1/eps") {
    CHECK(compare_vs_inverse_epsilon(PMagnitude::finite(2), Epsilon(make_rational(1, 25)), 5) ==
          std::strong_ordering::equal);
    CHECK(compare_vs_inverse_epsilon(PMagnitude::infinite(), Epsilon(make_rational(1, 1000)), 5) ==
          std::strong_ordering::greater);
    CHECK(compare_vs_inverse_epsilon(PMagnitude::zero(), Epsilon(Rational(1)), 5) == std::strong_ordering::less);
    CHECK(compare_vs_inverse_epsilon(PMagnitude::finite(3), Epsilon(make_rational(1, 25)), 5) ==
          std::strong_ordering::greater);
    CHECK(compare_vs_inverse_epsilon(PMagnitude::finite(-4), Epsilon(Rational(2)), 3) ==
          std::strong_ordering::less);
}

TEST_CASE("comparison agrees with the naive big-rational oracle") {
    SplitMix64 rng(2024);
    for (int i = 0; i < 1500; ++i) {
        const long long p = (i % 2) ? 3 : 7;
        const long long e = rng.next_in(-30, 30);
        Rational eps = tt::rand_rational(rng, p);
        if (eps == 0) continue;
        if (eps < 0) eps = -eps;
        const Epsilon epsilon(eps);
        const Rational lhs = PMagnitude::finite(e).to_rational(p);
        const Rational rhs = 1 / eps;
        const auto expected = lhs == rhs   ? std::strong_ordering::equal
                              : lhs < rhs ? std::strong_ordering::less
                                          : std::strong_ordering::greater;
        CHECK(compare_vs_inverse_epsilon(PMagnitude::finite(e), epsilon, p) == expected);
    }
}

TEST_CASE("field operations") {
    const PadicScalar half(make_rational(1, 2), 3);
    CHECK((half + half).value() == 1);
    CHECK((PadicScalar(3, 3) * PadicScalar(make_rational(1, 3), 3)).value() == 1);
    CHECK_THROWS_AS(PadicScalar::zero(3).invert(), DivisionByZero);
    CHECK_THROWS_AS(PadicScalar(1, 3) / PadicScalar::zero(3), DivisionByZero);
    CHECK_THROWS_AS(PadicScalar(1, 3) + PadicScalar(1, 5), PrimeMismatch);
    CHECK((-PadicScalar(7, 5)).value() == -7);
    CHECK(PadicScalar(10, 7).invert().value() == make_rational(1, 10));
}

TEST_CASE("prime validation") {
    CHECK_THROWS_AS(PadicScalar(1, 4), Error);
    CHECK_THROWS_AS(PadicScalar(1, 1), Error);
    CHECK_NOTHROW(PadicScalar(1, 2));
    CHECK_NOTHROW(PadicScalar(1, 1000003));
    CHECK_THROWS_AS(PadicScalar(1, 1000001), Error);  // 101 * 9901
}

TEST_CASE("epsilon must be positive") {
    CHECK_THROWS_AS(Epsilon(Rational(0)), Error);
    CHECK_THROWS_AS(Epsilon(Rational(-3)), Error);
    CHECK(Epsilon::parse("7/2").value() == make_rational(7, 2));
}

TEST_CASE("rational literal parsing") {
    CHECK(parse_rational("3/2") == make_rational(3, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(parse_rational("+4/6") == make_rational(2, 3));
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rational("a/b"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("ultrametric inequality with equality off ties") {
    SplitMix64 rng(99);
    int equality_cases = 0;
    for (int i = 0; i < 2000; ++i) {
        const long long p = (i % 3 == 0) ? 2 : (i % 3 == 1) ? 3 : 5;
        const PadicScalar x = tt::rand_scalar(rng, p);
        const PadicScalar y = tt::rand_scalar(rng, p);
        const PMagnitude ax = abs(x), ay = abs(y);
        const PMagnitude sum = abs(x + y);
        CHECK(sum <= std::max(ax, ay));
        if (ax != ay) {
            CHECK(sum == std::max(ax, ay));
            ++equality_cases;
        }
    }
    CHECK(equality_cases > 200);  // the strict case fired often enough to mean something
}

TEST_CASE("multiplicativity of the absolute value") {
    SplitMix64 rng(7);
    for (int i = 0; i < 1500; ++i) {
        const long long p = (i % 2) ? 5 : 3;
        const PadicScalar x = tt::rand_scalar(rng, p);
        const PadicScalar y = tt::rand_scalar(rng, p);
        CHECK(abs(x * y) == abs(x) * abs(y));
        if (!x.is_zero()) {
            CHECK(abs(x.invert()) == PMagnitude::finite(-abs(x).exponent()));
        }
    }
}

TEST_CASE("canonical form is closed under field operations") {
    SplitMix64 rng(13);
    for (int i = 0; i < 1500; ++i) {
        const PadicScalar x = tt::rand_scalar(rng, 3);
        const PadicScalar y = tt::rand_scalar(rng, 3);
        for (const PadicScalar& z : {x + y, x - y, x * y, -x}) {
            CHECK(z.denominator() > 0);
            CHECK(gcd(abs(z.numerator()), z.denominator()) == 1);
        }
        if (!y.is_zero()) {
            const PadicScalar q = x / y;
            CHECK(q.denominator() > 0);
            CHECK(gcd(abs(q.numerator()), q.denominator()) == 1);
        }
    }
}

TEST_CASE("p powers") {
    CHECK(PadicScalar::p_power(3, 2).value() == Rational(8));
    CHECK(PadicScalar::p_power(-2, 5).value() == make_rational(1, 25));
    CHECK(abs(PadicScalar::p_power(4, 3)) == PMagnitude::finite(-4));
}
