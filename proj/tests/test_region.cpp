#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace ultraspec;
namespace tt = ultraspec::testing;

namespace {

std::vector<std::tuple<Rational, long long, LeafClass>> leaf_list(const RegionTree& tree) {
    std::vector<std::tuple<Rational, long long, LeafClass>> out;
    visit_leaves(tree.root, [&](const RegionNode& n) {
        out.emplace_back(n.ball.center.value(), n.ball.radius_exponent, n.leaf_class);
    });
    return out;
}

// Random rational point inside a closed ball: center + p^r * (a/b), p !| b.
PadicScalar random_point_in(const Ball& ball, SplitMix64& rng) {
    const long long p = ball.center.prime();
    long long b = rng.next_in(1, 50);
    while (b % p == 0) ++b;
    const Rational offset = make_rational(rng.next_in(-200, 200), b);
    return PadicScalar(ball.center.value() + PMagnitude::finite(ball.radius_exponent).to_rational(p) * offset, p);
}

}  // namespace

TEST_CASE("balls contain and subdivide") {
    const Ball ball{PadicScalar(3, 2), 2};
    CHECK(ball_contains(ball, PadicScalar(3, 2)));
    CHECK(ball_contains(ball, PadicScalar(7, 2)));    // |7-3| = 2^-2
    CHECK(ball_contains(ball, PadicScalar(19, 2)));   // |16| = 2^-4
    CHECK(!ball_contains(ball, PadicScalar(5, 2)));   // |2| = 2^-1
    const auto children = subdivide(ball);
    REQUIRE(children.size() == 2);
    CHECK(children[0].center.value() == 3);
    CHECK(children[1].center.value() == 7);
    CHECK(children[0].radius_exponent == 3);
    // every point of the parent is in exactly one child
    SplitMix64 rng(5);
    for (int i = 0; i < 300; ++i) {
        const PadicScalar x = random_point_in(ball, rng);
        int hits = 0;
        for (const auto& c : children) hits += ball_contains(c, x);
        CHECK(hits == 1);
    }
}

TEST_CASE("ultrametric dichotomy: balls nest or are disjoint") {
    SplitMix64 rng(17);
    for (int i = 0; i < 400; ++i) {
        const long long p = (i % 2) ? 3 : 2;
        const Ball b1{tt::rand_scalar(rng, p), rng.next_in(-2, 4)};
        const Ball b2{tt::rand_scalar(rng, p), rng.next_in(-2, 4)};
        const bool meet = ball_contains(b1, b2.center) || ball_contains(b2, b1.center);
        // sample points of the smaller ball and check containment in the larger
        const Ball& small = b1.radius_exponent >= b2.radius_exponent ? b1 : b2;
        const Ball& large = b1.radius_exponent >= b2.radius_exponent ? b2 : b1;
        bool any_common = false, all_inside = true;
        for (int k = 0; k < 40; ++k) {
            const PadicScalar x = random_point_in(small, rng);
            const bool inside = ball_contains(large, x);
            any_common = any_common || inside;
            all_inside = all_inside && inside;
        }
        if (meet)
            CHECK(all_inside);  // nested
        else
            CHECK(!any_common);  // disjoint
    }
}

TEST_CASE("constancy certificates") {
    const RationalPoly f({Rational(-1), Rational(1)}, 2);  // x - 1
    const auto c1 = constancy_certificate(f, Ball{PadicScalar(3, 2), 2});
    REQUIRE(c1.has_value());
    CHECK(*c1 == PMagnitude::finite(-1));  // |2| = 1/2

    CHECK(!constancy_certificate(f, Ball{PadicScalar::one(2), 5}).has_value());  // root at the center

    const RationalPoly g({Rational(0), Rational(-3), Rational(2)}, 3);  // 2x^2 - 3x
    const auto c2 = constancy_certificate(g, Ball{PadicScalar::one(3), 1});
    REQUIRE(c2.has_value());
    CHECK(*c2 == PMagnitude::finite(0));

    CHECK(constancy_certificate(RationalPoly::zero(5), Ball{PadicScalar::zero(5), 0}) == PMagnitude::zero());

    // boundary tie: f = x on the unit ball has |f| <= 1 with a dip at 0, not constant
    CHECK(!constancy_certificate(RationalPoly({Rational(0), Rational(1)}, 3), Ball{PadicScalar::zero(3), 0})
               .has_value());
}

TEST_CASE("ball classification on the pencil fixture") {
    const Family f = tt::fixture_family("example-final-iii");
    const Epsilon eps(make_rational(1, 4));
    CHECK(classify_ball(f, Ball{PadicScalar(5, 2), 3}, eps) == BallClass::Member);
    CHECK(classify_ball(f, Ball{PadicScalar::zero(2), 1}, eps) == BallClass::NonMember);
    CHECK(classify_ball(f, Ball{PadicScalar::one(2), 4}, eps) == BallClass::ContainsSpectrumPoint);
    CHECK(classify_ball(f, Ball{PadicScalar::one(2), 0}, eps) == BallClass::ContainsSpectrumPoint);
}

TEST_CASE("explored tree matches the closed-form region") {
    const Family f = tt::fixture_family("example-final-iii");
    const Epsilon eps(make_rational(1, 4));  // region: |lambda - 1| < eps * |2|^-1 = 1/2
    const RegionTree tree = explore(f, Ball{PadicScalar::one(2), 1}, eps, 6);
    const auto leaves = leaf_list(tree);
    const std::vector<std::tuple<Rational, long long, LeafClass>> expected = {
        {Rational(3), 2, LeafClass::NonMember}, {Rational(5), 3, LeafClass::Member},
        {Rational(9), 4, LeafClass::Member},    {Rational(17), 5, LeafClass::Member},
        {Rational(33), 6, LeafClass::Member},   {Rational(1), 7, LeafClass::ContainsSpectrumPoint},
        {Rational(65), 7, LeafClass::Member},
    };
    auto sorted = leaves;
    auto key = [](const auto& t) { return std::make_pair(std::get<1>(t), std::get<0>(t)); };
    std::sort(sorted.begin(), sorted.end(), [&](const auto& x, const auto& y) { return key(x) < key(y); });
    auto expected_sorted = expected;
    std::sort(expected_sorted.begin(), expected_sorted.end(),
              [&](const auto& x, const auto& y) { return key(x) < key(y); });
    CHECK(sorted == expected_sorted);
}

TEST_CASE("tiny epsilon leaves only the eigenvalue chain uncertified") {
    const Family f = tt::fixture_family("example-final-iii");
    const Epsilon eps(make_rational(1, 256));  // region shrinks below the explored depth
    const RegionTree tree = explore(f, Ball{PadicScalar::one(2), 1}, eps, 6);
    for (const auto& [center, r, cls] : leaf_list(tree)) {
        if (center == 1 && r == 7)
            CHECK(cls == LeafClass::ContainsSpectrumPoint);
        else
            CHECK(cls == LeafClass::NonMember);
    }
}

TEST_CASE("depth zero on a mixed ball gives one unresolved leaf") {
    // no rational eigenvalues inside: companion of x^2 - 2 over Q_7
    std::vector<std::vector<Rational>> rows{{Rational(0), Rational(2)}, {Rational(1), Rational(0)}};
    const Family f = Family::pseudo(RationalMatrix::from_rows(rows, 7));
    const RegionTree tree = explore(f, Ball{PadicScalar::zero(7), 0}, Epsilon(make_rational(1, 7)), 0);
    const auto leaves = leaf_list(tree);
    REQUIRE(leaves.size() == 1);
    CHECK(std::get<2>(leaves[0]) == LeafClass::Unresolved);
}

TEST_CASE("leaf soundness against the pointwise oracle") {
    const Family f = tt::fixture_family("example-final-iii");
    const Epsilon eps(make_rational(1, 4));
    const RegionTree tree = explore(f, Ball{PadicScalar::one(2), 1}, eps, 6);
    SplitMix64 rng(808);
    visit_leaves(tree.root, [&](const RegionNode& node) {
        for (int i = 0; i < 100; ++i) {
            const PadicScalar x = random_point_in(node.ball, rng);
            const MembershipClass cls = member(f, x, eps).cls;
            switch (node.leaf_class) {
                case LeafClass::Member:
                    CHECK(cls == MembershipClass::InPseudoRegion);
                    break;
                case LeafClass::NonMember:
                    CHECK(cls == MembershipClass::Outside);
                    break;
                case LeafClass::ContainsSpectrumPoint:
                    CHECK(cls != MembershipClass::Outside);  // punctured neighborhood of the eigenvalue
                    break;
                case LeafClass::Unresolved:
                    break;
            }
        }
    });
}

TEST_CASE("leaves partition the root measure") {
    const Family f = tt::fixture_family("example-final-iii");
    for (long long depth : {0ll, 2ll, 4ll, 6ll}) {
        const RegionTree tree = explore(f, Ball{PadicScalar::one(2), 1}, Epsilon(make_rational(1, 4)), depth);
        Rational measure(0);
        visit_leaves(tree.root, [&](const RegionNode& n) {
            measure += PMagnitude::finite(1 - n.ball.radius_exponent).to_rational(2);
        });
        CHECK(measure == 1);
    }
}

TEST_CASE("deeper exploration never flips certified leaves") {
    const Family f = tt::fixture_family("example-final-iii");
    const Epsilon eps(make_rational(1, 4));
    const RegionTree shallow = explore(f, Ball{PadicScalar::one(2), 1}, eps, 4);
    const RegionTree deep = explore(f, Ball{PadicScalar::one(2), 1}, eps, 6);
    const auto deep_leaves = leaf_list(deep);
    visit_leaves(shallow.root, [&](const RegionNode& n) {
        if (n.leaf_class != LeafClass::Member && n.leaf_class != LeafClass::NonMember) return;
        const auto entry = std::make_tuple(n.ball.center.value(), n.ball.radius_exponent, n.leaf_class);
        CHECK(std::find(deep_leaves.begin(), deep_leaves.end(), entry) != deep_leaves.end());
    });
}

TEST_CASE("outer bound exponent certifies the far field") {
    const Family sd = tt::fixture_family("structured-diag");
    const Epsilon eps(make_rational(1, 3));
    const auto bound = outer_bound_exponent(sd, eps);
    REQUIRE(bound.has_value());
    SplitMix64 rng(33);
    for (int i = 0; i < 200; ++i) {
        // |lambda| = 3^t > 3^bound
        const long long t = *bound + 1 + rng.next_in(0, 4);
        long long unit = rng.next_in(1, 50);
        while (unit % 3 == 0) ++unit;
        const PadicScalar lambda(Rational(unit) * PMagnitude::finite(-t).to_rational(3), 3);
        CHECK(member(sd, lambda, eps).cls == MembershipClass::Outside);
    }

    // a condition family with a large threshold has no bounding ball:
    // the condition product tends to 1 at infinity and 1 > 1/eps for eps > 1
    const RationalMatrix a = RationalMatrix::from_strings({{"0", "0"}, {"0", "1"}}, 5);
    const Family cond = Family::condition_pseudo(a);
    CHECK(!outer_bound_exponent(cond, Epsilon(Rational(2))).has_value());
}
