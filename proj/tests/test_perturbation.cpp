#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace ultraspec;
namespace tt = ultraspec::testing;

namespace {

RationalMatrix from_ints(const std::vector<std::vector<long long>>& rows, long long p) {
    std::vector<std::vector<Rational>> q;
    for (const auto& r : rows) q.emplace_back(r.begin(), r.end());
    return RationalMatrix::from_rows(q, p);
}

PadicVector vec(const std::vector<Rational>& xs, long long p) {
    PadicVector v;
    for (const auto& x : xs) v.emplace_back(x, p);
    return v;
}

}  // namespace

TEST_CASE("ingleton functional") {
    // tie at magnitude 1: smallest index wins
    const IngletonFunctional phi1 = ingleton_functional(vec({Rational(1), Rational(3)}, 5));
    CHECK(phi1.index == 0);
    CHECK(phi1.scale.value() == 1);

    const IngletonFunctional phi2 = ingleton_functional(vec({Rational(5), Rational(1)}, 5));
    CHECK(phi2.index == 1);

    CHECK_THROWS_AS(ingleton_functional(vec({Rational(0), Rational(0)}, 5)), ZeroVector);

    // phi(x) = 1 and ||phi|| = 1/||x|| on random vectors
    SplitMix64 rng(2);
    for (int i = 0; i < 500; ++i) {
        const long long p = (i % 2) ? 3 : 7;
        PadicVector x;
        for (int k = 0; k < 3; ++k) x.push_back(tt::rand_scalar(rng, p));
        if (sup_norm(x, p).is_zero()) continue;
        const IngletonFunctional phi = ingleton_functional(x);
        CHECK(apply_functional(phi, x).value() == 1);
        CHECK(functional_norm(phi) == PMagnitude::finite(-sup_norm(x, p).exponent()));
    }
}

TEST_CASE("rank-one witness on the structured example") {
    const Family sd = tt::fixture_family("structured-diag");
    const Epsilon eps(make_rational(1, 3));
    const RankOnePerturb w = rank_one_witness(sd, PadicScalar(10, 3), eps);
    CHECK(w.norm == PMagnitude::finite(-2));  // ||D|| = 1/9 < 1/3
    CHECK(w.norm.to_rational(3) < eps.value());
    const RationalMatrix perturbed = sd.a() + sd.c() * w.assembled * sd.b();
    CHECK(determinant(pencil_at(perturbed, sd.m(), PadicScalar(10, 3))).is_zero());
}

TEST_CASE("rank-one witness on the double-eigenvalue pencil") {
    const Family f = tt::fixture_family("example-final-iii");
    const Epsilon eps(make_rational(1, 2));
    const PadicScalar lambda(5, 2);  // |lambda - 1| = 2^-2
    const RankOnePerturb w = rank_one_witness(f, lambda, eps);
    CHECK(w.norm.to_rational(2) < eps.value());
    const RationalMatrix perturbed = f.a() + f.c() * w.assembled * f.b();
    CHECK(determinant(pencil_at(perturbed, f.m(), lambda)).is_zero());
}

TEST_CASE("rank-one witness at an eigenvalue is zero") {
    const Family sd = tt::fixture_family("structured-diag");
    const RankOnePerturb w = rank_one_witness(sd, PadicScalar::one(3), Epsilon(make_rational(1, 3)));
    CHECK(w.assembled.is_zero());
    CHECK(w.norm == PMagnitude::zero());
    CHECK_THROWS_AS(rank_one_witness(sd, PadicScalar(7, 3), Epsilon(make_rational(1, 3))), NotInPseudoRegion);
}

TEST_CASE("rank-one max-norm identity on random member points") {
    SplitMix64 rng(404);
    int built = 0;
    for (int i = 0; i < 400 && built < 120; ++i) {
        const long long p = (i % 2) ? 3 : 5;
        const RationalMatrix a = tt::rand_matrix(rng, 2, p);
        const RationalMatrix b = tt::rand_matrix(rng, 2, p);
        const RationalMatrix c = tt::rand_matrix(rng, 2, p);
        Family fam = Family::structured(a, b, c);
        const PadicScalar lambda = tt::rand_scalar(rng, p);
        const Epsilon eps(make_rational(1, 1 + rng.next_in(0, 8)));
        const MembershipVerdict v = member(fam, lambda, eps);
        if (v.cls != MembershipClass::InPseudoRegion) continue;
        const RankOnePerturb w = rank_one_witness(fam, lambda, eps);
        CHECK(sup_norm(w.assembled) == sup_norm(w.column, p) * functional_norm(w.functional));
        CHECK(w.norm.to_rational(p) < eps.value());
        ++built;
    }
    CHECK(built >= 120);
}

TEST_CASE("sampler guard rejects oversized perturbations") {
    SplitMix64 rng(1);
    // eps = 1/9 over Q_3 admits p^-3 and below; p^-2 must be rejected
    CHECK_THROWS_AS(sample_bounded_perturbation(2, 3, 2, make_rational(1, 9), rng), Error);
    const RationalMatrix d = sample_bounded_perturbation(2, 3, 3, make_rational(1, 9), rng);
    CHECK(sup_norm(d) == PMagnitude::finite(-3));
}

TEST_CASE("least exponent strictly below a bound") {
    CHECK(least_exponent_strictly_below(make_rational(1, 3), 3) == 2);
    CHECK(least_exponent_strictly_below(make_rational(1, 9), 3) == 3);
    CHECK(least_exponent_strictly_below(Rational(1), 3) == 1);
    CHECK(least_exponent_strictly_below(Rational(9), 3) == -1);
    CHECK(least_exponent_strictly_below(make_rational(2, 5), 5) == 1);
}

TEST_CASE("forward inclusion campaign") {
    const Family sd = tt::fixture_family("structured-diag");
    const Epsilon eps(make_rational(1, 3));
    const ForwardReport report = verify_forward_inclusion(sd, eps, 50, 20240817);
    CHECK(report.counterexamples == 0);
    REQUIRE(!report.records.empty());
    // trial 0 is D = 0: both eigenvalues come back InSpectrum
    const ForwardTrial& zero_trial = report.records.front();
    CHECK(zero_trial.d.is_zero());
    REQUIRE(zero_trial.checks.size() == 2);
    for (const auto& c : zero_trial.checks) CHECK(c.cls == MembershipClass::InSpectrum);
    // sampled trials respect the strict norm bound
    for (std::size_t t = 1; t < report.records.size(); ++t)
        CHECK(report.records[t].d_norm.to_rational(3) < eps.value());
}

TEST_CASE("forward inclusion on the singular-structure pencil") {
    const Family f = tt::fixture_family("example-final-ii");
    const ForwardReport report = verify_forward_inclusion(f, Epsilon(make_rational(1, 3)), 60, 7);
    CHECK(report.counterexamples == 0);
    CHECK(report.points_checked >= 2);
}

TEST_CASE("union equality campaign produces two-sided certificates") {
    const Family sd = tt::fixture_family("structured-diag");
    const Epsilon eps(make_rational(1, 3));
    std::vector<PadicScalar> grid;
    grid.emplace_back(Rational(1), 3);   // eigenvalue: D = 0 certificate
    grid.emplace_back(Rational(2), 3);   // eigenvalue
    for (long long u = 1; u <= 20; ++u) grid.emplace_back(1 + Rational(9 * u), 3);  // members
    for (long long k = 3; k <= 8; ++k) grid.emplace_back(Rational(k), 3);           // outside
    const UnionReport report = union_equality_campaign(sd, grid, eps, 99);
    CHECK(report.failures == 0);
    long long members = 0, spectrum_points = 0, outside = 0;
    for (const auto& cert : report.certificates) {
        CHECK(cert.ok);
        switch (cert.cls) {
            case MembershipClass::InSpectrum:
                ++spectrum_points;
                REQUIRE(cert.witness.has_value());
                CHECK(cert.witness->assembled.is_zero());
                break;
            case MembershipClass::InPseudoRegion:
                ++members;
                REQUIRE(cert.witness.has_value());
                CHECK(cert.det_check);
                CHECK(cert.norm_check);
                break;
            case MembershipClass::Outside:
                ++outside;
                CHECK(cert.uncaptured);
                break;
        }
    }
    CHECK(spectrum_points == 2);
    CHECK(members == 20);
    CHECK(outside == 6);
}

TEST_CASE("union campaign on the pencil fixture") {
    const Family f = tt::fixture_family("example-final-ii");
    const Epsilon eps(make_rational(1, 3));
    std::vector<PadicScalar> grid;
    grid.emplace_back(Rational(0), 3);
    grid.emplace_back(make_rational(3, 2), 3);
    for (long long u = 1; u <= 10; ++u) grid.emplace_back(Rational(9 * u), 3);
    for (long long u = 1; u <= 10; ++u) grid.emplace_back(make_rational(3, 2) + Rational(9 * u), 3);
    for (long long k = 1; k <= 6; ++k) grid.emplace_back(Rational(3 * k + 1), 3);
    const UnionReport report = union_equality_campaign(f, grid, eps, 4242);
    CHECK(report.failures == 0);
}

TEST_CASE("determinant identity behind the pencil forward direction") {
    SplitMix64 rng(606);
    for (int i = 0; i < 200; ++i) {
        const long long p = (i % 2) ? 3 : 5;
        const RationalMatrix a = tt::rand_matrix(rng, 2, p);
        const RationalMatrix m = tt::rand_invertible(rng, 2, p);
        const RationalMatrix b = tt::rand_matrix(rng, 2, p);
        const RationalMatrix c = tt::rand_matrix(rng, 2, p);
        const RationalMatrix d = tt::rand_matrix(rng, 2, p);
        const PadicScalar lambda = tt::rand_scalar(rng, p);
        const RationalMatrix shifted = pencil_at(a, m, lambda);
        if (!is_invertible(shifted)) continue;
        const RationalMatrix inv = inverse_at(shifted);
        const RationalMatrix id = RationalMatrix::identity(2, p);
        CHECK(determinant(id + c * d * b * inv) == determinant(id + d * b * inv * c));
    }
}
