#include "ultraspec/perturbation.hpp"

namespace ultraspec {

IngletonFunctional ingleton_functional(const PadicVector& x) {
    if (x.empty()) throw ZeroVector();
    const long long p = x.front().prime();
    const PMagnitude norm = sup_norm(x, p);
    if (norm.is_zero()) throw ZeroVector();
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (abs(x[i]) == norm) {
            IngletonFunctional phi{static_cast<long long>(i), x[i].invert()};
            // phi(x) = 1 and ||phi|| = 1/||x||, by construction; assert anyway.
            if (!(apply_functional(phi, x).value() == 1)) throw Error("ingleton functional failed phi(x) = 1");
            return phi;
        }
    }
    throw Error("unreachable: no coordinate attains the norm");
}

PadicScalar apply_functional(const IngletonFunctional& phi, const PadicVector& y) {
    return y[static_cast<std::size_t>(phi.index)] * phi.scale;
}

PMagnitude functional_norm(const IngletonFunctional& phi) {
    return abs(phi.scale);
}

namespace {

RationalMatrix assemble_rank_one(const PadicVector& column, const IngletonFunctional& phi, long long prime) {
    const long long n = static_cast<long long>(column.size());
    RationalMatrix d(n, prime);
    for (long long i = 0; i < n; ++i) d.set(i, phi.index, column[static_cast<std::size_t>(i)] * phi.scale);
    return d;
}

Rational witness_bound(const Family& family, const PadicScalar& lambda, const Epsilon& eps) {
    if (!family.is_condition()) return eps.value();
    const PMagnitude fwd = sup_norm(family.forward_polys().eval(lambda));
    return eps.value() * fwd.to_rational(family.prime());
}

}  // namespace

RankOnePerturb rank_one_witness(const Family& family, const PadicScalar& lambda, const Epsilon& eps) {
    const long long p = family.prime();
    const long long n = family.n();
    const MembershipVerdict v = member(family, lambda, eps);
    if (v.cls == MembershipClass::Outside)
        throw NotInPseudoRegion("rank-one witness requested at an outside point " + lambda.str());

    if (v.cls == MembershipClass::InSpectrum) {
        // lambda is an eigenvalue already: D = 0 certifies it.
        PadicVector column(static_cast<std::size_t>(n), PadicScalar::zero(p));
        IngletonFunctional phi{0, PadicScalar::one(p)};
        RationalMatrix zero(n, p);
        return {std::move(column), phi, std::move(zero), PMagnitude::zero(), witness_bound(family, lambda, eps)};
    }

    // Norm-attaining entry (i0, j0) of R = B(A - lambda M)^(-1)C gives
    // D = -(1/R_{i0 j0}) e_{j0} e_{i0}^T with ||D|| = 1/||R|| and
    // (I + D R) e_{j0} = 0, hence det(A + CDB - lambda M) = 0.
    const RationalMatrix r_at = family.resolvent().eval(lambda);
    const PMagnitude norm = sup_norm(r_at);
    long long j0 = -1;
    for (long long j = 0; j < n && j0 < 0; ++j)
        for (long long i = 0; i < n; ++i)
            if (abs(r_at.at(i, j)) == norm) {
                j0 = j;
                break;
            }
    const PadicScalar unit_scale = PadicScalar::p_power(norm.exponent(), p);
    PadicVector x;
    x.reserve(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i) x.push_back(r_at.at(i, j0) * unit_scale);
    const IngletonFunctional phi = ingleton_functional(x);

    PadicVector column(static_cast<std::size_t>(n), PadicScalar::zero(p));
    column[static_cast<std::size_t>(j0)] = -unit_scale;
    RationalMatrix d = assemble_rank_one(column, phi, p);
    const PMagnitude d_norm = sup_norm(column, p) * functional_norm(phi);

    RankOnePerturb out{std::move(column), phi, std::move(d), d_norm, witness_bound(family, lambda, eps)};
    // Exact post-checks: max-norm rank-one identity, strict bound, singularity.
    if (sup_norm(out.assembled) != out.norm) throw Error("rank-one norm identity failed");
    if (!(out.norm.to_rational(p) < out.norm_bound)) throw Error("rank-one witness norm bound failed");
    const RationalMatrix perturbed = family.a() + family.c() * out.assembled * family.b();
    if (!determinant(pencil_at(perturbed, family.m(), lambda)).is_zero())
        throw Error("rank-one witness determinant check failed");
    return out;
}

std::uint64_t SplitMix64::next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

long long SplitMix64::next_in(long long lo, long long hi) {
    return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

long long least_exponent_strictly_below(const Rational& bound, long long p) {
    if (bound <= 0) throw Error("bound must be positive");
    // Smallest m with p^(-m) < bound  <=>  p^m * bound > 1.
    long long m = 0;
    auto holds = [&](long long mm) {
        BigInt lhs = numerator(bound);
        BigInt rhs = denominator(bound);
        if (mm >= 0)
            lhs *= int_pow(BigInt(p), mm);
        else
            rhs *= int_pow(BigInt(p), -mm);
        return lhs > rhs;
    };
    while (!holds(m)) ++m;
    while (m > (-1ll << 20) && holds(m - 1)) --m;
    return m;
}

RationalMatrix sample_bounded_perturbation(long long n, long long prime, long long magnitude_exponent,
                                           const Rational& strict_bound, SplitMix64& rng) {
    const Rational magnitude = PMagnitude::finite(-magnitude_exponent).to_rational(prime);
    if (!(magnitude < strict_bound))
        throw Error("sampler rejected ||D|| = p^" + std::to_string(-magnitude_exponent) +
                    ": not strictly below the bound " + format_rational(strict_bound));
    // Rank <= 2 integer profile u1 v1^T + u2 v2^T, then scaled to the target magnitude.
    std::vector<BigInt> u1, v1, u2, v2;
    for (long long i = 0; i < n; ++i) {
        u1.emplace_back(rng.next_in(-9, 9));
        v1.emplace_back(rng.next_in(-9, 9));
        u2.emplace_back(rng.next_in(-9, 9));
        v2.emplace_back(rng.next_in(-9, 9));
    }
    RationalMatrix d0(n, prime);
    bool zero = true;
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) {
            BigInt e = u1[static_cast<std::size_t>(i)] * v1[static_cast<std::size_t>(j)] +
                       u2[static_cast<std::size_t>(i)] * v2[static_cast<std::size_t>(j)];
            if (e != 0) zero = false;
            d0.set(i, j, PadicScalar(Rational(e), prime));
        }
    if (zero) d0.set(0, 0, PadicScalar::one(prime));
    const long long e0 = sup_norm(d0).exponent();
    const PadicScalar scale = PadicScalar::p_power(magnitude_exponent + e0, prime);
    RationalMatrix d = d0.scaled(scale);
    if (sup_norm(d) != PMagnitude::finite(-magnitude_exponent)) throw Error("sampler scaling failed");
    return d;
}

ForwardReport verify_forward_inclusion(const Family& family, const Epsilon& eps, long long trials,
                                       std::uint64_t seed) {
    const long long p = family.prime();
    const long long n = family.n();
    ForwardReport report{seed, trials, {}, 0, 0};

    for (long long t = 0; t < trials; ++t) {
        SplitMix64 rng(seed + 0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(t + 1));
        ForwardTrial trial{t, RationalMatrix(n, p), PMagnitude::zero(), {}, false};
        if (t > 0) {
            const long long m = least_exponent_strictly_below(eps.value(), p) + rng.next_in(0, 3);
            // For condition families admissibility depends on the eigenvalue;
            // the bound is tested per point below, so only the magnitude is fixed here.
            const Rational bound =
                family.is_condition() ? PMagnitude::finite(-(m - 1)).to_rational(p) : eps.value();
            trial.d = sample_bounded_perturbation(n, p, m, bound, rng);
        }
        trial.d_norm = sup_norm(trial.d);

        const RationalMatrix perturbed = family.a() + family.c() * trial.d * family.b();
        RationalPoly f = char_poly(perturbed, family.m());
        for (const auto& [root, mult] : rational_roots(f)) {
            (void)mult;
            bool bound_applies = true;
            if (family.is_condition()) {
                const Rational bound = witness_bound(family, root, eps);
                bound_applies = trial.d_norm.is_zero() || trial.d_norm.to_rational(p) < bound;
            }
            const MembershipVerdict v = member(family, root, eps);
            const bool ok = !bound_applies || v.cls != MembershipClass::Outside;
            trial.checks.push_back({root, v.cls, bound_applies, ok});
            ++report.points_checked;
            if (!ok) {
                trial.counterexample = true;
                ++report.counterexamples;
            }
        }
        report.records.push_back(std::move(trial));
    }
    return report;
}

UnionReport union_equality_campaign(const Family& family, const std::vector<PadicScalar>& grid, const Epsilon& eps,
                                    std::uint64_t seed) {
    const long long p = family.prime();
    const long long n = family.n();
    UnionReport report{seed, {}, 0};
    constexpr long long kProbesPerOutsidePoint = 24;

    for (std::size_t gi = 0; gi < grid.size(); ++gi) {
        const PadicScalar& lambda = grid[gi];
        const MembershipVerdict v = member(family, lambda, eps);
        UnionCertificate cert{lambda, v.cls, std::nullopt, false, false, false, false};
        if (v.cls != MembershipClass::Outside) {
            RankOnePerturb witness = rank_one_witness(family, lambda, eps);
            const RationalMatrix perturbed = family.a() + family.c() * witness.assembled * family.b();
            cert.det_check = determinant(pencil_at(perturbed, family.m(), lambda)).is_zero();
            cert.norm_check = witness.norm.is_zero() || witness.norm.to_rational(p) < witness.norm_bound;
            cert.ok = cert.det_check && cert.norm_check;
            cert.witness = std::move(witness);
        } else {
            // No admissible D may capture an outside point; probe the sampler.
            const Rational bound = witness_bound(family, lambda, eps);
            const long long m0 = least_exponent_strictly_below(bound, p);
            SplitMix64 rng(seed + 0xD1B54A32D192ED03ull * static_cast<std::uint64_t>(gi + 1));
            bool captured = false;
            for (long long k = 0; k < kProbesPerOutsidePoint; ++k) {
                RationalMatrix d = sample_bounded_perturbation(n, p, m0 + rng.next_in(0, 3), bound, rng);
                const RationalMatrix perturbed = family.a() + family.c() * d * family.b();
                if (determinant(pencil_at(perturbed, family.m(), lambda)).is_zero()) {
                    captured = true;
                    break;
                }
            }
            cert.uncaptured = !captured;
            cert.ok = cert.uncaptured;
        }
        if (!cert.ok) ++report.failures;
        report.certificates.push_back(std::move(cert));
    }
    return report;
}

}  // namespace ultraspec
