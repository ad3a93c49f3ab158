#pragma once

#include <cstdint>
#include <optional>

#include "ultraspec/pseudospectra.hpp"

namespace ultraspec {

/**
 * Coordinate functional phi(y) = y_index / x_index for a defining vector x,
 * where index is the smallest coordinate attaining ||x||. Then phi(x) = 1 and
 * ||phi|| = 1/||x|| exactly.
 */
struct IngletonFunctional {
    long long index;
    PadicScalar scale;  // 1 / x_index
};

IngletonFunctional ingleton_functional(const PadicVector& x);

PadicScalar apply_functional(const IngletonFunctional& phi, const PadicVector& y);

/// sup over basis vectors of |phi(e_j)| = |scale|.
PMagnitude functional_norm(const IngletonFunctional& phi);

/**
 * Rank-one perturbation D y = phi(y) * column with det(A + CDB - lambda M) = 0
 * and ||D|| strictly below the family's admissible bound. Both facts are
 * re-verified exactly before the value is returned; norm = ||column|| ||phi||
 * is the max-norm rank-one identity.
 */
struct RankOnePerturb {
    PadicVector column;
    IngletonFunctional functional;
    RationalMatrix assembled;
    PMagnitude norm;
    Rational norm_bound;  // strict upper bound that was enforced
};

/// At an InPseudoRegion point: a rank-one D certifying lambda in the
/// perturbation union (||D|| < eps*||C^(-1)(A-lambda M)B^(-1)|| for condition
/// families, ||D|| < eps otherwise). At a spectrum point: D = 0.
/// Throws NotInPseudoRegion for Outside points.
RankOnePerturb rank_one_witness(const Family& family, const PadicScalar& lambda, const Epsilon& eps);

/// Deterministic splittable generator (splitmix64) used by all campaigns.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    /// Value in [lo, hi] inclusive.
    long long next_in(long long lo, long long hi);

private:
    std::uint64_t state_;
};

/// Smallest integer m with p^(-m) strictly below bound.
long long least_exponent_strictly_below(const Rational& bound, long long p);

/// Random matrix with ||D|| = p^(-magnitude_exponent) exactly, entries from
/// rank <= 2 integer outer products. Throws Error when the requested magnitude
/// does not satisfy p^(-magnitude_exponent) < strict_bound.
RationalMatrix sample_bounded_perturbation(long long n, long long prime, long long magnitude_exponent,
                                           const Rational& strict_bound, SplitMix64& rng);

struct ForwardEigenCheck {
    PadicScalar lambda;
    MembershipClass cls;
    bool bound_applies;  // condition families: ||D|| < eps*||E(lambda)|| held
    bool ok;
};

struct ForwardTrial {
    long long index;
    RationalMatrix d;
    PMagnitude d_norm;
    std::vector<ForwardEigenCheck> checks;
    bool counterexample;
};

struct ForwardReport {
    std::uint64_t seed;
    long long trials;
    std::vector<ForwardTrial> records;
    long long counterexamples;
    long long points_checked;
};

/// Samples admissible perturbations D (trial 0 is D = 0) and asserts that
/// every rational eigenvalue of (A + CDB, M) stays inside the family's
/// pseudospectrum. Counterexamples are reported, never thrown.
ForwardReport verify_forward_inclusion(const Family& family, const Epsilon& eps, long long trials,
                                       std::uint64_t seed);

struct UnionCertificate {
    PadicScalar lambda;
    MembershipClass cls;
    std::optional<RankOnePerturb> witness;  // member points
    bool det_check;                         // det(A + CDB - lambda M) = 0
    bool norm_check;                        // strict bound on ||D||
    bool uncaptured;                        // outside points: no sampled D captures lambda
    bool ok;
};

struct UnionReport {
    std::uint64_t seed;
    std::vector<UnionCertificate> certificates;
    long long failures;
};

/// Two-sided pointwise certificate table for the perturbation-union theorems:
/// member grid points get explicit rank-one witnesses (or D = 0 on the
/// spectrum), outside grid points are probed with sampled admissible D.
UnionReport union_equality_campaign(const Family& family, const std::vector<PadicScalar>& grid, const Epsilon& eps,
                                    std::uint64_t seed);

}  // namespace ultraspec
