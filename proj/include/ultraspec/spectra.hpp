#pragma once

#include "ultraspec/resolvent.hpp"

namespace ultraspec {

/// Root of the pencil polynomial living in Q_p but not in Q, reported to
/// finite precision: root = p^valuation * unit with unit known mod p^precision.
struct LiftedRoot {
    BigInt unit;           // in [0, p^precision), coprime to p
    long long valuation;
    long long precision;
    long long multiplicity;
};

/// Part of the pencil polynomial whose Q_p roots the method did not pin down.
/// no_qp_roots_certified means every remaining root of poly is provably
/// outside Q_p (non-integer Newton slopes, or a completed residue search).
struct UnresolvedFactor {
    RationalPoly poly;
    long long multiplicity;
    long long qp_roots_found;
    bool no_qp_roots_certified;
};

struct SpectrumResult {
    std::vector<std::pair<PadicScalar, long long>> rational_points;  // (root, multiplicity), ascending value
    std::vector<LiftedRoot> lifted_points;
    std::vector<UnresolvedFactor> unresolved_factors;
    bool infinite_eigenvalue = false;   // deg det(A - lambda*M) < n
    long long degree = 0;               // deg det(A - lambda*M)
};

/// All rational roots with multiplicities, by integer root bounding on the
/// primitive integer form. Sorted ascending by value.
std::vector<std::pair<PadicScalar, long long>> rational_roots(const RationalPoly& f);

struct NewtonSegment {
    Rational slope;     // roots on this segment have valuation -slope
    long long length;   // number of roots (with multiplicity) it accounts for
};

/// Lower convex hull of (i, v_p(coeff_i)). Precondition: f(0) != 0.
std::vector<NewtonSegment> newton_polygon(const RationalPoly& f);

/// Simple-root Hensel lifting: seed with f(seed) = 0 mod p and f'(seed) a unit
/// mod p; returns the unique r = seed mod p with f(r) = 0 mod p^N, as the
/// least non-negative representative. Throws HenselConditionFailed otherwise.
BigInt hensel_lift(const RationalPoly& f, const BigInt& seed, long long precision);

inline constexpr long long kDefaultPrecision = 64;

/// Full spectrum of the pencil (A, M): exact rational eigenvalues plus
/// Q_p-irrational ones located by Newton polygon and lifted to `precision`
/// digits. M = I gives sigma(A).
SpectrumResult spectrum(const RationalMatrix& a, const RationalMatrix& m, long long precision = kDefaultPrecision);

}  // namespace ultraspec
