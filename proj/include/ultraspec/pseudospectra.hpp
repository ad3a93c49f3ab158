#pragma once

#include "ultraspec/resolvent.hpp"
#include "ultraspec/spectra.hpp"

namespace ultraspec {

enum class FamilyTag { Pseudo, ConditionPseudo, Structured, StructuredCondition, PencilStructured };

std::string family_tag_name(FamilyTag tag);

/**
 * One pseudospectrum family, with its defining matrices and the exact
 * symbolic data needed to answer membership queries:
 *
 *   Pseudo               ||(A - lambda I)^(-1)||            > 1/eps
 *   ConditionPseudo      ||A - lambda I|| * ||(A-lambda I)^(-1)||
 *   Structured           ||B (A - lambda I)^(-1) C||
 *   StructuredCondition  ||C^(-1)(A-lambda I)B^(-1)|| * ||B(A-lambda I)^(-1)C||
 *   PencilStructured     ||B (A - lambda M)^(-1) C||
 *
 * M defaults to I for the non-pencil tags, B and C to I where omitted.
 * Condition tags require invertible B and C at construction.
 */
class Family {
public:
    static Family pseudo(RationalMatrix a);
    static Family condition_pseudo(RationalMatrix a);
    static Family structured(RationalMatrix a, RationalMatrix b, RationalMatrix c);
    static Family structured_condition(RationalMatrix a, RationalMatrix b, RationalMatrix c);
    static Family pencil_structured(RationalMatrix a, RationalMatrix m, RationalMatrix b, RationalMatrix c);

    FamilyTag tag() const { return tag_; }
    bool is_condition() const { return tag_ == FamilyTag::ConditionPseudo || tag_ == FamilyTag::StructuredCondition; }
    const RationalMatrix& a() const { return resolvent_.a(); }
    const RationalMatrix& m() const { return resolvent_.m(); }
    const RationalMatrix& b() const { return resolvent_.b(); }
    const RationalMatrix& c() const { return resolvent_.c(); }
    long long n() const { return resolvent_.n(); }
    long long prime() const { return resolvent_.prime(); }

    const SymbolicResolvent& resolvent() const { return resolvent_; }
    /// C^(-1)(A - lambda M)B^(-1) as degree-1 polynomials; condition tags only.
    const PolyMatrix& forward_polys() const;

private:
    Family(FamilyTag tag, RationalMatrix a, RationalMatrix m, RationalMatrix b, RationalMatrix c);
    FamilyTag tag_;
    SymbolicResolvent resolvent_;
    std::optional<PolyMatrix> forward_;
};

enum class MembershipClass { InSpectrum, InPseudoRegion, Outside };

std::string membership_class_name(MembershipClass cls);

struct MembershipVerdict {
    MembershipClass cls;
    PMagnitude norm_value;  // the family's tested quantity at lambda (Infinite at spectrum points)
    Epsilon threshold;
};

/// ||B (A - lambda M)^(-1) C|| from the symbolic form: Infinite when the
/// denominator vanishes, else max numerator magnitude over |denominator|.
PMagnitude resolvent_norm_at(const SymbolicResolvent& r, const PadicScalar& lambda);

/// ||C^(-1)(A - lambda I)B^(-1)|| * ||B (A - lambda I)^(-1) C|| via exact
/// inverses; Infinite when lambda is an eigenvalue of A. Independent of the
/// symbolic route, so the two can cross-check each other.
PMagnitude condition_product_at(const RationalMatrix& a, const RationalMatrix& b, const RationalMatrix& c,
                                const PadicScalar& lambda);

/// The family's tested magnitude at lambda.
PMagnitude family_quantity_at(const Family& family, const PadicScalar& lambda);

MembershipVerdict member(const Family& family, const PadicScalar& lambda, const Epsilon& eps);

inline bool is_member(const MembershipVerdict& v) { return v.cls != MembershipClass::Outside; }

/**
 * Vector certifying lambda's membership strictly inside the pseudo region.
 * x is the norm-attaining column of B(A-lambda M)^(-1)C scaled to ||x|| = 1.
 * Re-verified before returning: for condition families the inequality
 * ||C^(-1)(A-lambda I)B^(-1) x|| < eps ||C^(-1)(A-lambda I)B^(-1)|| ||x||;
 * for the other families ||C^(-1)(A-lambda M)B^(-1) x|| < eps when B, C are
 * invertible, and the defining sup attainment ||R e_j|| > ||e_j||/eps always.
 */
struct WitnessVector {
    PadicVector x;
    long long attaining_column;
};

WitnessVector witness_vector(const Family& family, const PadicScalar& lambda, const Epsilon& eps);

/// Membership of lambda in Lambda_eps(A) agrees with membership of
/// alpha + beta*lambda in Lambda_eps(beta*A + alpha*I). Requires beta != 0.
bool affine_image_check(const RationalMatrix& a, const PadicScalar& alpha, const PadicScalar& beta,
                        const PadicScalar& lambda, const Epsilon& eps);

/// Reciprocal-map theorem at one point, k = ||A^(-1)|| ||A||:
/// (i)  lambda in Lambda_eps(A^(-1),B,C)\{0}   =>  1/lambda in Lambda_{eps k}(A,B,C)
/// (ii) 1/lambda in Lambda_{eps k}(A,B,C)\{0}  =>  lambda in Lambda_{eps k^2}(A^(-1),B,C)
/// Requires invertible pairwise-commuting A, B, C and lambda != 0.
bool reciprocal_check(const RationalMatrix& a, const RationalMatrix& b, const RationalMatrix& c,
                      const PadicScalar& lambda, const Epsilon& eps);

/// Similarity sandwich at one point with V = U^(-1) A U and k = ||U^(-1)|| ||U||:
/// member(Lambda_{eps/k^2}(A)) => member(Lambda_eps(V)) => member(Lambda_{k^2 eps}(A)).
/// Requires invertible U commuting with B and C.
bool similarity_sandwich_check(const RationalMatrix& a, const RationalMatrix& b, const RationalMatrix& c,
                               const RationalMatrix& u, const PadicScalar& lambda, const Epsilon& eps);

/// lambda in Lambda_eps(A,B,C)  <=>  lambda in sigma_{eps ||C^(-1)(A-lambda I)B^(-1)||}(A,B,C).
bool lambda_sigma_rescale_check(const RationalMatrix& a, const RationalMatrix& b, const RationalMatrix& c,
                                const PadicScalar& lambda, const Epsilon& eps);

}  // namespace ultraspec
