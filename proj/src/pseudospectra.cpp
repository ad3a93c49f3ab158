#include "ultraspec/pseudospectra.hpp"

namespace ultraspec {

std::string family_tag_name(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::Pseudo: return "pseudo";
        case FamilyTag::ConditionPseudo: return "condition-pseudo";
        case FamilyTag::Structured: return "structured";
        case FamilyTag::StructuredCondition: return "structured-condition";
        case FamilyTag::PencilStructured: return "pencil-structured";
    }
    return "";
}

std::string membership_class_name(MembershipClass cls) {
    switch (cls) {
        case MembershipClass::InSpectrum: return "in_spectrum";
        case MembershipClass::InPseudoRegion: return "in_pseudo_region";
        case MembershipClass::Outside: return "outside";
    }
    return "";
}

Family::Family(FamilyTag tag, RationalMatrix a, RationalMatrix m, RationalMatrix b, RationalMatrix c)
    : tag_(tag), resolvent_(std::move(a), std::move(m), std::move(b), std::move(c)) {
    if (is_condition()) {
        if (!is_invertible(this->b()) || !is_invertible(this->c()))
            throw SingularStructure("condition families require invertible B and C");
        // C^(-1)(A - lambda M)B^(-1) = C^(-1)AB^(-1) - lambda C^(-1)MB^(-1), entrywise linear.
        const RationalMatrix binv = inverse_at(this->b());
        const RationalMatrix cinv = inverse_at(this->c());
        const RationalMatrix e0 = cinv * this->a() * binv;
        const RationalMatrix e1 = cinv * this->m() * binv;
        PolyMatrix fw(n(), prime());
        for (long long i = 0; i < n(); ++i)
            for (long long j = 0; j < n(); ++j)
                fw.set(i, j, RationalPoly({e0.at(i, j).value(), -e1.at(i, j).value()}, prime()));
        forward_ = std::move(fw);
    }
}

Family Family::pseudo(RationalMatrix a) {
    const long long n = a.n(), p = a.prime();
    RationalMatrix id = RationalMatrix::identity(n, p);
    return Family(FamilyTag::Pseudo, std::move(a), id, id, id);
}

Family Family::condition_pseudo(RationalMatrix a) {
    const long long n = a.n(), p = a.prime();
    RationalMatrix id = RationalMatrix::identity(n, p);
    return Family(FamilyTag::ConditionPseudo, std::move(a), id, id, id);
}

Family Family::structured(RationalMatrix a, RationalMatrix b, RationalMatrix c) {
    RationalMatrix id = RationalMatrix::identity(a.n(), a.prime());
    return Family(FamilyTag::Structured, std::move(a), std::move(id), std::move(b), std::move(c));
}

Family Family::structured_condition(RationalMatrix a, RationalMatrix b, RationalMatrix c) {
    RationalMatrix id = RationalMatrix::identity(a.n(), a.prime());
    return Family(FamilyTag::StructuredCondition, std::move(a), std::move(id), std::move(b), std::move(c));
}

Family Family::pencil_structured(RationalMatrix a, RationalMatrix m, RationalMatrix b, RationalMatrix c) {
    return Family(FamilyTag::PencilStructured, std::move(a), std::move(m), std::move(b), std::move(c));
}

const PolyMatrix& Family::forward_polys() const {
    if (!forward_) throw Error("forward polynomials exist only for condition families");
    return *forward_;
}

PMagnitude resolvent_norm_at(const SymbolicResolvent& r, const PadicScalar& lambda) {
    const PadicScalar den = r.denominator().eval(lambda);
    if (den.is_zero()) return PMagnitude::infinite();
    PMagnitude best = PMagnitude::zero();
    for (long long i = 0; i < r.n(); ++i)
        for (long long j = 0; j < r.n(); ++j) best = std::max(best, abs(r.numerators().at(i, j).eval(lambda)));
    return best / abs(den);
}

PMagnitude condition_product_at(const RationalMatrix& a, const RationalMatrix& b, const RationalMatrix& c,
                                const PadicScalar& lambda) {
    if (!is_invertible(b) || !is_invertible(c)) throw SingularStructure("condition product requires invertible B, C");
    const RationalMatrix shifted = pencil_at(a, RationalMatrix::identity(a.n(), a.prime()), lambda);
    if (!is_invertible(shifted)) return PMagnitude::infinite();
    const PMagnitude fwd = sup_norm(inverse_at(c) * shifted * inverse_at(b));
    const PMagnitude bwd = sup_norm(b * inverse_at(shifted) * c);
    return fwd * bwd;
}

PMagnitude family_quantity_at(const Family& family, const PadicScalar& lambda) {
    const PadicScalar den = family.resolvent().denominator().eval(lambda);
    if (den.is_zero()) return PMagnitude::infinite();
    PMagnitude q = resolvent_norm_at(family.resolvent(), lambda);
    if (family.is_condition()) q = sup_norm(family.forward_polys().eval(lambda)) * q;
    return q;
}

MembershipVerdict member(const Family& family, const PadicScalar& lambda, const Epsilon& eps) {
    if (lambda.prime() != family.prime()) throw PrimeMismatch("query point prime differs from family prime");
    const PMagnitude q = family_quantity_at(family, lambda);
    if (q.is_infinite()) return {MembershipClass::InSpectrum, q, eps};
    const bool in = compare_vs_inverse_epsilon(q, eps, family.prime()) == std::strong_ordering::greater;
    return {in ? MembershipClass::InPseudoRegion : MembershipClass::Outside, q, eps};
}

namespace {

// Smallest column index attaining the entry-max norm of r_at, and the norm.
std::pair<long long, PMagnitude> attaining_column(const RationalMatrix& r_at) {
    const PMagnitude norm = sup_norm(r_at);
    for (long long j = 0; j < r_at.n(); ++j) {
        PMagnitude col = PMagnitude::zero();
        for (long long i = 0; i < r_at.n(); ++i) col = std::max(col, abs(r_at.at(i, j)));
        if (col == norm) return {j, norm};
    }
    throw Error("unreachable: no column attains the norm");
}

PadicVector normalized_column(const RationalMatrix& r_at, long long j, const PMagnitude& norm) {
    const PadicScalar scale = PadicScalar::p_power(norm.exponent(), r_at.prime());
    PadicVector x;
    x.reserve(static_cast<std::size_t>(r_at.n()));
    for (long long i = 0; i < r_at.n(); ++i) x.push_back(r_at.at(i, j) * scale);
    return x;
}

}  // namespace

WitnessVector witness_vector(const Family& family, const PadicScalar& lambda, const Epsilon& eps) {
    const MembershipVerdict v = member(family, lambda, eps);
    if (v.cls != MembershipClass::InPseudoRegion)
        throw NotInPseudoRegion("witness requested at " + lambda.str() + " with class " +
                                membership_class_name(v.cls));
    const long long p = family.prime();
    const RationalMatrix r_at = family.resolvent().eval(lambda);
    const auto [j0, norm] = attaining_column(r_at);
    PadicVector x = normalized_column(r_at, j0, norm);

    const Rational eps_q = eps.value();
    if (family.is_condition()) {
        // Lemma inequality ||E x|| < eps ||E|| ||x||, all factors exact.
        const RationalMatrix e_at = family.forward_polys().eval(lambda);
        const PMagnitude lhs = sup_norm(mat_vec(e_at, x), p);
        const Rational rhs = eps_q * sup_norm(e_at).to_rational(p);  // ||x|| = 1
        if (!(lhs.to_rational(p) < rhs)) throw Error("witness certificate failed");
    } else {
        // Defining sup attainment: ||R e_j|| > 1/eps exactly.
        if (compare_vs_inverse_epsilon(norm, eps, p) != std::strong_ordering::greater)
            throw Error("witness certificate failed");
        if (is_invertible(family.b()) && is_invertible(family.c())) {
            // ||C^(-1)(A - lambda M)B^(-1) x|| < eps with ||x|| = 1.
            const RationalMatrix e_at =
                inverse_at(family.c()) * pencil_at(family.a(), family.m(), lambda) * inverse_at(family.b());
            const PMagnitude lhs = sup_norm(mat_vec(e_at, x), p);
            if (!(lhs.to_rational(p) < eps_q)) throw Error("witness certificate failed");
        }
    }
    return {std::move(x), j0};
}

bool affine_image_check(const RationalMatrix& a, const PadicScalar& alpha, const PadicScalar& beta,
                        const PadicScalar& lambda, const Epsilon& eps) {
    if (beta.is_zero()) throw Error("affine map requires beta != 0");
    const RationalMatrix image = a.scaled(beta) + RationalMatrix::identity(a.n(), a.prime()).scaled(alpha);
    const MembershipVerdict lhs = member(Family::condition_pseudo(a), lambda, eps);
    const MembershipVerdict rhs = member(Family::condition_pseudo(image), alpha + beta * lambda, eps);
    return lhs.cls == rhs.cls;
}

bool reciprocal_check(const RationalMatrix& a, const RationalMatrix& b, const RationalMatrix& c,
                      const PadicScalar& lambda, const Epsilon& eps) {
    if (!is_invertible(a) || !is_invertible(b) || !is_invertible(c))
        throw SingularStructure("reciprocal check requires invertible A, B, C");
    if (lambda.is_zero()) throw Error("reciprocal check requires lambda != 0");
    if (!commute(a, b) || !commute(a, c) || !commute(b, c))
        throw CommutativityViolated("reciprocal check requires pairwise-commuting A, B, C");

    const long long p = a.prime();
    const RationalMatrix ainv = inverse_at(a);
    const PMagnitude k = sup_norm(ainv) * sup_norm(a);
    const Epsilon eps_k = eps.scaled_by(k, p);
    const Epsilon eps_k2 = eps_k.scaled_by(k, p);
    const PadicScalar inv_lambda = lambda.invert();

    const Family on_inverse = Family::structured_condition(ainv, b, c);
    const Family on_a = Family::structured_condition(a, b, c);

    // (i): lambda in Lambda_eps(A^-1,B,C) => 1/lambda in Lambda_{eps k}(A,B,C)
    const bool claim_i =
        !is_member(member(on_inverse, lambda, eps)) || is_member(member(on_a, inv_lambda, eps_k));
    // (ii): 1/lambda in Lambda_{eps k}(A,B,C) => lambda in Lambda_{eps k^2}(A^-1,B,C)
    const bool claim_ii =
        !is_member(member(on_a, inv_lambda, eps_k)) || is_member(member(on_inverse, lambda, eps_k2));
    return claim_i && claim_ii;
}

bool similarity_sandwich_check(const RationalMatrix& a, const RationalMatrix& b, const RationalMatrix& c,
                               const RationalMatrix& u, const PadicScalar& lambda, const Epsilon& eps) {
    if (!is_invertible(u)) throw SingularStructure("similarity requires invertible U");
    if (!commute(u, c) || !commute(b, u))
        throw CommutativityViolated("similarity sandwich requires UC=CU and BU=UB");
    const long long p = a.prime();
    const RationalMatrix uinv = inverse_at(u);
    const RationalMatrix v = uinv * a * u;
    const PMagnitude k = sup_norm(uinv) * sup_norm(u);
    const PMagnitude k2 = k * k;
    const Epsilon eps_lo = eps.scaled_by(Rational(1) / k2.to_rational(p));
    const Epsilon eps_hi = eps.scaled_by(k2, p);

    const Family on_a = Family::structured_condition(a, b, c);
    const Family on_v = Family::structured_condition(v, b, c);

    const bool lower = !is_member(member(on_a, lambda, eps_lo)) || is_member(member(on_v, lambda, eps));
    const bool upper = !is_member(member(on_v, lambda, eps)) || is_member(member(on_a, lambda, eps_hi));
    return lower && upper;
}

bool lambda_sigma_rescale_check(const RationalMatrix& a, const RationalMatrix& b, const RationalMatrix& c,
                                const PadicScalar& lambda, const Epsilon& eps) {
    const Family cond = Family::structured_condition(a, b, c);
    const PMagnitude fwd = sup_norm(cond.forward_polys().eval(lambda));
    if (fwd.is_zero()) throw Error("rescale check requires ||C^(-1)(A - lambda I)B^(-1)|| != 0");
    const Epsilon scaled = eps.scaled_by(fwd, a.prime());
    const Family structured = Family::structured(a, b, c);
    return is_member(member(cond, lambda, eps)) == is_member(member(structured, lambda, scaled));
}

}  // namespace ultraspec
