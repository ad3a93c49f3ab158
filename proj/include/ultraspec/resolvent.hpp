#pragma once

#include "ultraspec/matrix.hpp"
#include "ultraspec/poly.hpp"

namespace ultraspec {

/// n x n grid of polynomials in lambda.
class PolyMatrix {
public:
    PolyMatrix(long long n, long long prime);
    long long n() const { return n_; }
    long long prime() const { return prime_; }
    const RationalPoly& at(long long i, long long j) const;
    void set(long long i, long long j, RationalPoly p);

    /// Entrywise evaluation at an exact rational point.
    RationalMatrix eval(const PadicScalar& lambda) const;

private:
    long long n_;
    long long prime_;
    std::vector<RationalPoly> entries_;
};

/// Exact coefficients of det(A - lambda*M); M = I gives the (sign-adjusted)
/// characteristic polynomial. Throws SingularPencil when identically zero.
RationalPoly char_poly(const RationalMatrix& a, const RationalMatrix& m);

/**
 * B*(A - lambda*M)^(-1)*C held exactly: numerator polynomials
 * B*adj(A - lambda*M)*C and denominator det(A - lambda*M). Evaluating
 * numerators(x)/denominator(x) at any regular point reproduces the resolvent
 * product computed by elimination.
 */
class SymbolicResolvent {
public:
    SymbolicResolvent(RationalMatrix a, RationalMatrix m, RationalMatrix b, RationalMatrix c);

    const PolyMatrix& numerators() const { return numerators_; }
    const RationalPoly& denominator() const { return denominator_; }
    const RationalMatrix& a() const { return a_; }
    const RationalMatrix& m() const { return m_; }
    const RationalMatrix& b() const { return b_; }
    const RationalMatrix& c() const { return c_; }
    long long n() const { return a_.n(); }
    long long prime() const { return a_.prime(); }

    /// B*(A - lambda*M)^(-1)*C at a regular point, via the stored polynomials.
    RationalMatrix eval(const PadicScalar& lambda) const;

private:
    RationalMatrix a_, m_, b_, c_;
    PolyMatrix numerators_;
    RationalPoly denominator_;
};

SymbolicResolvent symbolic_resolvent(const RationalMatrix& a, const RationalMatrix& m, const RationalMatrix& b,
                                     const RationalMatrix& c);

}  // namespace ultraspec
