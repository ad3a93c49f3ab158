#pragma once

#include <utility>
#include <vector>

#include "ultraspec/padic.hpp"

namespace ultraspec {

/**
 * Polynomial with exact rational coefficients, tagged with the prime of the
 * ambient Q_p. Coefficients are ascending with trailing zeros trimmed; the
 * zero polynomial has an empty coefficient list and degree -1.
 */
class RationalPoly {
public:
    RationalPoly(std::vector<Rational> coefficients, long long prime);
    static RationalPoly zero(long long prime) { return RationalPoly({}, prime); }
    static RationalPoly constant(Rational c, long long prime) { return RationalPoly({std::move(c)}, prime); }
    static RationalPoly monomial(Rational c, long long degree, long long prime);
    /// Parses a coefficient list of rational strings, ascending degree.
    static RationalPoly from_strings(const std::vector<std::string>& coeffs, long long prime);

    long long prime() const { return prime_; }
    long long degree() const { return static_cast<long long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coeff(long long k) const;
    Rational leading_coeff() const;

    Rational eval_rational(const Rational& x) const;
    PadicScalar eval(const PadicScalar& x) const;

    RationalPoly operator+(const RationalPoly& rhs) const;
    RationalPoly operator-(const RationalPoly& rhs) const;
    RationalPoly operator*(const RationalPoly& rhs) const;
    RationalPoly operator-() const;
    RationalPoly scaled(const Rational& c) const;

    friend bool operator==(const RationalPoly& a, const RationalPoly& b) {
        return a.prime_ == b.prime_ && a.coeffs_ == b.coeffs_;
    }

    RationalPoly derivative() const;
    /// Exact division with remainder; divisor must be nonzero.
    std::pair<RationalPoly, RationalPoly> divrem(const RationalPoly& divisor) const;
    /// Monic gcd (1 for coprime inputs, 0 only if both inputs are 0).
    static RationalPoly gcd(RationalPoly a, RationalPoly b);
    /// Yun decomposition: returns (g_i, i) with product g_i^i equal to this up
    /// to a constant; the g_i are square-free and pairwise coprime.
    std::vector<std::pair<RationalPoly, long long>> squarefree_decomposition() const;
    /// Coefficients of f(center + t) as a polynomial in t.
    RationalPoly taylor_shift(const Rational& center) const;
    /// Integer coefficients with content 1 and positive leading coefficient;
    /// same roots as this polynomial.
    std::vector<BigInt> primitive_integer() const;

    /// Unique polynomial of degree < points.size() through the given nodes.
    static RationalPoly interpolate(const std::vector<std::pair<Rational, Rational>>& points, long long prime);

    std::string str() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
    long long prime_;
};

}  // namespace ultraspec
