#pragma once

#include <vector>

#include "ultraspec/padic.hpp"

namespace ultraspec {

inline constexpr long long kMaxDimension = 12;

using PadicVector = std::vector<PadicScalar>;

/**
 * Square matrix over Q_p with exact rational entries, all sharing one prime.
 * Dimension is capped at 12: adjugates and characteristic polynomials are
 * computed by dense exact arithmetic.
 */
class RationalMatrix {
public:
    RationalMatrix(long long n, long long prime);
    static RationalMatrix identity(long long n, long long prime);
    static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows, long long prime);
    static RationalMatrix from_strings(const std::vector<std::vector<std::string>>& rows, long long prime);

    long long n() const { return n_; }
    long long prime() const { return prime_; }
    const PadicScalar& at(long long i, long long j) const;
    void set(long long i, long long j, const PadicScalar& v);

    RationalMatrix operator+(const RationalMatrix& rhs) const;
    RationalMatrix operator-(const RationalMatrix& rhs) const;
    RationalMatrix operator*(const RationalMatrix& rhs) const;
    RationalMatrix operator-() const;
    RationalMatrix scaled(const PadicScalar& c) const;

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

    bool is_zero() const;
    bool is_identity() const;

    std::string str() const;

private:
    void check_compatible(const RationalMatrix& rhs) const;
    long long n_;
    long long prime_;
    std::vector<PadicScalar> entries_;  // row-major
};

/// max over entries of |entry|_p; Zero for the zero matrix. Equals the
/// operator norm induced by the coordinate-max vector norm.
PMagnitude sup_norm(const RationalMatrix& a);
PMagnitude sup_norm(const PadicVector& v, long long prime);

/// Exact determinant by Gaussian elimination over the rationals.
PadicScalar determinant(const RationalMatrix& a);

/// adj(A) with adj(A)*A = det(A)*I exactly, including singular A.
RationalMatrix adjugate(const RationalMatrix& a);

/// Exact inverse; throws SingularMatrix when det = 0.
RationalMatrix inverse_at(const RationalMatrix& a);

bool is_invertible(const RationalMatrix& a);

PadicVector mat_vec(const RationalMatrix& a, const PadicVector& v);

/// a - lambda * m
RationalMatrix pencil_at(const RationalMatrix& a, const RationalMatrix& m, const PadicScalar& lambda);

bool commute(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace ultraspec
