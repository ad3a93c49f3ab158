#pragma once

#include <compare>
#include <optional>
#include <string>

#include "ultraspec/numbers.hpp"

namespace ultraspec {

/**
 * Extended p-adic absolute value: Zero, Finite(e) meaning p^e, or Infinite.
 *
 * Infinite is the resolvent-norm convention at spectrum points; it compares
 * greater than every finite magnitude, Zero less than every one. The value is
 * never a float: Finite keeps the exact integer exponent.
 */
class PMagnitude {
public:
    enum class Kind { Zero, Finite, Infinite };

    static PMagnitude zero() { return PMagnitude(Kind::Zero, 0); }
    static PMagnitude infinite() { return PMagnitude(Kind::Infinite, 0); }
    static PMagnitude finite(long long exponent) { return PMagnitude(Kind::Finite, exponent); }

    Kind kind() const { return kind_; }
    bool is_zero() const { return kind_ == Kind::Zero; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_infinite() const { return kind_ == Kind::Infinite; }

    /// Exponent e with value p^e. Throws unless Finite.
    long long exponent() const;

    /// Exact value as a rational, given the prime. Throws on Infinite.
    Rational to_rational(long long p) const;

    friend bool operator==(const PMagnitude& a, const PMagnitude& b) = default;
    friend std::strong_ordering operator<=>(const PMagnitude& a, const PMagnitude& b);

    /// |x*y| from |x| and |y|: exponents add, Zero absorbs. Zero*Infinite throws.
    PMagnitude operator*(const PMagnitude& rhs) const;
    /// |x/y|: exponent difference. Throws on division by Zero or Infinite operands.
    PMagnitude operator/(const PMagnitude& rhs) const;

    std::string str() const;

private:
    PMagnitude(Kind kind, long long exponent) : kind_(kind), exponent_(exponent) {}
    Kind kind_;
    long long exponent_;
};

/// Exact positive rational threshold.
class Epsilon {
public:
    explicit Epsilon(Rational value);
    static Epsilon parse(const std::string& text) { return Epsilon(parse_rational(text)); }

    const Rational& value() const { return value_; }

    /// eps * p^e (or eps * 0 is rejected); used by the rescaling theorems.
    Epsilon scaled_by(const PMagnitude& factor, long long p) const;
    Epsilon scaled_by(const Rational& factor) const;

    friend bool operator==(const Epsilon& a, const Epsilon& b) = default;

private:
    Rational value_;
};

/**
 * Exact rational number interpreted as an element of Q_p.
 *
 * Canonical form (gcd 1, positive denominator) is maintained by the
 * underlying rational type; the prime is validated at construction and two
 * scalars interoperate only if their primes match.
 */
class PadicScalar {
public:
    PadicScalar(Rational value, long long prime);
    PadicScalar(long long value, long long prime) : PadicScalar(Rational(value), prime) {}
    static PadicScalar from_string(const std::string& text, long long prime) {
        return PadicScalar(parse_rational(text), prime);
    }
    static PadicScalar zero(long long prime) { return PadicScalar(Rational(0), prime); }
    static PadicScalar one(long long prime) { return PadicScalar(Rational(1), prime); }
    /// p^e as a scalar (e may be negative).
    static PadicScalar p_power(long long exponent, long long prime);

    const Rational& value() const { return value_; }
    long long prime() const { return prime_; }
    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }
    bool is_zero() const { return value_ == 0; }

    PadicScalar operator+(const PadicScalar& rhs) const;
    PadicScalar operator-(const PadicScalar& rhs) const;
    PadicScalar operator*(const PadicScalar& rhs) const;
    PadicScalar operator/(const PadicScalar& rhs) const;
    PadicScalar operator-() const;
    PadicScalar invert() const;

    friend bool operator==(const PadicScalar& a, const PadicScalar& b) {
        return a.prime_ == b.prime_ && a.value_ == b.value_;
    }

    std::string str() const { return format_rational(value_); }

private:
    struct unchecked_t {};
    PadicScalar(Rational value, long long prime, unchecked_t) : value_(std::move(value)), prime_(prime) {}
    void check_prime(const PadicScalar& rhs) const;

    Rational value_;
    long long prime_;
};

/// v_p(x) = v_p(num) - v_p(den); nullopt encodes +infinity (x = 0).
std::optional<long long> valuation(const PadicScalar& x);

/// |x|_p = p^(-v_p(x)) as an exact PMagnitude; Zero for x = 0.
PMagnitude abs(const PadicScalar& x);

/// |q|_p for a bare rational.
PMagnitude rational_abs(const Rational& q, long long p);

/// Exact ordering of a magnitude against 1/eps (the ">" test in every
/// pseudospectrum definition). Finite(e) compares p^e * eps against 1 in
/// integer arithmetic; Infinite is greater than everything, Zero less.
std::strong_ordering compare_vs_inverse_epsilon(const PMagnitude& m, const Epsilon& eps, long long p);

}  // namespace ultraspec
