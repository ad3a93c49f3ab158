#include "ultraspec/padic.hpp"

namespace ultraspec {

long long PMagnitude::exponent() const {
    if (kind_ != Kind::Finite) throw Error("exponent() on a non-finite magnitude");
    return exponent_;
}

Rational PMagnitude::to_rational(long long p) const {
    switch (kind_) {
        case Kind::Zero:
            return Rational(0);
        case Kind::Finite:
            return exponent_ >= 0 ? Rational(int_pow(BigInt(p), exponent_))
                                  : make_rational(1, int_pow(BigInt(p), -exponent_));
        case Kind::Infinite:
            break;
    }
    throw Error("infinite magnitude has no rational value");
}

std::strong_ordering operator<=>(const PMagnitude& a, const PMagnitude& b) {
    auto rank = [](PMagnitude::Kind k) { return k == PMagnitude::Kind::Zero ? 0 : k == PMagnitude::Kind::Finite ? 1 : 2; };
    if (rank(a.kind_) != rank(b.kind_)) return rank(a.kind_) <=> rank(b.kind_);
    if (a.kind_ == PMagnitude::Kind::Finite) return a.exponent_ <=> b.exponent_;
    return std::strong_ordering::equal;
}

PMagnitude PMagnitude::operator*(const PMagnitude& rhs) const {
    if (is_zero() || rhs.is_zero()) {
        if (is_infinite() || rhs.is_infinite()) throw Error("0 * infinity is undefined");
        return zero();
    }
    if (is_infinite() || rhs.is_infinite()) return infinite();
    return finite(exponent_ + rhs.exponent_);
}

PMagnitude PMagnitude::operator/(const PMagnitude& rhs) const {
    if (rhs.is_zero()) throw DivisionByZero("magnitude division by zero");
    if (is_infinite() || rhs.is_infinite()) throw Error("magnitude division with infinity");
    if (is_zero()) return zero();
    return finite(exponent_ - rhs.exponent_);
}

std::string PMagnitude::str() const {
    switch (kind_) {
        case Kind::Zero:
            return "0";
        case Kind::Finite:
            return "p^" + std::to_string(exponent_);
        case Kind::Infinite:
            return "inf";
    }
    return "";
}

Epsilon::Epsilon(Rational value) : value_(std::move(value)) {
    if (value_ <= 0) throw Error("epsilon must be > 0, got " + format_rational(value_));
}

Epsilon Epsilon::scaled_by(const PMagnitude& factor, long long p) const {
    if (!factor.is_finite()) throw Error("epsilon scale factor must be finite and nonzero");
    return Epsilon(value_ * factor.to_rational(p));
}

Epsilon Epsilon::scaled_by(const Rational& factor) const {
    return Epsilon(value_ * factor);
}

PadicScalar::PadicScalar(Rational value, long long prime) : value_(std::move(value)), prime_(prime) {
    require_prime(prime);
}

PadicScalar PadicScalar::p_power(long long exponent, long long prime) {
    require_prime(prime);
    Rational v = exponent >= 0 ? Rational(int_pow(BigInt(prime), exponent))
                               : make_rational(1, int_pow(BigInt(prime), -exponent));
    return PadicScalar(std::move(v), prime, unchecked_t{});
}

void PadicScalar::check_prime(const PadicScalar& rhs) const {
    if (prime_ != rhs.prime_)
        throw PrimeMismatch("scalars over Q_" + std::to_string(prime_) + " and Q_" + std::to_string(rhs.prime_) +
                            " do not interoperate");
}

PadicScalar PadicScalar::operator+(const PadicScalar& rhs) const {
    check_prime(rhs);
    return PadicScalar(value_ + rhs.value_, prime_, unchecked_t{});
}

PadicScalar PadicScalar::operator-(const PadicScalar& rhs) const {
    check_prime(rhs);
    return PadicScalar(value_ - rhs.value_, prime_, unchecked_t{});
}

PadicScalar PadicScalar::operator*(const PadicScalar& rhs) const {
    check_prime(rhs);
    return PadicScalar(value_ * rhs.value_, prime_, unchecked_t{});
}

PadicScalar PadicScalar::operator/(const PadicScalar& rhs) const {
    check_prime(rhs);
    if (rhs.is_zero()) throw DivisionByZero();
    return PadicScalar(value_ / rhs.value_, prime_, unchecked_t{});
}

PadicScalar PadicScalar::operator-() const {
    return PadicScalar(-value_, prime_, unchecked_t{});
}

PadicScalar PadicScalar::invert() const {
    if (is_zero()) throw DivisionByZero();
    return PadicScalar(1 / value_, prime_, unchecked_t{});
}

std::optional<long long> valuation(const PadicScalar& x) {
    if (x.is_zero()) return std::nullopt;
    const BigInt p = x.prime();
    return int_valuation(x.numerator(), p) - int_valuation(x.denominator(), p);
}

PMagnitude abs(const PadicScalar& x) {
    auto v = valuation(x);
    if (!v) return PMagnitude::zero();
    return PMagnitude::finite(-*v);
}

PMagnitude rational_abs(const Rational& q, long long p) {
    if (q == 0) return PMagnitude::zero();
    const BigInt bp = p;
    return PMagnitude::finite(int_valuation(denominator(q), bp) - int_valuation(numerator(q), bp));
}

std::strong_ordering compare_vs_inverse_epsilon(const PMagnitude& m, const Epsilon& eps, long long p) {
    switch (m.kind()) {
        case PMagnitude::Kind::Zero:
            return std::strong_ordering::less;
        case PMagnitude::Kind::Infinite:
            return std::strong_ordering::greater;
        case PMagnitude::Kind::Finite:
            break;
    }
    // p^e > 1/eps  <=>  p^e * eps > 1, entirely in integers.
    const long long e = m.exponent();
    BigInt lhs = numerator(eps.value());
    BigInt rhs = denominator(eps.value());
    if (e >= 0)
        lhs *= int_pow(BigInt(p), e);
    else
        rhs *= int_pow(BigInt(p), -e);
    return lhs.compare(rhs) <=> 0;
}

}  // namespace ultraspec
