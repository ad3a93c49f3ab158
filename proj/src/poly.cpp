#include "ultraspec/poly.hpp"

#include <algorithm>

namespace ultraspec {

RationalPoly::RationalPoly(std::vector<Rational> coefficients, long long prime)
    : coeffs_(std::move(coefficients)), prime_(prime) {
    require_prime(prime);
    trim();
}

void RationalPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPoly RationalPoly::monomial(Rational c, long long degree, long long prime) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1, Rational(0));
    coeffs.back() = std::move(c);
    return RationalPoly(std::move(coeffs), prime);
}

RationalPoly RationalPoly::from_strings(const std::vector<std::string>& coeffs, long long prime) {
    std::vector<Rational> out;
    out.reserve(coeffs.size());
    for (const auto& s : coeffs) out.push_back(parse_rational(s));
    return RationalPoly(std::move(out), prime);
}

Rational RationalPoly::coeff(long long k) const {
    if (k < 0 || k > degree()) return Rational(0);
    return coeffs_[static_cast<std::size_t>(k)];
}

Rational RationalPoly::leading_coeff() const {
    if (is_zero()) return Rational(0);
    return coeffs_.back();
}

Rational RationalPoly::eval_rational(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

PadicScalar RationalPoly::eval(const PadicScalar& x) const {
    if (x.prime() != prime_) throw PrimeMismatch("polynomial and point have different primes");
    return PadicScalar(eval_rational(x.value()), prime_);
}

RationalPoly RationalPoly::operator+(const RationalPoly& rhs) const {
    if (prime_ != rhs.prime_) throw PrimeMismatch("polynomials over different primes");
    std::vector<Rational> out(std::max(coeffs_.size(), rhs.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
    return RationalPoly(std::move(out), prime_);
}

RationalPoly RationalPoly::operator-(const RationalPoly& rhs) const {
    return *this + (-rhs);
}

RationalPoly RationalPoly::operator-() const {
    std::vector<Rational> out = coeffs_;
    for (auto& c : out) c = -c;
    return RationalPoly(std::move(out), prime_);
}

RationalPoly RationalPoly::operator*(const RationalPoly& rhs) const {
    if (prime_ != rhs.prime_) throw PrimeMismatch("polynomials over different primes");
    if (is_zero() || rhs.is_zero()) return zero(prime_);
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return RationalPoly(std::move(out), prime_);
}

RationalPoly RationalPoly::scaled(const Rational& c) const {
    std::vector<Rational> out = coeffs_;
    for (auto& x : out) x *= c;
    return RationalPoly(std::move(out), prime_);
}

RationalPoly RationalPoly::derivative() const {
    if (degree() < 1) return zero(prime_);
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rational(static_cast<long long>(i));
    return RationalPoly(std::move(out), prime_);
}

std::pair<RationalPoly, RationalPoly> RationalPoly::divrem(const RationalPoly& divisor) const {
    if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (prime_ != divisor.prime_) throw PrimeMismatch("polynomials over different primes");
    std::vector<Rational> rem = coeffs_;
    const long long dn = divisor.degree();
    const Rational lead = divisor.leading_coeff();
    if (degree() < dn) return {zero(prime_), *this};
    std::vector<Rational> quot(static_cast<std::size_t>(degree() - dn) + 1, Rational(0));
    for (long long k = degree(); k >= dn; --k) {
        Rational c = rem[static_cast<std::size_t>(k)] / lead;
        if (c == 0) continue;
        quot[static_cast<std::size_t>(k - dn)] = c;
        for (long long j = 0; j <= dn; ++j)
            rem[static_cast<std::size_t>(k - dn + j)] -= c * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
    return {RationalPoly(std::move(quot), prime_), RationalPoly(std::move(rem), prime_)};
}

RationalPoly RationalPoly::gcd(RationalPoly a, RationalPoly b) {
    auto monic = [](RationalPoly f) {
        if (f.is_zero()) return f;
        return f.scaled(1 / f.leading_coeff());
    };
    while (!b.is_zero()) {
        RationalPoly r = a.divrem(b).second;
        a = std::move(b);
        b = monic(std::move(r));
    }
    return monic(std::move(a));
}

std::vector<std::pair<RationalPoly, long long>> RationalPoly::squarefree_decomposition() const {
    std::vector<std::pair<RationalPoly, long long>> out;
    if (degree() < 1) return out;
    RationalPoly d = gcd(*this, derivative());
    if (d.degree() == 0) {
        out.emplace_back(scaled(1 / leading_coeff()), 1);
        return out;
    }
    RationalPoly b = divrem(d).first;
    RationalPoly c = derivative().divrem(d).first;
    RationalPoly w = c - b.derivative();
    long long i = 1;
    while (b.degree() > 0) {
        RationalPoly a = gcd(b, w);
        if (a.degree() > 0) out.emplace_back(a, i);
        b = b.divrem(a).first;
        w = w.divrem(a).first - b.derivative();
        ++i;
    }
    return out;
}

RationalPoly RationalPoly::taylor_shift(const Rational& center) const {
    if (degree() < 1) return *this;
    std::vector<Rational> a = coeffs_;
    const long long n = degree();
    for (long long j = 0; j < n; ++j)
        for (long long i = n - 1; i >= j; --i)
            a[static_cast<std::size_t>(i)] += center * a[static_cast<std::size_t>(i + 1)];
    return RationalPoly(std::move(a), prime_);
}

std::vector<BigInt> RationalPoly::primitive_integer() const {
    if (is_zero()) throw Error("primitive form of the zero polynomial");
    BigInt l = 1;
    for (const auto& c : coeffs_) l = lcm(l, denominator(c));
    std::vector<BigInt> out;
    out.reserve(coeffs_.size());
    BigInt content = 0;
    for (const auto& c : coeffs_) {
        BigInt v = numerator(c) * (l / denominator(c));
        content = boost::multiprecision::gcd(content, v);
        out.push_back(std::move(v));
    }
    for (auto& v : out) v /= content;
    if (out.back() < 0)
        for (auto& v : out) v = -v;
    return out;
}

RationalPoly RationalPoly::interpolate(const std::vector<std::pair<Rational, Rational>>& points, long long prime) {
    RationalPoly acc = RationalPoly::zero(prime);
    for (std::size_t i = 0; i < points.size(); ++i) {
        RationalPoly basis = RationalPoly::constant(Rational(1), prime);
        Rational denom(1);
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            basis = basis * RationalPoly({-points[j].first, Rational(1)}, prime);
            denom *= points[i].first - points[j].first;
        }
        acc = acc + basis.scaled(points[i].second / denom);
    }
    return acc;
}

std::string RationalPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (long long k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        if (!out.empty()) out += c > 0 ? " + " : " - ";
        else if (c < 0) out += "-";
        Rational a = c < 0 ? Rational(-c) : c;
        if (a != 1 || k == 0) out += format_rational(a);
        if (k > 0) out += (a != 1 ? "*x" : "x");
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

}  // namespace ultraspec
