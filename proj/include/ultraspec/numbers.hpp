#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "ultraspec/errors.hpp"

namespace ultraspec {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// num/den as a canonical rational (den > 0, gcd = 1). Throws DivisionByZero on den = 0.
Rational make_rational(BigInt num, BigInt den);

/// Parses "a/b" or "a" with optional sign, arbitrary-precision decimal digits.
Rational parse_rational(const std::string& text);

/// Canonical "a/b" (or "a" when the denominator is 1).
std::string format_rational(const Rational& q);

/// p^e for e >= 0.
BigInt int_pow(const BigInt& base, long long exponent);

/// Exact multiplicity of p in n. Precondition: n != 0, p >= 2.
long long int_valuation(BigInt n, const BigInt& p);

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// Validates that p is a prime that fits the toolkit (2 <= p < 2^63). Throws Error otherwise.
void require_prime(long long p);

/// a^(-1) mod m for gcd(a, m) = 1. Throws DivisionByZero otherwise.
BigInt mod_inverse(const BigInt& a, const BigInt& m);

/// Least non-negative residue.
BigInt mod_reduce(const BigInt& a, const BigInt& m);

/// Full prime factorization of n > 0 as (prime, exponent) pairs, ascending.
/// Trial division for small factors, Brent-Pollard rho above that.
std::vector<std::pair<BigInt, long long>> factorize(BigInt n);

/// All positive divisors of n > 0, unsorted.
std::vector<BigInt> divisors(const BigInt& n);

}  // namespace ultraspec
