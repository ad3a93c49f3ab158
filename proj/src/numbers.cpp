#include "ultraspec/numbers.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <unordered_set>

namespace ultraspec {

Rational make_rational(BigInt num, BigInt den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

Rational parse_rational(const std::string& text) {
    auto bad = [&]() { return ParseError("invalid rational literal: '" + text + "'"); };
    if (text.empty()) throw bad();
    const auto slash = text.find('/');
    auto parse_int = [&](const std::string& part) {
        if (part.empty()) throw bad();
        const bool negative = part[0] == '-';
        std::size_t i = (part[0] == '+' || part[0] == '-') ? 1 : 0;
        if (i == part.size()) throw bad();
        for (std::size_t k = i; k < part.size(); ++k)
            if (part[k] < '0' || part[k] > '9') throw bad();
        BigInt v(part.substr(i));
        return negative ? BigInt(-v) : v;
    };
    if (slash == std::string::npos) return Rational(parse_int(text));
    if (slash + 1 >= text.size()) throw bad();
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in rational literal: '" + text + "'");
    return make_rational(std::move(num), std::move(den));
}

std::string format_rational(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

BigInt int_pow(const BigInt& base, long long exponent) {
    BigInt result = 1;
    BigInt b = base;
    long long e = exponent;
    while (e > 0) {
        if (e & 1) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

long long int_valuation(BigInt n, const BigInt& p) {
    if (n == 0) throw Error("int_valuation of 0 is infinite");
    long long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    const BigInt bn = n;
    // This witness set decides primality for all n < 3.3e24, well past 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        BigInt x = powm(BigInt(a), BigInt(d), bn);
        if (x == 1 || x == bn - 1) continue;
        bool composite = true;
        for (int i = 0; i < r - 1; ++i) {
            x = (x * x) % bn;
            if (x == bn - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

void require_prime(long long p) {
    static std::unordered_set<long long> known;
    static std::mutex known_mutex;
    if (p < 2) throw Error("p must be a prime >= 2, got " + std::to_string(p));
    {
        std::lock_guard<std::mutex> lock(known_mutex);
        if (known.count(p)) return;
    }
    if (!is_prime_u64(static_cast<std::uint64_t>(p)))
        throw Error("p must be prime, got " + std::to_string(p));
    std::lock_guard<std::mutex> lock(known_mutex);
    known.insert(p);
}

BigInt mod_reduce(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return r;
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    BigInt old_r = mod_reduce(a, m), r = m;
    BigInt old_s = 1, s = 0;
    while (r != 0) {
        BigInt q = old_r / r;
        BigInt tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) throw DivisionByZero("no modular inverse: gcd != 1");
    return mod_reduce(old_s, m);
}

namespace {

BigInt pollard_rho(const BigInt& n) {
    // Brent's cycle variant; n is odd, composite, not a prime power of a small prime.
    for (BigInt c = 1;; ++c) {
        BigInt x = 2, y = 2, d = 1;
        BigInt saved_x = x;
        long long power = 1, lam = 0;
        auto step = [&](BigInt v) { return (v * v + c) % n; };
        while (d == 1) {
            if (lam == power) {
                saved_x = y;
                power *= 2;
                lam = 0;
            }
            y = step(y);
            ++lam;
            d = gcd(abs(y - saved_x), n);
        }
        if (d != n) return d;
    }
}

bool probably_prime(const BigInt& n) {
    if (n <= std::numeric_limits<std::uint64_t>::max())
        return is_prime_u64(static_cast<std::uint64_t>(n));
    // Miller-Rabin with fixed witnesses; deterministic below 3.3e24 and
    // overwhelmingly reliable for the sizes this toolkit ever factors.
    BigInt d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        BigInt x = powm(BigInt(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < r - 1; ++i) {
            x = (x * x) % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

void factor_into(BigInt n, std::vector<std::pair<BigInt, long long>>& out) {
    if (n == 1) return;
    if (probably_prime(n)) {
        out.emplace_back(n, 1);
        return;
    }
    BigInt d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<BigInt, long long>> factorize(BigInt n) {
    if (n <= 0) throw Error("factorize expects n > 0");
    std::vector<std::pair<BigInt, long long>> out;
    for (long long q : {2ll, 3ll, 5ll, 7ll, 11ll, 13ll}) {
        long long e = 0;
        while (n % q == 0) {
            n /= q;
            ++e;
        }
        if (e > 0) out.emplace_back(BigInt(q), e);
    }
    for (BigInt q = 17; q * q <= n && q < 65536; q += 2) {
        long long e = 0;
        while (n % q == 0) {
            n /= q;
            ++e;
        }
        if (e > 0) out.emplace_back(q, e);
    }
    if (n > 1) {
        std::vector<std::pair<BigInt, long long>> rest;
        factor_into(n, rest);
        std::sort(rest.begin(), rest.end());
        for (std::size_t i = 0; i < rest.size();) {
            std::size_t j = i;
            long long e = 0;
            while (j < rest.size() && rest[j].first == rest[i].first) {
                e += rest[j].second;
                ++j;
            }
            out.emplace_back(rest[i].first, e);
            i = j;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BigInt> divisors(const BigInt& n) {
    auto factors = factorize(n);
    std::vector<BigInt> out{BigInt(1)};
    for (const auto& [q, e] : factors) {
        const std::size_t base = out.size();
        BigInt qk = 1;
        for (long long k = 1; k <= e; ++k) {
            qk *= q;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * qk);
        }
    }
    return out;
}

}  // namespace ultraspec
