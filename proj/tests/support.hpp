#pragma once

// Shared test helpers: deterministic generators, independent oracles, and the
// closed-form norm formulas of the built-in fixtures.

#include <functional>
#include <set>

#include "ultraspec/io.hpp"

namespace ultraspec::testing {

inline Rational rand_rational(SplitMix64& rng, long long p) {
    const long long num = rng.next_in(-40, 40);
    switch (rng.next() % 3) {
        case 0:
            return Rational(num);
        case 1:
            return make_rational(num, rng.next_in(1, 12));
        default:
            return make_rational(num, int_pow(BigInt(p), rng.next_in(1, 3)));
    }
}

inline PadicScalar rand_scalar(SplitMix64& rng, long long p) {
    return PadicScalar(rand_rational(rng, p), p);
}

inline RationalMatrix rand_matrix(SplitMix64& rng, long long n, long long p) {
    RationalMatrix m(n, p);
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) m.set(i, j, rand_scalar(rng, p));
    return m;
}

inline RationalMatrix rand_invertible(SplitMix64& rng, long long n, long long p) {
    for (;;) {
        RationalMatrix m = rand_matrix(rng, n, p);
        if (is_invertible(m)) return m;
    }
}

/// B * (A - lambda M)^(-1) * C by plain elimination; the route independent of
/// the symbolic resolvent.
inline RationalMatrix resolvent_by_elimination(const RationalMatrix& a, const RationalMatrix& m,
                                               const RationalMatrix& b, const RationalMatrix& c,
                                               const PadicScalar& lambda) {
    return b * inverse_at(pencil_at(a, m, lambda)) * c;
}

/// Deterministic grid of at least `count` distinct rational points: integer
/// sweep plus p-power shells around the given centers (insertion order).
inline std::vector<PadicScalar> deterministic_grid(long long p, const std::vector<Rational>& centers,
                                                   std::size_t count) {
    std::vector<PadicScalar> out;
    std::set<Rational> seen;
    auto push = [&](const Rational& q) {
        if (seen.insert(q).second) out.emplace_back(q, p);
    };
    for (const Rational& c : centers)
        for (long long j = -4; j <= 6; ++j)
            for (long long u = 1; u <= 4; ++u)
                push(c + Rational(u) * PMagnitude::finite(j).to_rational(p));
    for (long long k = -40; k <= 40; ++k) push(Rational(k));
    for (long long k = 1; k <= 30; ++k) {
        push(make_rational(k, p + 1));
        push(make_rational(2 * k + 1, p));
    }
    long long extra = 1;
    while (out.size() < count) push(Rational(1000 + extra++));
    return out;
}

/// Closed-form norm oracle: rational lambda -> exact magnitude (Infinite at
/// the fixture's spectrum points).
using NormOracle = std::function<PMagnitude(const Rational&)>;

inline PMagnitude magnitude_max(const PMagnitude& a, const PMagnitude& b) {
    return std::max(a, b);
}

/// max{ 1/|1-x|, |3|/|(1-x)^2| } over Q_p  (upper-triangular 2x2 with a 3).
inline NormOracle jordan_norm_oracle(long long p) {
    return [p](const Rational& x) {
        const Rational d = 1 - x;
        if (d == 0) return PMagnitude::infinite();
        const PMagnitude one = PMagnitude::finite(0);
        return magnitude_max(one / rational_abs(d, p), rational_abs(Rational(3), p) / rational_abs(d * d, p));
    };
}

/// max{ 1/|x(2-x)|, |1-x|/|x(2-x)| } over Q_p  (all-ones 2x2).
inline NormOracle all_ones_norm_oracle(long long p) {
    return [p](const Rational& x) {
        const Rational d = x * (2 - x);
        if (d == 0) return PMagnitude::infinite();
        const PMagnitude den = rational_abs(d, p);
        return magnitude_max(PMagnitude::finite(0) / den, rational_abs(1 - x, p) / den);
    };
}

/// max{ |8x|/|(1-2x)(1-x)|, 1/|1-2x|, |4|/|x-1| }  (first pencil example).
inline NormOracle final_i_norm_oracle(long long p) {
    return [p](const Rational& x) {
        const Rational d1 = 1 - 2 * x;
        const Rational d2 = 1 - x;
        if (d1 == 0 || d2 == 0) return PMagnitude::infinite();
        PMagnitude best = rational_abs(8 * x, p) / rational_abs(d1 * d2, p);
        best = magnitude_max(best, PMagnitude::finite(0) / rational_abs(d1, p));
        return magnitude_max(best, rational_abs(Rational(4), p) / rational_abs(x - 1, p));
    };
}

/// |1-2x| / |x(2x-3)|  (second pencil example).
inline NormOracle final_ii_norm_oracle(long long p) {
    return [p](const Rational& x) {
        const Rational d = x * (2 * x - 3);
        if (d == 0) return PMagnitude::infinite();
        return rational_abs(1 - 2 * x, p) / rational_abs(d, p);
    };
}

/// 1 / |2(x-1)|  (third pencil example).
inline NormOracle final_iii_norm_oracle(long long p) {
    return [p](const Rational& x) {
        const Rational d = 2 * (x - 1);
        if (d == 0) return PMagnitude::infinite();
        return PMagnitude::finite(0) / rational_abs(d, p);
    };
}

inline Family fixture_family(const std::string& name) {
    return make_family(builtin_fixtures().at(name));
}

inline Epsilon fixture_epsilon(const std::string& name) {
    return problem_epsilon(builtin_fixtures().at(name));
}

}  // namespace ultraspec::testing
