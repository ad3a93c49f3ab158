#include "ultraspec/spectra.hpp"

#include <algorithm>
#include <set>

namespace ultraspec {

namespace {

BigInt eval_int(const std::vector<BigInt>& coeffs, const BigInt& x) {
    BigInt acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rational eval_int_rational(const std::vector<BigInt>& coeffs, const Rational& x) {
    Rational acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

std::vector<BigInt> derivative_int(const std::vector<BigInt>& coeffs) {
    std::vector<BigInt> out;
    for (std::size_t i = 1; i < coeffs.size(); ++i) out.push_back(coeffs[i] * BigInt(i));
    return out;
}

long long rational_valuation(const Rational& q, const BigInt& p) {
    return int_valuation(numerator(q), p) - int_valuation(denominator(q), p);
}

// Least non-negative representative of a p-integral rational mod p^N.
BigInt reduce_mod_power(const Rational& x, const BigInt& p, long long n_digits) {
    const BigInt modulus = int_pow(p, n_digits);
    const BigInt num = mod_reduce(numerator(x), modulus);
    return mod_reduce(num * mod_inverse(denominator(x), modulus), modulus);
}

}  // namespace

std::vector<std::pair<PadicScalar, long long>> rational_roots(const RationalPoly& f) {
    if (f.is_zero()) throw Error("rational_roots of the zero polynomial");
    const long long p = f.prime();
    std::vector<std::pair<PadicScalar, long long>> out;
    if (f.degree() == 0) return out;

    std::vector<BigInt> g = f.primitive_integer();
    // Strip lambda^k: k zero roots.
    long long zero_mult = 0;
    while (g[0] == 0) {
        g.erase(g.begin());
        ++zero_mult;
    }
    if (zero_mult > 0) out.emplace_back(PadicScalar::zero(p), zero_mult);

    if (g.size() > 1) {
        const std::vector<BigInt> num_divs = divisors(abs(g.front()));
        const std::vector<BigInt> den_divs = divisors(abs(g.back()));
        RationalPoly work({}, p);
        {
            std::vector<Rational> cs;
            cs.reserve(g.size());
            for (const auto& c : g) cs.emplace_back(c);
            work = RationalPoly(std::move(cs), p);
        }
        const BigInt at_one = eval_int(g, 1);
        const BigInt at_minus_one = eval_int(g, -1);
        // root u/v (reduced) needs (u - v) | f(1) and (u + v) | f(-1); the two
        // divisibility filters kill almost every candidate pair cheaply.
        auto is_root = [&](const BigInt& u, const BigInt& v) {
            if (at_one != 0 && u != v && (u - v != 0) && at_one % (u - v) != 0) return false;
            if (at_minus_one != 0 && (u + v != 0) && at_minus_one % (u + v) != 0) return false;
            // integer Horner: f(u/v) * v^deg
            BigInt acc = g.back();
            for (std::size_t k = g.size() - 1; k-- > 0;) acc = acc * u + g[k] * int_pow(v, g.size() - 1 - k);
            return acc == 0;
        };
        for (const auto& uv : num_divs)
            for (const auto& v : den_divs) {
                if (gcd(uv, v) != 1) continue;
                for (const BigInt& u : {BigInt(uv), BigInt(-uv)}) {
                    if (!is_root(u, v)) continue;
                    const Rational r = make_rational(u, v);
                    long long mult = 0;
                    const RationalPoly linear({-r, Rational(1)}, p);
                    while (true) {
                        auto [q, rem] = work.divrem(linear);
                        if (!rem.is_zero()) break;
                        work = std::move(q);
                        ++mult;
                    }
                    if (mult > 0) out.emplace_back(PadicScalar(r, p), mult);
                }
            }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first.value() < b.first.value(); });
    return out;
}

std::vector<NewtonSegment> newton_polygon(const RationalPoly& f) {
    if (f.is_zero() || f.coeff(0) == 0)
        throw Error("newton_polygon requires f(0) != 0 (factor out zero roots first)");
    const BigInt p = f.prime();
    // Points (i, v_p(c_i)) for nonzero coefficients.
    std::vector<std::pair<long long, long long>> pts;
    for (long long i = 0; i <= f.degree(); ++i) {
        const Rational c = f.coeff(i);
        if (c != 0) pts.emplace_back(i, rational_valuation(c, p));
    }
    // Lower convex hull, left to right: keep vertices where the slope strictly increases.
    std::vector<std::pair<long long, long long>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull.back();
            // slope(a,b) >= slope(a,pt)  <=>  (b.v - a.v)(pt.i - a.i) >= (pt.v - a.v)(b.i - a.i)
            const BigInt lhs = BigInt(b.second - a.second) * BigInt(pt.first - a.first);
            const BigInt rhs = BigInt(pt.second - a.second) * BigInt(b.first - a.first);
            if (lhs >= rhs)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }
    std::vector<NewtonSegment> out;
    for (std::size_t k = 1; k < hull.size(); ++k) {
        const long long di = hull[k].first - hull[k - 1].first;
        const long long dv = hull[k].second - hull[k - 1].second;
        out.push_back({make_rational(dv, di), di});
    }
    return out;
}

BigInt hensel_lift(const RationalPoly& f, const BigInt& seed, long long precision) {
    if (precision < 1) throw Error("hensel_lift requires precision >= 1");
    const BigInt p = f.prime();
    const std::vector<BigInt> g = f.primitive_integer();
    const std::vector<BigInt> dg = derivative_int(g);

    const BigInt f_seed = eval_int(g, seed);
    if (mod_reduce(f_seed, p) != 0)
        throw HenselConditionFailed("f(seed) != 0 mod p");
    const BigInt df_seed = eval_int(dg, seed);
    if (mod_reduce(df_seed, p) == 0) {
        const std::string mag =
            df_seed == 0 ? "0" : "p^" + std::to_string(-int_valuation(df_seed, p));
        throw HenselConditionFailed("f'(seed) is not a unit mod p (|f'(seed)|_p = " + mag + ")");
    }

    // Newton iteration with precision doubling.
    BigInt x = mod_reduce(seed, p);
    long long k = 1;
    while (k < precision) {
        k = std::min(2 * k, precision);
        const BigInt modulus = int_pow(p, k);
        const BigInt fx = mod_reduce(eval_int(g, x), modulus);
        const BigInt dfx = mod_reduce(eval_int(dg, x), modulus);
        x = mod_reduce(x - fx * mod_inverse(dfx, modulus), modulus);
    }
    const BigInt modulus = int_pow(p, precision);
    if (mod_reduce(eval_int(g, x), modulus) != 0) throw Error("hensel_lift verification failed");
    return x;
}

namespace {

struct RootSearch {
    const std::vector<BigInt>& g;
    std::vector<BigInt> dg;
    BigInt p;
    long long precision;
    long long depth_cap;
    std::set<BigInt> found;  // representatives mod p^precision
    bool complete = true;

    RootSearch(const std::vector<BigInt>& g_, BigInt p_, long long n_digits)
        : g(g_), dg(derivative_int(g_)), p(std::move(p_)), precision(n_digits),
          depth_cap(2 * n_digits + 16) {}

    // Exact Newton refinement from x0; valid once |g(x0)| < |g'(x0)|^2.
    void refine_and_record(const Rational& x0) {
        Rational x = x0;
        for (int iter = 0; iter < 200; ++iter) {
            const Rational fx = eval_int_rational(g, x);
            if (fx == 0) throw Error("unexpected rational root in p-adic search");
            const Rational dfx = eval_int_rational(dg, x);
            const long long e = rational_valuation(fx, p);
            const long long b = rational_valuation(dfx, p);
            if (e - b >= precision) {
                found.insert(reduce_mod_power(x, p, precision));
                return;
            }
            x -= fx / dfx;
        }
        throw Error("p-adic Newton refinement did not converge");
    }

    // r is a residue mod p^k with g(r) = 0 mod p^k.
    void explore(const BigInt& r, long long k) {
        const BigInt gr = eval_int(g, r);
        const BigInt dgr = eval_int(dg, r);
        if (gr == 0) throw Error("unexpected rational root in p-adic search");
        const long long a = int_valuation(gr, p);
        if (dgr != 0) {
            const long long b = int_valuation(dgr, p);
            // Unique root in this residue class once a >= 2b+1 and k >= b+1.
            if (a >= 2 * b + 1 && k >= b + 1) {
                refine_and_record(Rational(r));
                return;
            }
        }
        if (k >= depth_cap) {
            complete = false;
            return;
        }
        const BigInt pk = int_pow(p, k);
        const BigInt pk1 = pk * p;
        for (BigInt t = 0; t < p; ++t) {
            const BigInt r2 = r + t * pk;
            if (mod_reduce(eval_int(g, r2), pk1) == 0) explore(r2, k + 1);
        }
    }
};

// Coefficients of f(p^s * mu), primitivized; bijects roots of valuation s onto units.
std::vector<BigInt> scale_roots_primitive(const RationalPoly& f, long long s) {
    const Rational ps = s >= 0 ? Rational(int_pow(BigInt(f.prime()), s))
                               : make_rational(1, int_pow(BigInt(f.prime()), -s));
    std::vector<Rational> coeffs;
    Rational power(1);
    for (long long k = 0; k <= f.degree(); ++k) {
        coeffs.push_back(f.coeff(k) * power);
        power *= ps;
    }
    return RationalPoly(std::move(coeffs), f.prime()).primitive_integer();
}

}  // namespace

SpectrumResult spectrum(const RationalMatrix& a, const RationalMatrix& m, long long precision) {
    if (precision < 1) throw Error("spectrum requires precision >= 1");
    const long long p = a.prime();
    const RationalPoly f = char_poly(a, m);  // throws SingularPencil

    SpectrumResult result;
    result.degree = f.degree();
    result.infinite_eigenvalue = f.degree() < a.n();

    for (const auto& [g, mult] : f.squarefree_decomposition()) {
        // Exact rational roots first; g is square-free so each is simple in g.
        RationalPoly h = g;
        for (const auto& [root, root_mult] : rational_roots(g)) {
            (void)root_mult;
            result.rational_points.emplace_back(root, mult);
            h = h.divrem(RationalPoly({-root.value(), Rational(1)}, p)).first;
        }
        if (h.degree() < 1) continue;

        // Q_p-irrational roots: Newton polygon valuations, then residue search.
        long long found_here = 0;
        bool all_complete = true;
        for (const auto& seg : newton_polygon(h)) {
            const Rational s = -seg.slope;
            if (denominator(s) != 1) continue;  // non-integer valuation: no Q_p roots on this segment
            const long long sv = static_cast<long long>(numerator(s));
            const std::vector<BigInt> gs = scale_roots_primitive(h, sv);
            RootSearch search(gs, BigInt(p), precision);
            for (BigInt r = 1; r < p; ++r)
                if (mod_reduce(eval_int(gs, r), BigInt(p)) == 0) search.explore(r, 1);
            for (const auto& unit : search.found) {
                result.lifted_points.push_back({unit, sv, precision, mult});
                ++found_here;
            }
            all_complete = all_complete && search.complete;
        }
        if (found_here < h.degree())
            result.unresolved_factors.push_back({h, mult, found_here, all_complete});
    }

    std::sort(result.rational_points.begin(), result.rational_points.end(),
              [](const auto& x, const auto& y) { return x.first.value() < y.first.value(); });
    std::sort(result.lifted_points.begin(), result.lifted_points.end(), [](const auto& x, const auto& y) {
        return x.valuation != y.valuation ? x.valuation < y.valuation : x.unit < y.unit;
    });
    return result;
}

}  // namespace ultraspec
