#include "ultraspec/matrix.hpp"

#include <sstream>

namespace ultraspec {

RationalMatrix::RationalMatrix(long long n, long long prime) : n_(n), prime_(prime) {
    require_prime(prime);
    if (n < 1 || n > kMaxDimension)
        throw DimensionMismatch("matrix dimension must be in [1, " + std::to_string(kMaxDimension) + "], got " +
                                std::to_string(n));
    entries_.assign(static_cast<std::size_t>(n * n), PadicScalar::zero(prime));
}

RationalMatrix RationalMatrix::identity(long long n, long long prime) {
    RationalMatrix m(n, prime);
    for (long long i = 0; i < n; ++i) m.set(i, i, PadicScalar::one(prime));
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows, long long prime) {
    const long long n = static_cast<long long>(rows.size());
    RationalMatrix m(n, prime);
    for (long long i = 0; i < n; ++i) {
        if (static_cast<long long>(rows[static_cast<std::size_t>(i)].size()) != n)
            throw DimensionMismatch("matrix rows must all have length n");
        for (long long j = 0; j < n; ++j)
            m.set(i, j, PadicScalar(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], prime));
    }
    return m;
}

RationalMatrix RationalMatrix::from_strings(const std::vector<std::vector<std::string>>& rows, long long prime) {
    std::vector<std::vector<Rational>> parsed;
    parsed.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<Rational> r;
        r.reserve(row.size());
        for (const auto& s : row) r.push_back(parse_rational(s));
        parsed.push_back(std::move(r));
    }
    return from_rows(parsed, prime);
}

const PadicScalar& RationalMatrix::at(long long i, long long j) const {
    return entries_[static_cast<std::size_t>(i * n_ + j)];
}

void RationalMatrix::set(long long i, long long j, const PadicScalar& v) {
    if (v.prime() != prime_) throw PrimeMismatch("entry prime differs from matrix prime");
    entries_[static_cast<std::size_t>(i * n_ + j)] = v;
}

void RationalMatrix::check_compatible(const RationalMatrix& rhs) const {
    if (prime_ != rhs.prime_) throw PrimeMismatch("matrices over different primes");
    if (n_ != rhs.n_) throw DimensionMismatch("matrices of different dimension");
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& rhs) const {
    check_compatible(rhs);
    RationalMatrix out(n_, prime_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] + rhs.entries_[k];
    return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& rhs) const {
    check_compatible(rhs);
    RationalMatrix out(n_, prime_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] - rhs.entries_[k];
    return out;
}

RationalMatrix RationalMatrix::operator-() const {
    RationalMatrix out(n_, prime_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = -entries_[k];
    return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
    check_compatible(rhs);
    RationalMatrix out(n_, prime_);
    for (long long i = 0; i < n_; ++i)
        for (long long j = 0; j < n_; ++j) {
            Rational acc(0);
            for (long long k = 0; k < n_; ++k) acc += at(i, k).value() * rhs.at(k, j).value();
            out.set(i, j, PadicScalar(std::move(acc), prime_));
        }
    return out;
}

RationalMatrix RationalMatrix::scaled(const PadicScalar& c) const {
    if (c.prime() != prime_) throw PrimeMismatch("scalar prime differs from matrix prime");
    RationalMatrix out(n_, prime_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] * c;
    return out;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.n_ == b.n_ && a.prime_ == b.prime_ && a.entries_ == b.entries_;
}

bool RationalMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

bool RationalMatrix::is_identity() const {
    for (long long i = 0; i < n_; ++i)
        for (long long j = 0; j < n_; ++j)
            if (at(i, j).value() != (i == j ? 1 : 0)) return false;
    return true;
}

std::string RationalMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (long long i = 0; i < n_; ++i) {
        os << (i ? "; " : "");
        for (long long j = 0; j < n_; ++j) os << (j ? " " : "") << at(i, j).str();
    }
    os << "]";
    return os.str();
}

PMagnitude sup_norm(const RationalMatrix& a) {
    PMagnitude best = PMagnitude::zero();
    for (long long i = 0; i < a.n(); ++i)
        for (long long j = 0; j < a.n(); ++j) best = std::max(best, abs(a.at(i, j)));
    return best;
}

PMagnitude sup_norm(const PadicVector& v, long long prime) {
    PMagnitude best = PMagnitude::zero();
    for (const auto& x : v) {
        if (x.prime() != prime) throw PrimeMismatch("vector entry prime mismatch");
        best = std::max(best, abs(x));
    }
    return best;
}

namespace {

// Gaussian elimination over Q; returns det. Operates on a copy of raw rationals.
Rational det_rational(const RationalMatrix& a) {
    const long long n = a.n();
    std::vector<Rational> m;
    m.reserve(static_cast<std::size_t>(n * n));
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) m.push_back(a.at(i, j).value());
    auto at = [&](long long i, long long j) -> Rational& { return m[static_cast<std::size_t>(i * n + j)]; };
    Rational det(1);
    for (long long col = 0; col < n; ++col) {
        long long pivot = -1;
        for (long long r = col; r < n; ++r)
            if (at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            for (long long j = col; j < n; ++j) std::swap(at(pivot, j), at(col, j));
            det = -det;
        }
        det *= at(col, col);
        for (long long r = col + 1; r < n; ++r) {
            if (at(r, col) == 0) continue;
            Rational f = at(r, col) / at(col, col);
            for (long long j = col; j < n; ++j) at(r, j) -= f * at(col, j);
        }
    }
    return det;
}

}  // namespace

PadicScalar determinant(const RationalMatrix& a) {
    return PadicScalar(det_rational(a), a.prime());
}

RationalMatrix adjugate(const RationalMatrix& a) {
    const long long n = a.n();
    RationalMatrix out(n, a.prime());
    if (n == 1) {
        out.set(0, 0, PadicScalar::one(a.prime()));
        return out;
    }
    RationalMatrix minor(n - 1, a.prime());
    for (long long i = 0; i < n; ++i) {
        for (long long j = 0; j < n; ++j) {
            long long mr = 0;
            for (long long r = 0; r < n; ++r) {
                if (r == i) continue;
                long long mc = 0;
                for (long long c = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor.set(mr, mc, a.at(r, c));
                    ++mc;
                }
                ++mr;
            }
            PadicScalar cof = determinant(minor);
            if ((i + j) % 2 != 0) cof = -cof;
            out.set(j, i, cof);  // transpose of the cofactor matrix
        }
    }
    return out;
}

RationalMatrix inverse_at(const RationalMatrix& a) {
    const long long n = a.n();
    // Gauss-Jordan on [A | I].
    std::vector<Rational> m;
    m.reserve(static_cast<std::size_t>(n * 2 * n));
    for (long long i = 0; i < n; ++i) {
        for (long long j = 0; j < n; ++j) m.push_back(a.at(i, j).value());
        for (long long j = 0; j < n; ++j) m.push_back(Rational(i == j ? 1 : 0));
    }
    const long long w = 2 * n;
    auto at = [&](long long i, long long j) -> Rational& { return m[static_cast<std::size_t>(i * w + j)]; };
    for (long long col = 0; col < n; ++col) {
        long long pivot = -1;
        for (long long r = col; r < n; ++r)
            if (at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw SingularMatrix("matrix is singular");
        if (pivot != col)
            for (long long j = 0; j < w; ++j) std::swap(at(pivot, j), at(col, j));
        Rational inv = 1 / at(col, col);
        for (long long j = 0; j < w; ++j) at(col, j) *= inv;
        for (long long r = 0; r < n; ++r) {
            if (r == col || at(r, col) == 0) continue;
            Rational f = at(r, col);
            for (long long j = 0; j < w; ++j) at(r, j) -= f * at(col, j);
        }
    }
    RationalMatrix out(n, a.prime());
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) out.set(i, j, PadicScalar(at(i, n + j), a.prime()));
    return out;
}

bool is_invertible(const RationalMatrix& a) {
    return det_rational(a) != 0;
}

PadicVector mat_vec(const RationalMatrix& a, const PadicVector& v) {
    if (static_cast<long long>(v.size()) != a.n()) throw DimensionMismatch("matrix-vector dimension mismatch");
    PadicVector out;
    out.reserve(v.size());
    for (long long i = 0; i < a.n(); ++i) {
        Rational acc(0);
        for (long long j = 0; j < a.n(); ++j) acc += a.at(i, j).value() * v[static_cast<std::size_t>(j)].value();
        out.push_back(PadicScalar(std::move(acc), a.prime()));
    }
    return out;
}

RationalMatrix pencil_at(const RationalMatrix& a, const RationalMatrix& m, const PadicScalar& lambda) {
    return a - m.scaled(lambda);
}

bool commute(const RationalMatrix& a, const RationalMatrix& b) {
    return a * b == b * a;
}

}  // namespace ultraspec
