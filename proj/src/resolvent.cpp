#include "ultraspec/resolvent.hpp"

namespace ultraspec {

PolyMatrix::PolyMatrix(long long n, long long prime) : n_(n), prime_(prime) {
    require_prime(prime);
    if (n < 1 || n > kMaxDimension) throw DimensionMismatch("polynomial matrix dimension out of range");
    entries_.assign(static_cast<std::size_t>(n * n), RationalPoly::zero(prime));
}

const RationalPoly& PolyMatrix::at(long long i, long long j) const {
    return entries_[static_cast<std::size_t>(i * n_ + j)];
}

void PolyMatrix::set(long long i, long long j, RationalPoly p) {
    if (p.prime() != prime_) throw PrimeMismatch("polynomial prime differs from matrix prime");
    entries_[static_cast<std::size_t>(i * n_ + j)] = std::move(p);
}

RationalMatrix PolyMatrix::eval(const PadicScalar& lambda) const {
    RationalMatrix out(n_, prime_);
    for (long long i = 0; i < n_; ++i)
        for (long long j = 0; j < n_; ++j) out.set(i, j, at(i, j).eval(lambda));
    return out;
}

namespace {

void check_pencil_args(const RationalMatrix& a, const RationalMatrix& m) {
    if (a.prime() != m.prime()) throw PrimeMismatch("pencil matrices over different primes");
    if (a.n() != m.n()) throw DimensionMismatch("pencil matrices of different dimension");
}

}  // namespace

RationalPoly char_poly(const RationalMatrix& a, const RationalMatrix& m) {
    check_pencil_args(a, m);
    const long long n = a.n();
    const long long p = a.prime();
    // det(A - lambda*M) has degree <= n; n+1 exact evaluations determine it.
    std::vector<std::pair<Rational, Rational>> points;
    points.reserve(static_cast<std::size_t>(n) + 1);
    for (long long k = 0; k <= n; ++k) {
        PadicScalar lk(k, p);
        points.emplace_back(Rational(k), determinant(pencil_at(a, m, lk)).value());
    }
    RationalPoly f = RationalPoly::interpolate(points, p);
    if (f.is_zero()) throw SingularPencil("det(A - lambda*M) vanishes identically");
    return f;
}

SymbolicResolvent::SymbolicResolvent(RationalMatrix a, RationalMatrix m, RationalMatrix b, RationalMatrix c)
    : a_(std::move(a)), m_(std::move(m)), b_(std::move(b)), c_(std::move(c)),
      numerators_(a_.n(), a_.prime()), denominator_(char_poly(a_, m_)) {
    check_pencil_args(a_, b_);
    check_pencil_args(a_, c_);
    const long long n = a_.n();
    const long long p = a_.prime();
    // Each entry of adj(A - lambda*M) is a cofactor, degree <= n-1: recover the
    // polynomial matrix from n exact evaluations, then fold in B and C.
    std::vector<RationalMatrix> adj_samples;
    std::vector<Rational> nodes;
    adj_samples.reserve(static_cast<std::size_t>(n));
    for (long long k = 0; k < n; ++k) {
        PadicScalar lk(k, p);
        adj_samples.push_back(b_ * adjugate(pencil_at(a_, m_, lk)) * c_);
        nodes.emplace_back(k);
    }
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) {
            std::vector<std::pair<Rational, Rational>> points;
            points.reserve(nodes.size());
            for (long long k = 0; k < n; ++k)
                points.emplace_back(nodes[static_cast<std::size_t>(k)],
                                    adj_samples[static_cast<std::size_t>(k)].at(i, j).value());
            numerators_.set(i, j, RationalPoly::interpolate(points, p));
        }
}

RationalMatrix SymbolicResolvent::eval(const PadicScalar& lambda) const {
    PadicScalar d = denominator_.eval(lambda);
    if (d.is_zero()) throw SingularMatrix("resolvent evaluated at a spectrum point");
    RationalMatrix num = numerators_.eval(lambda);
    return num.scaled(d.invert());
}

SymbolicResolvent symbolic_resolvent(const RationalMatrix& a, const RationalMatrix& m, const RationalMatrix& b,
                                     const RationalMatrix& c) {
    return SymbolicResolvent(a, m, b, c);
}

}  // namespace ultraspec
