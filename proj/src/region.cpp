#include "ultraspec/region.hpp"

#include <deque>
#include <functional>

namespace ultraspec {

bool ball_contains(const Ball& ball, const PadicScalar& x) {
    const PadicScalar diff = x - ball.center;
    if (diff.is_zero()) return true;
    return -(*valuation(diff)) <= -ball.radius_exponent;  // |x - c| <= p^(-r)
}

std::vector<Ball> subdivide(const Ball& ball) {
    const long long p = ball.center.prime();
    std::vector<Ball> out;
    out.reserve(static_cast<std::size_t>(p));
    const PadicScalar step = PadicScalar::p_power(ball.radius_exponent, p);
    PadicScalar offset = PadicScalar::zero(p);
    for (long long k = 0; k < p; ++k) {
        out.push_back({ball.center + offset, ball.radius_exponent + 1});
        offset = offset + step;
    }
    return out;
}

std::optional<PMagnitude> constancy_certificate(const RationalPoly& f, const Ball& ball) {
    if (f.is_zero()) return PMagnitude::zero();
    const long long p = f.prime();
    const RationalPoly shifted = f.taylor_shift(ball.center.value());
    const PMagnitude head = rational_abs(shifted.coeff(0), p);
    if (head.is_zero()) return std::nullopt;  // root at the center
    for (long long k = 1; k <= shifted.degree(); ++k) {
        const Rational c = shifted.coeff(k);
        if (c == 0) continue;
        const PMagnitude term = PMagnitude::finite(rational_abs(c, p).exponent() - ball.radius_exponent * k);
        if (!(term < head)) return std::nullopt;
    }
    return head;
}

namespace {

bool denominator_root_in_ball(const Family& family, const Ball& ball) {
    for (const auto& [root, mult] : rational_roots(family.resolvent().denominator())) {
        (void)mult;
        if (ball_contains(ball, root)) return true;
    }
    return false;
}

bool all_quantity_polys_constant(const Family& family, const Ball& ball) {
    if (!constancy_certificate(family.resolvent().denominator(), ball)) return false;
    const long long n = family.n();
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j)
            if (!constancy_certificate(family.resolvent().numerators().at(i, j), ball)) return false;
    if (family.is_condition()) {
        for (long long i = 0; i < n; ++i)
            for (long long j = 0; j < n; ++j)
                if (!constancy_certificate(family.forward_polys().at(i, j), ball)) return false;
    }
    return true;
}

}  // namespace

std::string leaf_class_name(LeafClass cls) {
    switch (cls) {
        case LeafClass::Member: return "member";
        case LeafClass::NonMember: return "non_member";
        case LeafClass::ContainsSpectrumPoint: return "contains_spectrum_point";
        case LeafClass::Unresolved: return "unresolved";
    }
    return "";
}

BallClass classify_ball(const Family& family, const Ball& ball, const Epsilon& eps) {
    if (ball.center.prime() != family.prime()) throw PrimeMismatch("ball prime differs from family prime");
    if (all_quantity_polys_constant(family, ball)) {
        const MembershipVerdict v = member(family, ball.center, eps);
        // Constant |denominator| != 0 rules out InSpectrum at the center.
        return v.cls == MembershipClass::InPseudoRegion ? BallClass::Member : BallClass::NonMember;
    }
    if (denominator_root_in_ball(family, ball)) return BallClass::ContainsSpectrumPoint;
    return BallClass::NotConstant;
}

RegionTree explore(const Family& family, const Ball& root, const Epsilon& eps, long long max_depth) {
    if (max_depth < 0) throw Error("explore requires max_depth >= 0");
    constexpr long long kNodeBudget = 1 << 20;
    long long nodes = 0;

    RegionTree tree{RegionNode{root, 0, LeafClass::Unresolved, false, {}}, max_depth};
    std::deque<RegionNode*> queue{&tree.root};
    while (!queue.empty()) {
        RegionNode* node = queue.front();
        queue.pop_front();
        if (++nodes > kNodeBudget) throw Error("region exploration exceeded the node budget");

        // A ball containing a rational spectrum point can never certify, so
        // classify_ball is consulted first and the depth limit second.
        const BallClass cls = classify_ball(family, node->ball, eps);
        if (cls == BallClass::Member || cls == BallClass::NonMember) {
            node->is_leaf = true;
            node->leaf_class = cls == BallClass::Member ? LeafClass::Member : LeafClass::NonMember;
            continue;
        }
        if (node->depth >= max_depth) {
            node->is_leaf = true;
            node->leaf_class =
                cls == BallClass::ContainsSpectrumPoint ? LeafClass::ContainsSpectrumPoint : LeafClass::Unresolved;
            continue;
        }
        for (const Ball& child : subdivide(node->ball))
            node->children.push_back(RegionNode{child, node->depth + 1, LeafClass::Unresolved, false, {}});
        for (auto& child : node->children) queue.push_back(&child);
    }
    return tree;
}

std::optional<long long> outer_bound_exponent(const Family& family, const Epsilon& eps) {
    const long long p = family.prime();
    const RationalPoly& den = family.resolvent().denominator();
    const long long dn = den.degree();
    const long long v_top = -rational_abs(den.leading_coeff(), p).exponent();

    // Leading-term dominance threshold: |d(lambda)| = |d_top| |lambda|^dn beyond it.
    long long t_dom = 1;
    for (long long k = 0; k < dn; ++k) {
        const Rational c = den.coeff(k);
        if (c == 0) continue;
        const long long v_k = -rational_abs(c, p).exponent();
        // need t*(dn - k) > v_top - v_k
        const long long diff = v_top - v_k;
        long long t_min = diff >= 0 ? diff / (dn - k) + 1 : -((-diff) / (dn - k)) + 1;
        t_dom = std::max(t_dom, t_min);
    }

    // Upper envelope exponents of the numerators (plus the forward factor for
    // condition families) at |lambda| = p^t.
    auto envelope = [&](const RationalPoly& f, long long t) -> std::optional<long long> {
        if (f.is_zero()) return std::nullopt;
        long long best = rational_abs(f.coeff(0), p).is_zero()
                             ? std::numeric_limits<long long>::min()
                             : rational_abs(f.coeff(0), p).exponent();
        for (long long k = 1; k <= f.degree(); ++k) {
            if (f.coeff(k) == 0) continue;
            best = std::max(best, rational_abs(f.coeff(k), p).exponent() + k * t);
        }
        return best;
    };
    long long num_deg_max = 0;
    auto quantity_exponent = [&](long long t) -> std::optional<long long> {
        std::optional<long long> num;
        for (long long i = 0; i < family.n(); ++i)
            for (long long j = 0; j < family.n(); ++j) {
                auto e = envelope(family.resolvent().numerators().at(i, j), t);
                if (e) num = num ? std::max(*num, *e) : *e;
            }
        if (!num) return std::nullopt;  // zero resolvent numerators: quantity is 0
        long long q = *num - (-v_top + dn * t);
        if (family.is_condition()) {
            std::optional<long long> fwd;
            for (long long i = 0; i < family.n(); ++i)
                for (long long j = 0; j < family.n(); ++j) {
                    auto e = envelope(family.forward_polys().at(i, j), t);
                    if (e) fwd = fwd ? std::max(*fwd, *e) : *e;
                }
            if (fwd) q += *fwd;
        }
        return q;
    };
    for (long long i = 0; i < family.n(); ++i)
        for (long long j = 0; j < family.n(); ++j)
            num_deg_max = std::max(num_deg_max, family.resolvent().numerators().at(i, j).degree());
    long long slope_max = num_deg_max - dn;
    if (family.is_condition()) {
        long long fwd_deg = 0;
        for (long long i = 0; i < family.n(); ++i)
            for (long long j = 0; j < family.n(); ++j)
                fwd_deg = std::max(fwd_deg, family.forward_polys().at(i, j).degree());
        slope_max += fwd_deg;
    }
    if (slope_max > 0) return std::nullopt;

    std::optional<long long> prev;
    for (long long t = t_dom; t < t_dom + 4096; ++t) {
        const auto q = quantity_exponent(t);
        if (!q) return t;  // identically-zero numerators: NonMember everywhere outside
        if (compare_vs_inverse_epsilon(PMagnitude::finite(*q), eps, p) != std::strong_ordering::greater) return t;
        if (prev && *q >= *prev) return std::nullopt;  // flat envelope above the threshold
        prev = q;
    }
    return std::nullopt;
}

void visit_leaves(const RegionNode& node, const std::function<void(const RegionNode&)>& fn) {
    if (node.is_leaf) {
        fn(node);
        return;
    }
    for (const auto& child : node.children) visit_leaves(child, fn);
}

}  // namespace ultraspec
