#pragma once

#include "ultraspec/pseudospectra.hpp"

namespace ultraspec {

/// Closed ultrametric ball {x : |x - center| <= p^(-radius_exponent)}.
/// Any two balls either nest or are disjoint.
struct Ball {
    PadicScalar center;
    long long radius_exponent;
};

bool ball_contains(const Ball& ball, const PadicScalar& x);

/// The p residue-class children: centers center + k*p^r, radius exponent r+1,
/// in residue order k = 0..p-1. They partition the parent exactly.
std::vector<Ball> subdivide(const Ball& ball);

/// |f| is constant on the ball when every shifted coefficient term is
/// strictly dominated by the constant term: max_{k>=1} |c_k| p^{-rk} < |c_0|
/// for f(center + t) = sum c_k t^k. Returns the constant value, or nullopt
/// when the certificate does not apply. The zero polynomial is constant Zero.
std::optional<PMagnitude> constancy_certificate(const RationalPoly& f, const Ball& ball);

enum class BallClass { Member, NonMember, ContainsSpectrumPoint, NotConstant };
enum class LeafClass { Member, NonMember, ContainsSpectrumPoint, Unresolved };

std::string leaf_class_name(LeafClass cls);

/// Uniform classification attempt: when every polynomial of the family's
/// quantity has certified constant magnitude on the ball, the center verdict
/// extends to the whole ball. A ball holding a rational root of the
/// denominator reports ContainsSpectrumPoint; otherwise NotConstant and the
/// caller subdivides.
BallClass classify_ball(const Family& family, const Ball& ball, const Epsilon& eps);

struct RegionNode {
    Ball ball;
    long long depth;
    LeafClass leaf_class;  // meaningful only for leaves
    bool is_leaf;
    std::vector<RegionNode> children;
};

struct RegionTree {
    RegionNode root;
    long long max_depth;
};

/// Breadth-first p-ary subdivision of the root ball. Balls certified by
/// classify_ball become Member/NonMember leaves; the rest subdivide until
/// max_depth, where they become ContainsSpectrumPoint or Unresolved leaves.
/// Deterministic for fixed inputs.
RegionTree explore(const Family& family, const Ball& root, const Epsilon& eps, long long max_depth);

/// Smallest exponent m (at least the leading-term dominance threshold) such
/// that every lambda with |lambda| > p^m is certified NonMember; nullopt when
/// the family's quantity does not decay at infinity (then no bounding ball
/// exists). The ball {|lambda| <= p^m} contains the spectrum and the whole
/// eps-region.
std::optional<long long> outer_bound_exponent(const Family& family, const Epsilon& eps);

/// Leaves in deterministic (depth-first, residue-order) sequence.
void visit_leaves(const RegionNode& node, const std::function<void(const RegionNode&)>& fn);

}  // namespace ultraspec
