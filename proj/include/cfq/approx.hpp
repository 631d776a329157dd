#pragma once

#include "cfq/integer.hpp"
#include "cfq/rational.hpp"
#include "cfq/surd.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cfq {

// Orders |x - a| against |x - b| exactly: negative when a is closer, zero
// only for a == b (x is irrational), positive when b is closer. Uses the
// identity (x-a)^2 - (x-b)^2 = (2x - a - b)(b - a), so a single surd
// comparison against the midpoint decides.
int cmp_abs_distance(const QuadraticSurd& x, const Rational& a, const Rational& b);

// Exact floor of q * x.
Integer floor_scaled(const QuadraticSurd& x, const Integer& q);

// The unique fraction with denominator <= max_den closest to x, found by a
// Stern-Brocot mediant descent. Exhaustiveness rests on two facts needing
// no continued-fraction theory: a fraction outside the current enclosing
// interval is dominated by the nearer endpoint, and any fraction strictly
// between Farey neighbours a/b < c/d has denominator >= b + d.
Rational closest_fraction(const QuadraticSurd& x, const Integer& max_den);

// Same result by direct enumeration of q = 1..max_den with the numerator
// window [floor(qx) - 1, floor(qx) + 2]. Feasible only for small max_den;
// kept as the independent cross-check of the mediant route.
Rational closest_fraction_bruteforce(const QuadraticSurd& x, const Integer& max_den);

struct ApproxViolation {
    std::size_t index = 0;
    Rational convergent;
    Rational rival; // strictly-not-worse competitor with denominator <= q_index
};

struct BestApproximationReport {
    std::size_t first_index = 1;
    std::size_t last_index = 0;
    std::uint64_t enumerated = 0; // candidates visited by the brute-force cross-check
    std::vector<ApproxViolation> violations;
};

// Verifies that each convergent p_k/q_k, 1 <= k <= upto_index, is strictly
// closer to x than every other fraction with denominator <= q_k. Index 0 is
// excluded: a_0 need not win when the fractional part of x exceeds 1/2.
// The mediant search certifies every index; indices with q_k below
// brute_threshold are additionally re-verified by enumeration.
BestApproximationReport check_best_approximation(const QuadraticSurd& x, std::size_t upto_index,
                                                 const Integer& brute_threshold = 4000);

struct HalfBoundReport {
    std::size_t pairs_checked = 0;
    std::vector<std::size_t> violations; // indices k where neither k nor k+1 meets the bound
};

// For every k <= upto_index, at least one of the convergents k, k+1
// satisfies |x - p/q| < 1/(2 q^2), decided exactly.
HalfBoundReport check_half_q_squared(const QuadraticSurd& x, std::size_t upto_index);

struct LegendreReport {
    Integer q_max;
    std::vector<Rational> qualifiers;     // reduced p/q with |x - p/q| < 1/(2q^2), q <= q_max
    std::vector<Rational> non_convergent; // qualifiers missing from the convergent list (expected empty)
};

// Every reduced fraction within 1/(2q^2) of x must be one of its convergents.
LegendreReport check_legendre(const QuadraticSurd& x, const Integer& q_max);

} // namespace cfq
