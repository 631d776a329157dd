#pragma once

#include "cfq/integer.hpp"
#include "cfq/rational.hpp"
#include "cfq/surd.hpp"

#include <cstddef>
#include <span>

namespace cfq {

// Unique writing N = n^2 + j with n >= 1 and 1 <= j <= 2n (N non-square).
struct SqrtDecomposition {
    Integer N;
    Integer n;
    Integer j;
};

// Requires N >= 2 and non-square.
SqrtDecomposition decompose(const Integer& N);

// Structured expansion of sqrt(N): preperiod [n], period a_1 .. a_r, 2n.
// The constructor verifies that shape and turns any violation into an
// error; this is the engine's main self-check.
class SqrtCF {
public:
    SqrtCF(Integer N, const PeriodicCF& cf);

    const Integer& N() const { return N_; }
    const Integer& n() const { return n_; }
    const Integer& j() const { return j_; }
    const Digits& body() const { return body_; }  // a_1 .. a_r (may be empty)
    const Integer& last() const { return last_; } // always 2n

    std::size_t period_length() const { return body_.size() + 1; }
    Digits period() const;
    PeriodicCF periodic_cf() const;

private:
    Integer N_, n_, j_;
    Digits body_;
    Integer last_;
};

SqrtCF sqrt_cf(const Integer& N);

std::size_t period_length(const Integer& N);

bool palindrome_check(std::span<const Integer> body);

// Value under the square root of the fraction [n, (a_1 .. a_r, 2n) repeated],
// for a palindromic body:
//   n^2 + (2n K_{r-1}(a_1..a_{r-1}) + K_{r-2}(a_2..a_{r-1})) / K_r(a_1..a_r).
// Rational by construction; equals N exactly when the body came from
// sqrt_cf(N). Degenerate cases: r = 1 uses K_0 = 1 and K_{-1} = 0, r = 0
// yields n^2 + 1.
Rational reconstruct_N(const Integer& n, std::span<const Integer> body);

} // namespace cfq
