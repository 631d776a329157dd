#pragma once

#include "cfq/integer.hpp"
#include "cfq/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace cfq {

// Finite continued fraction [a_0, ..., a_N]. The leading digit is any
// integer, every later digit is >= 1. A trailing digit of 1 is allowed so
// that both members of the dual representation pair are expressible; the
// canonical form (the one the expansion algorithm produces) never ends in 1
// unless the whole fraction is a single digit.
class FiniteCF {
public:
    explicit FiniteCF(Digits digits);

    const Digits& digits() const { return digits_; }
    std::size_t size() const { return digits_.size(); }

    bool is_canonical() const { return digits_.size() == 1 || digits_.back() >= 2; }

    friend bool operator==(const FiniteCF& a, const FiniteCF& b) = default;

private:
    Digits digits_;
};

// Floor/reciprocal expansion of an exact rational; on rationals this is the
// Euclidean algorithm. Total (negative and integer inputs included) and
// always returns the canonical form.
FiniteCF rational_cf(const Rational& x);

// The other member of the two-representation pair: [.., a_N] <-> [.., a_N - 1, 1].
// An involution; [a_0] maps to [a_0 - 1, 1].
FiniteCF alt_representation(const FiniteCF& cf);

// Exact value of the fraction.
Rational eval_cf(const FiniteCF& cf);

// Continuant table K_{-1}, K_0, ..., K_n of a sequence:
// K_{-1} = 0, K_0 = 1, K_m = K_{m-2} + x_m * K_{m-1}.
// The empty sequence yields {0, 1}.
std::vector<Integer> continuants(std::span<const Integer> xs);

// Final continuant K_n of the sequence.
Integer continuant(std::span<const Integer> xs);

// Convergents p_k/q_k of the leading digits, at most `upto` of them.
// p_k = K_{k+1}(a_0..a_k), q_k = K_k(a_1..a_k).
std::vector<Rational> convergents(std::span<const Integer> digits, std::size_t upto);

// Incremental convergent recurrence for digit streams:
// p_k = a_k p_{k-1} + p_{k-2}, q_k = a_k q_{k-1} + q_{k-2}.
class ConvergentStepper {
public:
    ConvergentStepper() : p_prev_(0), p_(1), q_prev_(1), q_(0) {}

    void push(const Integer& digit) {
        const Integer p_next = digit * p_ + p_prev_;
        const Integer q_next = digit * q_ + q_prev_;
        p_prev_ = p_;
        p_ = p_next;
        q_prev_ = q_;
        q_ = q_next;
        ++count_;
    }

    std::size_t count() const { return count_; }
    const Integer& p() const { return p_; }
    const Integer& q() const { return q_; }
    Rational value() const { return Rational(p_, q_); }

private:
    Integer p_prev_, p_;
    Integer q_prev_, q_;
    std::size_t count_ = 0;
};

} // namespace cfq
