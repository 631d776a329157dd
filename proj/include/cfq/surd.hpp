#pragma once

#include "cfq/integer.hpp"
#include "cfq/rational.hpp"

#include <utility>
#include <vector>

namespace cfq {

// Sign of u + v*sqrt(d) decided by integer arithmetic alone (d >= 0).
int sign_with_sqrt(const Integer& u, const Integer& v, const Integer& d);

// Real quadratic number (p + sqrt(d)) / q in the canonical divisibility
// normal form q | (d - p^2). Construction normalizes: when the divisibility
// fails the triple is rescaled to (p|q|, d q^2, q|q|), which represents the
// same value. The sqrt coefficient is always +1; negative values are
// expressed through the signs of p and q.
//
// With d fixed, the value determines (p, q) uniquely, so canonical triples
// double as the states of the expansion algorithm.
class QuadraticSurd {
public:
    QuadraticSurd(Integer p, Integer d, Integer q);

    static QuadraticSurd sqrt_of(const Integer& n) { return QuadraticSurd(0, n, 1); }

    const Integer& p() const { return p_; }
    const Integer& d() const { return d_; }
    const Integer& q() const { return q_; }

    // True when d is a perfect square, i.e. the value is rational.
    bool is_rational() const;

    // Algebraic conjugate (p - sqrt(d)) / q, as a canonical surd.
    QuadraticSurd conjugate() const;

    // -1 / conjugate, the reversal companion of a purely periodic surd.
    QuadraticSurd minus_inverse_conjugate() const;

    // Integer multiple (scales the radicand). k >= 1.
    QuadraticSurd scaled(const Integer& k) const;

    // Exact floor, sign-correct for negative q and negative values.
    Integer floor() const;

    // Sign of *this - r, exact.
    int compare(const Rational& r) const;

    friend bool operator==(const QuadraticSurd& a, const QuadraticSurd& b) = default;

private:
    Integer p_;
    Integer d_;
    Integer q_;
};

// One step of the expansion: emits floor(s) and the reciprocal remainder
// 1 / (s - floor(s)) in canonical form. Requires an irrational s.
std::pair<Integer, QuadraticSurd> cf_step(const QuadraticSurd& s);

// Eventually periodic continued fraction: preperiod then period repeated
// forever. The period is nonempty and minimal, the preperiod is shortest.
struct PeriodicCF {
    Digits preperiod;
    Digits period;

    friend bool operator==(const PeriodicCF& a, const PeriodicCF& b) = default;
};

// Full expansion with exact period detection. Iterates cf_step recording
// every canonical (p, q) state; the first repeated state closes the period
// and fixes the preperiod at its first occurrence. States determine all
// future digits, so both parts are automatically minimal.
//
// Rejects rational inputs (perfect-square radicand); use rational_cf for
// those. A safety cap of max(10^6, 4d) iterations turns a broken state
// space into an error instead of a hang.
PeriodicCF expand(const QuadraticSurd& s);

// Galois criterion: s is reduced when s > 1 and its conjugate lies in
// (-1, 0); exactly the reduced surds have purely periodic expansions.
bool is_reduced(const QuadraticSurd& s);

// Expansions of a purely periodic s and of -1/conjugate(s). The second
// period is the reversal of the first; tests assert that, the operation
// only computes the pair. Throws unless s satisfies the Galois criterion.
std::pair<PeriodicCF, PeriodicCF> reversal_pair(const QuadraticSurd& s);

// Integer quadratic A x^2 + B x + C.
struct QuadraticPolynomial {
    Integer A;
    Integer B;
    Integer C;
};

enum class RootChoice { larger, smaller };

// The chosen real root (-B +- sqrt(B^2 - 4AC)) / (2A) as a canonical surd.
// Fails when the discriminant is a perfect square (rational roots) or
// negative (complex roots).
QuadraticSurd from_polynomial(const QuadraticPolynomial& poly, RootChoice choice);

} // namespace cfq
