#include "cfq/approx.hpp"

#include "cfq/error.hpp"
#include "cfq/finite_cf.hpp"

#include <algorithm>

namespace cfq {

namespace {

void require_irrational(const QuadraticSurd& x, const char* who) {
    if (x.is_rational())
        fail(errc::rational_surd, std::string(who) + ": target must be irrational");
}

// Emits the expansion digits of an irrational surd one at a time.
class SurdDigits {
public:
    explicit SurdDigits(QuadraticSurd s) : state_(std::move(s)) {}

    Integer next() {
        auto [digit, rest] = cf_step(state_);
        state_ = std::move(rest);
        return std::move(digit);
    }

private:
    QuadraticSurd state_;
};

// |x - p/q| < bound, both sides exact.
bool within(const QuadraticSurd& x, const Rational& frac, const Rational& bound) {
    return x.compare(frac + bound) < 0 && x.compare(frac - bound) > 0;
}

} // namespace

int cmp_abs_distance(const QuadraticSurd& x, const Rational& a, const Rational& b) {
    if (a == b) return 0;
    const Rational mid = (a + b) / Rational(2);
    const int side = x.compare(mid);        // sign of 2x - a - b, halved
    const int gap = (b - a).sign();         // sign of b - a
    return side * gap;                      // sign of (x-a)^2 - (x-b)^2
}

Integer floor_scaled(const QuadraticSurd& x, const Integer& q) {
    return x.scaled(q).floor();
}

Rational closest_fraction(const QuadraticSurd& x, const Integer& max_den) {
    require_irrational(x, "closest_fraction");
    if (max_den < 1) fail(errc::invalid_argument, "closest_fraction: max_den must be >= 1");
    const Integer f = x.floor();
    Integer lo_num = f, lo_den = 1;      // lo < x < hi throughout
    Integer hi_num = f + 1, hi_den = 1;
    while (lo_den + hi_den <= max_den) {
        const Integer med_num = lo_num + hi_num;
        const Integer med_den = lo_den + hi_den;
        if (x.compare(Rational(med_num, med_den)) < 0) {
            hi_num = med_num;
            hi_den = med_den;
        } else {
            lo_num = med_num;
            lo_den = med_den;
        }
    }
    // No fraction with denominator <= max_den remains strictly inside (lo, hi).
    const Rational lo(lo_num, lo_den), hi(hi_num, hi_den);
    return cmp_abs_distance(x, lo, hi) < 0 ? lo : hi;
}

Rational closest_fraction_bruteforce(const QuadraticSurd& x, const Integer& max_den) {
    require_irrational(x, "closest_fraction_bruteforce");
    if (max_den < 1) fail(errc::invalid_argument, "closest_fraction_bruteforce: max_den must be >= 1");
    Rational best(x.floor());
    for (Integer q = 1; q <= max_den; ++q) {
        const Integer m = floor_scaled(x, q);
        for (Integer p = m - 1; p <= m + 2; ++p) {
            const Rational cand(p, q);
            if (cmp_abs_distance(x, cand, best) < 0) best = cand;
        }
    }
    return best;
}

BestApproximationReport check_best_approximation(const QuadraticSurd& x, std::size_t upto_index,
                                                 const Integer& brute_threshold) {
    require_irrational(x, "check_best_approximation");
    BestApproximationReport report;
    report.last_index = upto_index;

    SurdDigits digits(x);
    ConvergentStepper conv;
    conv.push(digits.next()); // index 0, not checked
    for (std::size_t k = 1; k <= upto_index; ++k) {
        conv.push(digits.next());
        const Rational convergent = conv.value();
        const Rational best = closest_fraction(x, conv.q());
        bool ok = best == convergent;
        if (conv.q() <= brute_threshold) {
            // Independent enumeration over every denominator up to q_k.
            const Rational brute = closest_fraction_bruteforce(x, conv.q());
            report.enumerated += 4 * static_cast<std::uint64_t>(conv.q());
            ok = ok && brute == convergent;
            if (brute != best)
                fail(errc::shape_violation,
                     "closest-fraction routes disagree at q=" + to_decimal(conv.q()));
        }
        if (!ok) report.violations.push_back({k, convergent, best});
    }
    return report;
}

HalfBoundReport check_half_q_squared(const QuadraticSurd& x, std::size_t upto_index) {
    require_irrational(x, "check_half_q_squared");
    HalfBoundReport report;

    SurdDigits digits(x);
    ConvergentStepper conv;
    conv.push(digits.next());
    bool prev_meets = within(x, conv.value(), Rational(1, 2 * conv.q() * conv.q()));
    for (std::size_t k = 0; k < upto_index + 1; ++k) {
        conv.push(digits.next());
        const bool cur_meets = within(x, conv.value(), Rational(1, 2 * conv.q() * conv.q()));
        ++report.pairs_checked;
        if (!prev_meets && !cur_meets) report.violations.push_back(k);
        prev_meets = cur_meets;
    }
    return report;
}

LegendreReport check_legendre(const QuadraticSurd& x, const Integer& q_max) {
    require_irrational(x, "check_legendre");
    if (q_max < 1) fail(errc::invalid_argument, "check_legendre: q_max must be >= 1");
    LegendreReport report;
    report.q_max = q_max;

    // Convergents with denominator <= q_max; denominators never decrease,
    // so the first overshoot ends the list.
    std::vector<Rational> convergent_list;
    {
        SurdDigits digits(x);
        ConvergentStepper conv;
        while (true) {
            conv.push(digits.next());
            if (conv.q() > q_max) break;
            convergent_list.push_back(conv.value());
        }
    }

    for (Integer q = 1; q <= q_max; ++q) {
        const Integer m = floor_scaled(x, q);
        for (Integer p = m; p <= m + 1; ++p) {
            if (boost::multiprecision::gcd(abs(p), q) != 1) continue;
            const Rational frac(p, q);
            if (!within(x, frac, Rational(1, 2 * q * q))) continue;
            report.qualifiers.push_back(frac);
            if (std::find(convergent_list.begin(), convergent_list.end(), frac) ==
                convergent_list.end())
                report.non_convergent.push_back(frac);
        }
    }
    return report;
}

} // namespace cfq
