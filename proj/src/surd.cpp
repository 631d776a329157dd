#include "cfq/surd.hpp"

#include "cfq/error.hpp"

#include <map>

namespace cfq {

int sign_with_sqrt(const Integer& u, const Integer& v, const Integer& d) {
    if (d < 0) fail(errc::invalid_surd, "negative radicand");
    const auto sgn = [](const Integer& x) { return x == 0 ? 0 : (x < 0 ? -1 : 1); };
    if (v == 0 || d == 0) return sgn(u);
    if (v > 0) {
        if (u >= 0) return 1; // v*sqrt(d) > 0
        // u < 0: compare v^2 d against u^2.
        const Integer lhs = v * v * d;
        const Integer rhs = u * u;
        if (lhs > rhs) return 1;
        if (lhs < rhs) return -1;
        return 0; // only possible when sqrt(d) is rational
    }
    return -sign_with_sqrt(-u, -v, d);
}

QuadraticSurd::QuadraticSurd(Integer p, Integer d, Integer q)
    : p_(std::move(p)), d_(std::move(d)), q_(std::move(q)) {
    if (q_ == 0) fail(errc::invalid_surd, "zero denominator");
    if (d_ < 0) fail(errc::invalid_surd, "negative radicand");
    if ((d_ - p_ * p_) % q_ != 0) {
        const Integer s = abs(q_);
        p_ *= s;
        d_ *= s * s;
        q_ *= s;
    }
}

bool QuadraticSurd::is_rational() const { return is_square(d_); }

QuadraticSurd QuadraticSurd::conjugate() const { return QuadraticSurd(-p_, d_, -q_); }

QuadraticSurd QuadraticSurd::minus_inverse_conjugate() const {
    // -1 / ((p - sqrt(d)) / q) = (p + sqrt(d)) / ((d - p^2) / q), exact by canonicity.
    return QuadraticSurd(p_, d_, (d_ - p_ * p_) / q_);
}

QuadraticSurd QuadraticSurd::scaled(const Integer& k) const {
    if (k < 1) fail(errc::domain_error, "scale factor must be >= 1");
    return QuadraticSurd(p_ * k, d_ * k * k, q_);
}

Integer QuadraticSurd::floor() const {
    const Integer t = isqrt(d_);
    if (t * t == d_) return floor_div(p_ + t, q_); // rational value (p + t) / q
    // sqrt(d) lies strictly between t and t+1, so the numerator lies in an
    // open unit interval and the floor of the quotient is exact.
    if (q_ > 0) return floor_div(p_ + t, q_);
    return floor_div(-p_ - t - 1, -q_);
}

int QuadraticSurd::compare(const Rational& r) const {
    // (p + sqrt(d))/q - a/b = ((pb - aq) + b sqrt(d)) / (qb)
    const Integer u = p_ * r.den() - r.num() * q_;
    const int num_sign = sign_with_sqrt(u, r.den(), d_);
    return q_ > 0 ? num_sign : -num_sign;
}

std::pair<Integer, QuadraticSurd> cf_step(const QuadraticSurd& s) {
    const Integer a = s.floor();
    const Integer p1 = s.p() - a * s.q();
    const Integer q1 = (s.d() - p1 * p1) / s.q(); // exact: q | d - p^2 is preserved by the step
    if (q1 == 0)
        fail(errc::rational_surd, "cf_step: value is rational (perfect-square radicand)");
    return {a, QuadraticSurd(-p1, s.d(), q1)};
}

PeriodicCF expand(const QuadraticSurd& s0) {
    if (s0.is_rational())
        fail(errc::rational_surd,
             "expand: radicand is a perfect square, the value is rational; use rational_cf");

    const Integer cap = std::max<Integer>(1000000, 4 * s0.d());
    std::map<std::pair<Integer, Integer>, std::size_t> seen;
    Digits digits;
    QuadraticSurd s = s0;
    for (Integer iter = 0; iter <= cap; ++iter) {
        const auto [it, inserted] = seen.emplace(std::pair(s.p(), s.q()), digits.size());
        if (!inserted) {
            const std::size_t start = it->second;
            PeriodicCF out;
            out.preperiod.assign(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(start));
            out.period.assign(digits.begin() + static_cast<std::ptrdiff_t>(start), digits.end());
            return out;
        }
        auto [digit, next] = cf_step(s);
        digits.push_back(std::move(digit));
        s = std::move(next);
    }
    fail(errc::iteration_limit, "expand: no repeated state within the iteration cap");
}

bool is_reduced(const QuadraticSurd& s) {
    if (s.compare(Rational(1)) <= 0) return false;
    const QuadraticSurd conj = s.conjugate();
    return conj.compare(Rational(0)) < 0 && conj.compare(Rational(-1)) > 0;
}

std::pair<PeriodicCF, PeriodicCF> reversal_pair(const QuadraticSurd& s) {
    if (!is_reduced(s))
        fail(errc::not_purely_periodic,
             "reversal_pair: surd is not reduced, its expansion is not purely periodic");
    return {expand(s), expand(s.minus_inverse_conjugate())};
}

namespace {

// Largest g with g | p, g | q and g^2 | d, by trial division of gcd(p, q).
Integer shared_square_factor(const Integer& p, const Integer& q, const Integer& d) {
    Integer h = boost::multiprecision::gcd(abs(p), abs(q));
    Integer g = 1;
    for (Integer f = 2; f * f <= h; ++f) {
        while (h % f == 0 && d % ((g * f) * (g * f)) == 0 && p % (g * f) == 0 &&
               q % (g * f) == 0) {
            g *= f;
            h /= f;
        }
        while (h % f == 0) h /= f;
    }
    if (h > 1 && d % ((g * h) * (g * h)) == 0 && p % (g * h) == 0 && q % (g * h) == 0) g *= h;
    return g;
}

} // namespace

QuadraticSurd from_polynomial(const QuadraticPolynomial& poly, RootChoice choice) {
    if (poly.A == 0) fail(errc::invalid_argument, "not a quadratic: A = 0");
    const Integer disc = poly.B * poly.B - 4 * poly.A * poly.C;
    if (disc < 0) fail(errc::complex_root, "negative discriminant, roots are complex");
    if (is_square(disc)) fail(errc::rational_root, "square discriminant, roots are rational");
    // (-B + sqrt(disc)) / (2A) is the larger root when A > 0, the smaller when A < 0.
    const bool plus_branch = (choice == RootChoice::larger) == (poly.A > 0);
    const Integer p = plus_branch ? -poly.B : poly.B;
    const Integer q = plus_branch ? 2 * poly.A : -2 * poly.A;
    const Integer g = shared_square_factor(p, q, disc);
    return QuadraticSurd(p / g, disc / (g * g), q / g);
}

} // namespace cfq
