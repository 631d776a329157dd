#include "cfq/sqrtn.hpp"

#include "cfq/error.hpp"
#include "cfq/finite_cf.hpp"

#include <algorithm>

namespace cfq {

SqrtDecomposition decompose(const Integer& N) {
    if (N <= 1) fail(errc::domain_error, "decompose: N must be >= 2, got " + to_decimal(N));
    const Integer n = isqrt(N);
    if (n * n == N) fail(errc::square_input, "decompose: " + to_decimal(N) + " is a perfect square");
    return {N, n, N - n * n};
}

SqrtCF::SqrtCF(Integer N, const PeriodicCF& cf) : N_(std::move(N)) {
    const SqrtDecomposition dec = decompose(N_);
    n_ = dec.n;
    j_ = dec.j;
    const Integer two_n = 2 * n_;
    if (cf.preperiod.size() != 1 || cf.preperiod.front() != n_)
        fail(errc::shape_violation,
             "sqrt(" + to_decimal(N_) + "): preperiod is not [" + to_decimal(n_) + "]");
    if (cf.period.empty() || cf.period.back() != two_n)
        fail(errc::shape_violation,
             "sqrt(" + to_decimal(N_) + "): period does not end with " + to_decimal(two_n));
    for (std::size_t i = 0; i + 1 < cf.period.size(); ++i) {
        if (cf.period[i] < 1)
            fail(errc::shape_violation, "sqrt(" + to_decimal(N_) + "): nonpositive body digit");
    }
    body_.assign(cf.period.begin(), cf.period.end() - 1);
    last_ = two_n;
}

Digits SqrtCF::period() const {
    Digits out = body_;
    out.push_back(last_);
    return out;
}

PeriodicCF SqrtCF::periodic_cf() const { return PeriodicCF{{n_}, period()}; }

SqrtCF sqrt_cf(const Integer& N) {
    if (N <= 1) fail(errc::domain_error, "sqrt_cf: N must be >= 2, got " + to_decimal(N));
    if (is_square(N)) fail(errc::square_input, "sqrt_cf: " + to_decimal(N) + " is a perfect square");
    return SqrtCF(N, expand(QuadraticSurd::sqrt_of(N)));
}

std::size_t period_length(const Integer& N) { return sqrt_cf(N).period_length(); }

bool palindrome_check(std::span<const Integer> body) {
    for (std::size_t i = 0, k = body.size(); i < k / 2; ++i) {
        if (body[i] != body[k - 1 - i]) return false;
    }
    return true;
}

Rational reconstruct_N(const Integer& n, std::span<const Integer> body) {
    if (n < 1) fail(errc::domain_error, "reconstruct_N: n must be >= 1");
    for (const Integer& a : body) {
        if (a < 1) fail(errc::invalid_argument, "reconstruct_N: body digits must be >= 1");
    }
    if (!palindrome_check(body)) fail(errc::invalid_argument, "reconstruct_N: body is not a palindrome");

    const std::size_t r = body.size();
    if (r == 0) return Rational(n * n + 1);

    const Integer k_r = continuant(body);                                 // K_r(a_1..a_r)
    const Integer k_r1 = continuant(body.first(r - 1));                   // K_{r-1}(a_1..a_{r-1})
    const Integer k_r2 = r >= 2 ? continuant(body.subspan(1, r - 2))      // K_{r-2}(a_2..a_{r-1})
                                : Integer(0);                             // K_{-1}
    return Rational(n * n) + Rational(2 * n * k_r1 + k_r2, k_r);
}

} // namespace cfq
