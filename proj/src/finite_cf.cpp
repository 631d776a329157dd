#include "cfq/finite_cf.hpp"

#include "cfq/error.hpp"

namespace cfq {

FiniteCF::FiniteCF(Digits digits) : digits_(std::move(digits)) {
    if (digits_.empty()) fail(errc::invalid_argument, "continued fraction needs at least one digit");
    for (std::size_t i = 1; i < digits_.size(); ++i) {
        if (digits_[i] < 1)
            fail(errc::invalid_argument, "digit a_" + std::to_string(i) + " must be >= 1, got " +
                                             to_decimal(digits_[i]));
    }
}

FiniteCF rational_cf(const Rational& x) {
    Digits digits;
    Integer num = x.num();
    Integer den = x.den();
    for (;;) {
        const Integer a = floor_div(num, den);
        digits.push_back(a);
        const Integer rem = num - a * den; // 0 <= rem < den
        if (rem == 0) break;
        num = den;
        den = rem;
    }
    return FiniteCF(std::move(digits));
}

FiniteCF alt_representation(const FiniteCF& cf) {
    Digits d = cf.digits();
    if (d.size() >= 2 && d.back() == 1) {
        // Fold the trailing 1: [.., a, 1] -> [.., a + 1].
        d.pop_back();
        d.back() += 1;
    } else {
        // Split the last digit: [.., a] -> [.., a - 1, 1].
        d.back() -= 1;
        d.push_back(1);
    }
    return FiniteCF(std::move(d));
}

Rational eval_cf(const FiniteCF& cf) {
    const Digits& d = cf.digits();
    Rational value(d.back());
    for (std::size_t i = d.size() - 1; i-- > 0;) {
        value = Rational(d[i]) + value.reciprocal();
    }
    return value;
}

std::vector<Integer> continuants(std::span<const Integer> xs) {
    std::vector<Integer> table;
    table.reserve(xs.size() + 2);
    table.emplace_back(0); // K_{-1}
    table.emplace_back(1); // K_0
    for (const Integer& x : xs) {
        const std::size_t m = table.size();
        table.push_back(table[m - 2] + x * table[m - 1]);
    }
    return table;
}

Integer continuant(std::span<const Integer> xs) {
    Integer prev = 0, cur = 1;
    for (const Integer& x : xs) {
        Integer next = prev + x * cur;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::vector<Rational> convergents(std::span<const Integer> digits, std::size_t upto) {
    const std::size_t count = std::min(upto, digits.size());
    std::vector<Rational> out;
    out.reserve(count);
    ConvergentStepper step;
    for (std::size_t k = 0; k < count; ++k) {
        step.push(digits[k]);
        out.push_back(step.value());
    }
    return out;
}

} // namespace cfq
