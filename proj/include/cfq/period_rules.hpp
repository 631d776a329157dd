#pragma once

#include "cfq/integer.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cfq {

// How a catalogue rule relates to a concrete (n, j) cell.
enum class RuleFit {
    not_applicable,
    predicted,
    skipped_nonpositive_digit, // class matched but the digit template left the domain
    skipped_imprimitive,       // class matched but the predicted period has a proper cyclic divisor
};

struct RulePrediction {
    RuleFit fit = RuleFit::not_applicable;
    Digits period; // full predicted period of sqrt(n^2+j), trailing 2n included
};

// Closed-form rule for an arithmetic class of (n, j): a membership test plus
// a digit template in n. A rule counts as applicable only when its template
// produces valid digits and a primitive (minimal) period; degenerate
// instances are reported as skips, never asserted.
class ClassRule {
public:
    using Template = std::function<std::optional<Digits>(const Integer& n, const Integer& j)>;

    ClassRule(std::string name, Template raw) : name_(std::move(name)), raw_(std::move(raw)) {}

    const std::string& name() const { return name_; }
    RulePrediction apply(const Integer& n, const Integer& j) const;

private:
    std::string name_;
    Template raw_;
};

// True when no proper divisor of the length generates the sequence cyclically.
bool is_primitive_period(std::span<const Integer> period);

// All implemented class rules: period lengths 1, 2, the j=4 / j=2n-1 / j=2n-3
// families and the nineteen congruence-class rows.
const std::vector<ClassRule>& rule_catalogue();

// Catalogue rules predicting this cell (overlaps allowed; every applicable
// rule must agree with the expansion, which verify_rules checks).
std::vector<const ClassRule*> applicable_rules(const Integer& n, const Integer& j);

// j such that sqrt(n^2+j) = [n, (1 x p, 2n) repeated], when it exists:
// j = (2n F_{p-1} + F_{p-2}) / F_p with F_{-1} = 0, F_0 = 1. No value when
// 3 | (p+1) or the quotient is not an integer in [1, 2n].
std::optional<Integer> fibonacci_ones_j(std::size_t p, const Integer& n);

struct RuleDisagreement {
    Integer n, j, N;
    Digits predicted;
    Digits actual;
};

struct RuleSkip {
    Integer n, j;
    RuleFit reason = RuleFit::not_applicable;
};

struct RuleStats {
    std::string name;
    std::uint64_t instances = 0;
    std::uint64_t agreements = 0;
    std::vector<RuleDisagreement> disagreements;
    std::vector<RuleSkip> skipped;
};

struct ConstraintViolation {
    Integer N;
    std::string detail;
};

// Shape constraints checked against every observed expansion rather than
// predicted from (n, j): the length-3 form and the all-ones Fibonacci form.
struct ConstraintStats {
    std::string name;
    std::uint64_t checked = 0;
    std::vector<ConstraintViolation> violations;
};

struct VerificationReport {
    Integer n_max;
    std::uint64_t cells = 0;
    std::vector<RuleStats> rules;
    std::vector<ConstraintStats> constraints;

    std::uint64_t total_disagreements() const;
    std::uint64_t total_violations() const;
};

// Expands sqrt(n^2+j) for every cell with n <= n_max and compares each
// applicable rule's prediction with the ground truth. Disagreements are
// report content, not errors.
VerificationReport verify_rules(const Integer& n_max);

} // namespace cfq
