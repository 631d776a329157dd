#include "cfq/period_rules.hpp"

#include "cfq/error.hpp"
#include "cfq/sqrtn.hpp"

namespace cfq {

RulePrediction ClassRule::apply(const Integer& n, const Integer& j) const {
    std::optional<Digits> digits = raw_(n, j);
    if (!digits) return {};
    for (const Integer& d : *digits) {
        if (d < 1) return {RuleFit::skipped_nonpositive_digit, std::move(*digits)};
    }
    if (!is_primitive_period(*digits)) return {RuleFit::skipped_imprimitive, std::move(*digits)};
    return {RuleFit::predicted, std::move(*digits)};
}

bool is_primitive_period(std::span<const Integer> period) {
    const std::size_t len = period.size();
    for (std::size_t d = 1; d < len; ++d) {
        if (len % d != 0) continue;
        bool generates = true;
        for (std::size_t i = d; i < len && generates; ++i) {
            generates = period[i] == period[i % d];
        }
        if (generates) return false;
    }
    return true;
}

namespace {

Digits with_last(Digits body, const Integer& n) {
    body.push_back(2 * n);
    return body;
}

// Congruence-class row: n = m k + r with k >= k_min, j = (a n + b) / c when
// the division is exact, body digits given by a template in n.
ClassRule row(std::string name, unsigned m, unsigned r, unsigned k_min, Integer a, Integer b,
              Integer c, std::function<Digits(const Integer&)> body) {
    return ClassRule(
        std::move(name),
        [m, r, k_min, a = std::move(a), b = std::move(b), c = std::move(c),
         body = std::move(body)](const Integer& n, const Integer& j) -> std::optional<Digits> {
            if (n < Integer(r) + Integer(m) * k_min) return std::nullopt;
            if (n % m != r) return std::nullopt;
            const Integer num = a * n + b;
            if (num % c != 0 || j != num / c) return std::nullopt;
            return with_last(body(n), n);
        });
}

std::vector<ClassRule> build_catalogue() {
    std::vector<ClassRule> rules;

    rules.emplace_back("j=1", [](const Integer& n, const Integer& j) -> std::optional<Digits> {
        if (j != 1) return std::nullopt;
        return Digits{2 * n};
    });

    rules.emplace_back("j|2n", [](const Integer& n, const Integer& j) -> std::optional<Digits> {
        if ((2 * n) % j != 0) return std::nullopt;
        return Digits{2 * n / j, 2 * n};
    });

    rules.emplace_back("j=4", [](const Integer& n, const Integer& j) -> std::optional<Digits> {
        if (j != 4) return std::nullopt;
        if (n % 2 == 0) return Digits{n / 2, 2 * n};
        const Integer h = (n - 1) / 2;
        return Digits{h, 1, 1, h, 2 * n};
    });

    rules.emplace_back("j=2n-1", [](const Integer& n, const Integer& j) -> std::optional<Digits> {
        if (n <= 1 || j != 2 * n - 1) return std::nullopt;
        return Digits{1, n - 1, 1, 2 * n};
    });

    rules.emplace_back("j=2n-3", [](const Integer& n, const Integer& j) -> std::optional<Digits> {
        if (n <= 3 || j != 2 * n - 3) return std::nullopt;
        if (n % 2 == 1) return Digits{1, (n - 3) / 2, 1, 2 * n};
        const Integer h = n / 2 - 1;
        return Digits{1, h, 2, h, 1, 2 * n};
    });

    rules.push_back(row("n=5k+1, j=(4n+1)/5", 5, 1, 1, 4, 1, 5,
                        [](const Integer&) { return Digits{2, 2}; }));
    rules.push_back(row("n=6k+5, j=(2n-1)/3", 6, 5, 0, 2, -1, 3,
                        [](const Integer& n) { return Digits{3, (n - 1) / 2, 3}; }));
    rules.push_back(row("n=9k+4, j=n-2", 9, 4, 1, 1, -2, 1,
                        [](const Integer& n) { return Digits{2, (2 * n - 8) / 9, 2}; }));
    rules.push_back(row("n=5k+4, j=(8n+3)/5", 5, 4, 0, 8, 3, 5,
                        [](const Integer&) { return Digits{1, 3, 1}; }));
    rules.push_back(row("n=3k+2, j=(5n+2)/3", 3, 2, 0, 5, 2, 3,
                        [](const Integer&) { return Digits{1, 4, 1}; }));
    rules.push_back(row("n=3k+2, j=2n-2", 3, 2, 1, 2, -2, 1,
                        [](const Integer& n) { return Digits{1, (2 * n - 4) / 3, 1}; }));
    rules.push_back(row("n=3k+2, j=(4n+1)/3", 3, 2, 0, 4, 1, 3,
                        [](const Integer&) { return Digits{1, 1, 1}; }));
    rules.push_back(row("n=2k+1, j=(3n+1)/2", 2, 1, 1, 3, 1, 2,
                        [](const Integer&) { return Digits{1, 2, 1}; }));
    rules.push_back(row("n=5k+2, j=n-1", 5, 2, 1, 1, -1, 1,
                        [](const Integer& n) { return Digits{2, (2 * n - 4) / 5, 2}; }));
    rules.push_back(row("n=6k+1, j=(5n+1)/6", 6, 1, 1, 5, 1, 6,
                        [](const Integer&) { return Digits{2, 2, 2}; }));
    rules.push_back(row("n=5k+3, j=(6n+2)/5", 5, 3, 0, 6, 2, 5,
                        [](const Integer&) { return Digits{1, 1, 1, 1}; }));
    rules.push_back(row("n=10k+7, j=(2n+1)/5", 10, 7, 0, 2, 1, 5,
                        [](const Integer& n) { return Digits{4, 1, (n - 3) / 2, 1, 4}; }));
    rules.push_back(row("n=3k+1, j=(2n+1)/3", 3, 1, 1, 2, 1, 3,
                        [](const Integer& n) { return Digits{2, 1, n - 1, 1, 2}; }));
    rules.push_back(row("n=3k+1, j=n+1", 3, 1, 1, 1, 1, 1,
                        [](const Integer& n) { return Digits{1, 1, (2 * n - 2) / 3, 1, 1}; }));
    rules.push_back(row("n=7k+3, j=n+2", 7, 3, 1, 1, 2, 1,
                        [](const Integer& n) { return Digits{1, 1, (2 * n - 6) / 7, 1, 1}; }));
    rules.push_back(row("n=6k+4, j=(7n+2)/6", 6, 4, 0, 7, 2, 6,
                        [](const Integer&) { return Digits{1, 1, 2, 1, 1}; }));
    rules.push_back(row("n=3k+1, j=(4n+2)/3", 3, 1, 1, 4, 2, 3,
                        [](const Integer& n) { return Digits{1, 2, n, 2, 1}; }));
    rules.push_back(row("n=7k+5, j=(8n+2)/7", 7, 5, 0, 8, 2, 7,
                        [](const Integer& n) { return Digits{1, 1, 3, n, 3, 1, 1}; }));
    rules.push_back(row("n=6k+2, j=(2n-1)/3", 6, 2, 1, 2, -1, 3, [](const Integer& n) {
        const Integer h = (n - 2) / 2;
        return Digits{3, h, 1, 4, 1, h, 3};
    }));

    return rules;
}

} // namespace

const std::vector<ClassRule>& rule_catalogue() {
    static const std::vector<ClassRule> catalogue = build_catalogue();
    return catalogue;
}

std::vector<const ClassRule*> applicable_rules(const Integer& n, const Integer& j) {
    if (n < 1 || j < 1 || j > 2 * n) fail(errc::invalid_argument, "applicable_rules: need 1 <= j <= 2n");
    std::vector<const ClassRule*> out;
    for (const ClassRule& rule : rule_catalogue()) {
        if (rule.apply(n, j).fit == RuleFit::predicted) out.push_back(&rule);
    }
    return out;
}

std::optional<Integer> fibonacci_ones_j(std::size_t p, const Integer& n) {
    if (p < 1) fail(errc::domain_error, "fibonacci_ones_j: p must be >= 1");
    if (n < 1) fail(errc::domain_error, "fibonacci_ones_j: n must be >= 1");
    if ((p + 1) % 3 == 0) return std::nullopt;
    // F_{-1} = 0, F_0 = 1; advance to F_{p-2}, F_{p-1}, F_p.
    Integer f_before = 0, f_prev = 0, f_cur = 1; // F_{-2} placeholder, F_{-1}, F_0
    for (std::size_t m = 1; m <= p; ++m) {
        Integer next = f_prev + f_cur;
        f_before = std::move(f_prev);
        f_prev = f_cur;
        f_cur = std::move(next);
    }
    const Integer num = 2 * n * f_prev + f_before;
    if (num % f_cur != 0) return std::nullopt;
    const Integer j = num / f_cur;
    if (j < 1 || j > 2 * n) return std::nullopt;
    return j;
}

std::uint64_t VerificationReport::total_disagreements() const {
    std::uint64_t total = 0;
    for (const RuleStats& r : rules) total += r.disagreements.size();
    return total;
}

std::uint64_t VerificationReport::total_violations() const {
    std::uint64_t total = 0;
    for (const ConstraintStats& c : constraints) total += c.violations.size();
    return total;
}

VerificationReport verify_rules(const Integer& n_max) {
    if (n_max < 1) fail(errc::invalid_argument, "verify_rules: n_max must be >= 1");

    VerificationReport report;
    report.n_max = n_max;
    for (const ClassRule& rule : rule_catalogue()) report.rules.push_back({rule.name(), 0, 0, {}, {}});
    report.constraints.push_back({"length-3 form: body (x,x), x even, j=(2xn+1)/(x^2+1)", 0, {}});
    report.constraints.push_back({"all-ones body: 3 does not divide p+1, j=(2nF(p-1)+F(p-2))/F(p)", 0, {}});
    ConstraintStats& len3 = report.constraints[0];
    ConstraintStats& ones = report.constraints[1];

    const std::vector<ClassRule>& catalogue = rule_catalogue();
    for (Integer n = 1; n <= n_max; ++n) {
        for (Integer j = 1; j <= 2 * n; ++j) {
            ++report.cells;
            const Integer N = n * n + j;
            const SqrtCF ground = sqrt_cf(N);
            const Digits actual = ground.period();

            for (std::size_t i = 0; i < catalogue.size(); ++i) {
                RulePrediction pred = catalogue[i].apply(n, j);
                RuleStats& stats = report.rules[i];
                switch (pred.fit) {
                case RuleFit::not_applicable:
                    break;
                case RuleFit::predicted:
                    ++stats.instances;
                    if (pred.period == actual) {
                        ++stats.agreements;
                    } else {
                        stats.disagreements.push_back({n, j, N, std::move(pred.period), actual});
                    }
                    break;
                default:
                    stats.skipped.push_back({n, j, pred.fit});
                    break;
                }
            }

            // Observed length 3: necessary form of the body.
            if (ground.period_length() == 3) {
                ++len3.checked;
                const Integer& x = ground.body()[0];
                const bool ok = j % 2 == 1 && ground.body()[0] == ground.body()[1] && x % 2 == 0 &&
                                j * (x * x + 1) == 2 * x * n + 1;
                if (!ok) len3.violations.push_back({N, "body " + to_decimal(ground.body()[0]) + "," +
                                                           to_decimal(ground.body()[1])});
            }

            // Observed all-ones body: the Fibonacci quotient must reproduce j.
            const Digits& body = ground.body();
            if (!body.empty()) {
                bool all_ones = true;
                for (const Integer& d : body) {
                    if (d != 1) {
                        all_ones = false;
                        break;
                    }
                }
                if (all_ones) {
                    ++ones.checked;
                    const std::size_t p = body.size();
                    const std::optional<Integer> expect = fibonacci_ones_j(p, n);
                    if ((p + 1) % 3 == 0 || !expect || *expect != j)
                        ones.violations.push_back({N, "p=" + std::to_string(p)});
                }
            }
        }
    }
    return report;
}

} // namespace cfq
