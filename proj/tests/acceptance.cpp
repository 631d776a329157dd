// Acceptance suite: runs every gate of the engine at full scale and prints
// one pass/fail line per criterion. Exit status is the number of failures.

#include "cfq/approx.hpp"
#include "cfq/error.hpp"
#include "cfq/finite_cf.hpp"
#include "cfq/period_rules.hpp"
#include "cfq/scan.hpp"
#include "cfq/serialize.hpp"
#include "cfq/sqrtn.hpp"
#include "cfq/surd.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using cfq::Digits;
using cfq::Integer;
using cfq::PeriodicCF;
using cfq::QuadraticSurd;
using cfq::Rational;

namespace {

constexpr long kSweepMax = 100000;
constexpr long kReconstructMax = 10000;

// F_{-1} = 0, F_0 = 1, shifted by one so fib(p) = F_{p-1}. Returns a copy:
// the growing table may reallocate between calls within one expression.
Integer fib(std::size_t index_plus_one) {
    static std::vector<Integer> table{0, 1};
    while (table.size() <= index_plus_one)
        table.push_back(table[table.size() - 2] + table.back());
    return table[index_plus_one];
}

struct Sweep {
    std::uint64_t expanded = 0;
    std::uint64_t len1_cases = 0, len1_bad = 0;
    std::uint64_t len2_cases = 0, len2_bad = 0;
    std::uint64_t len3_cases = 0, len3_bad = 0;
    std::uint64_t reconstruct_cases = 0, reconstruct_bad = 0;
    std::uint64_t bound2n_small_bad = 0; // N <= 1000
    std::uint64_t bound2n_cases = 0, bound2n_bad = 0; // N <= 10^4, Theorem bound 2N
    std::uint64_t body_gt_n = 0;
    std::uint64_t odd_j3mod4 = 0, j3mod4_cases = 0;
    std::uint64_t ones_cases = 0, ones_bad = 0;
};

const Sweep& sweep() {
    static const Sweep data = [] {
        Sweep s;
        for (long N = 2; N <= kSweepMax; ++N) {
            if (cfq::is_square(N)) continue;
            const cfq::SqrtCF cf = cfq::sqrt_cf(N);
            ++s.expanded;
            const Integer& n = cf.n();
            const Integer& j = cf.j();
            const std::size_t len = cf.period_length();
            const Digits period = cf.period();

            // Period length 1 arises exactly for j = 1, with period [2n].
            if (len == 1 || j == 1) {
                ++s.len1_cases;
                if (!(len == 1 && j == 1 && period == Digits{2 * n})) ++s.len1_bad;
            }

            // Period length 2 arises exactly for j | 2n, j > 1, as [2n/j, 2n].
            const bool divides = (2 * n) % j == 0 && j != 1;
            if (len == 2 || divides) {
                ++s.len2_cases;
                if (!(len == 2 && divides && period == Digits{2 * n / j, 2 * n})) ++s.len2_bad;
            }

            // Period length 3 forces an odd j, body (x, x) with x even and
            // j = (2xn + 1) / (x^2 + 1).
            if (len == 3) {
                ++s.len3_cases;
                const Integer& x = cf.body()[0];
                if (!(j % 2 == 1 && cf.body()[0] == cf.body()[1] && x % 2 == 0 &&
                      j * (x * x + 1) == 2 * x * n + 1))
                    ++s.len3_bad;
            }

            // Palindrome + exact reconstruction.
            if (N <= kReconstructMax) {
                ++s.reconstruct_cases;
                bool ok = cfq::palindrome_check(cf.body());
                if (ok) {
                    const Rational back = cfq::reconstruct_N(n, cf.body());
                    ok = back.den() == 1 && back.num() == N;
                }
                if (!ok) ++s.reconstruct_bad;

                ++s.bound2n_cases;
                if (Integer(len) > 2 * Integer(N)) ++s.bound2n_bad;
            }
            if (N <= 1000 && Integer(len) > 2 * n) ++s.bound2n_small_bad;

            // Open observations.
            for (const Integer& d : cf.body()) {
                if (d > n) {
                    ++s.body_gt_n;
                    break;
                }
            }
            if (j % 4 == 3) {
                ++s.j3mod4_cases;
                if (len % 2 == 1) ++s.odd_j3mod4;
            }

            // All-ones bodies follow the Fibonacci quotient rule.
            if (!cf.body().empty()) {
                bool all_ones = true;
                for (const Integer& d : cf.body()) {
                    if (d != 1) {
                        all_ones = false;
                        break;
                    }
                }
                if (all_ones) {
                    ++s.ones_cases;
                    const std::size_t p = cf.body().size();
                    const bool ok = (p + 1) % 3 != 0 &&
                                    j * fib(p + 1) == 2 * n * fib(p) + fib(p - 1);
                    if (!ok) ++s.ones_bad;
                }
            }
        }
        return s;
    }();
    return data;
}

struct Outcome {
    bool ok = false;
    std::string detail;
};

Outcome criterion_golden_ratio() {
    const QuadraticSurd golden = cfq::from_polynomial({1, -1, -1}, cfq::RootChoice::larger);
    const PeriodicCF cf = cfq::expand(golden);
    const bool ok = cf.preperiod.empty() && cf.period == Digits{1} && cfq::is_reduced(golden);
    return {ok, "expansion " + cfq::to_json(cf).dump()};
}

Outcome criterion_length1() {
    const Sweep& s = sweep();
    return {s.len1_bad == 0, std::to_string(s.len1_cases) + " cases, " +
                                 std::to_string(s.len1_bad) + " exceptions"};
}

Outcome criterion_length2() {
    const Sweep& s = sweep();
    return {s.len2_bad == 0, std::to_string(s.len2_cases) + " cases, " +
                                 std::to_string(s.len2_bad) + " exceptions"};
}

Outcome criterion_length3() {
    const Sweep& s = sweep();
    return {s.len3_cases > 0 && s.len3_bad == 0, std::to_string(s.len3_cases) + " cases, " +
                                                     std::to_string(s.len3_bad) + " exceptions"};
}

Outcome criterion_rule_catalogue() {
    const cfq::VerificationReport report = cfq::verify_rules(200);
    std::uint64_t applied = 0;
    for (const auto& rule : report.rules) applied += rule.instances;
    const bool ok = applied > 1000 && report.total_disagreements() == 0 &&
                    report.total_violations() == 0;
    return {ok, std::to_string(applied) + " rule instances over " + std::to_string(report.cells) +
                    " cells, " + std::to_string(report.total_disagreements()) + " disagreements"};
}

Outcome criterion_reconstruction() {
    const Sweep& s = sweep();
    return {s.reconstruct_cases > 0 && s.reconstruct_bad == 0,
            std::to_string(s.reconstruct_cases) + " cases, " +
                std::to_string(s.reconstruct_bad) + " exceptions"};
}

Outcome criterion_counterexample_1726() {
    const std::size_t len = cfq::period_length(1726);
    const Sweep& s = sweep();
    const bool ok = len == 88 && 88 > 2 * 41 && s.bound2n_small_bad == 0;
    return {ok, "period_length(1726) = " + std::to_string(len) + ", violations below 1000: " +
                    std::to_string(s.bound2n_small_bad)};
}

Outcome criterion_period_bound_2N() {
    const Sweep& s = sweep();
    return {s.bound2n_cases > 0 && s.bound2n_bad == 0,
            std::to_string(s.bound2n_cases) + " cases, " + std::to_string(s.bound2n_bad) +
                " exceptions"};
}

Outcome criterion_reversal() {
    std::uint64_t checked = 0, bad = 0;
    for (int d = 2; d <= 200; ++d) {
        if (cfq::is_square(d)) continue;
        for (int p = -20; p <= 20; ++p) {
            for (int q = -20; q <= 20; ++q) {
                if (q == 0) continue;
                if ((Integer(d) - Integer(p) * p) % q != 0) continue;
                const QuadraticSurd s(p, d, q);
                if (!cfq::is_reduced(s)) continue;
                ++checked;
                const auto [fwd, rev] = cfq::reversal_pair(s);
                const Digits reversed(fwd.period.rbegin(), fwd.period.rend());
                if (!(fwd.preperiod.empty() && rev.preperiod.empty() && rev.period == reversed))
                    ++bad;
            }
        }
    }
    return {checked > 0 && bad == 0,
            std::to_string(checked) + " reduced surds, " + std::to_string(bad) + " exceptions"};
}

Outcome criterion_approximation() {
    std::uint64_t targets = 0, violations = 0;
    for (int N = 2; N <= 500; ++N) {
        if (cfq::is_square(N)) continue;
        ++targets;
        const QuadraticSurd x = QuadraticSurd::sqrt_of(N);
        violations += cfq::check_best_approximation(x, 10).violations.size();
        violations += cfq::check_half_q_squared(x, 10).violations.size();
        violations += cfq::check_legendre(x, 1000).non_convergent.size();
    }
    return {targets > 0 && violations == 0,
            std::to_string(targets) + " targets, " + std::to_string(violations) + " violations"};
}

Outcome criterion_conjecture_scan() {
    const Sweep& s = sweep();
    bool deterministic = true;
    {
        // The record stream must not depend on the run or the worker count.
        const std::string path_a = "acceptance_scan_a.jsonl";
        const std::string path_b = "acceptance_scan_b.jsonl";
        cfq::ScanConfig config;
        config.n_min = 2;
        config.n_max = 30000;
        config.out_path = path_a;
        cfq::run_scan(config);
        config.out_path = path_b;
        config.jobs = 4;
        cfq::run_scan(config);
        const auto slurp = [](const std::string& path) {
            std::ifstream in(path, std::ios::binary);
            std::ostringstream buf;
            buf << in.rdbuf();
            return buf.str();
        };
        const std::string bytes = slurp(path_a);
        deterministic = !bytes.empty() && bytes == slurp(path_b);
        std::remove(path_a.c_str());
        std::remove(path_b.c_str());
    }
    const bool ok = s.body_gt_n == 0 && s.odd_j3mod4 == 0 && deterministic;
    return {ok, "body>n: " + std::to_string(s.body_gt_n) + ", odd period at j=4k+3: " +
                    std::to_string(s.odd_j3mod4) + " (of " + std::to_string(s.j3mod4_cases) +
                    "), deterministic: " + (deterministic ? "yes" : "no")};
}

Outcome criterion_fibonacci_ones() {
    const Sweep& s = sweep();
    return {s.ones_cases > 0 && s.ones_bad == 0,
            std::to_string(s.ones_cases) + " all-ones bodies, " + std::to_string(s.ones_bad) +
                " exceptions"};
}

struct Criterion {
    const char* title;
    std::function<Outcome()> run;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"golden ratio is purely periodic with period [1]", criterion_golden_ratio},
        {"period length 1 iff j=1, digits [n,(2n)], N<=1e5", criterion_length1},
        {"period length 2 iff j|2n (j>1), digits [n,(2n/j,2n)], N<=1e5", criterion_length2},
        {"period length 3 has body (x,x), x even, j=(2xn+1)/(x^2+1), N<=1e5", criterion_length3},
        {"all class rules match expansions exactly for n<=200", criterion_rule_catalogue},
        {"palindrome body and exact reconstruction, N<=1e4", criterion_reconstruction},
        {"period_length(1726)=88>82 and no 2n-bound violation below 1000", criterion_counterexample_1726},
        {"period length <= 2N, N<=1e4", criterion_period_bound_2N},
        {"reversal: period(-1/conj) is the reversed period, full family", criterion_reversal},
        {"approximation oracles: zero violations, sqrt(N), N<=500", criterion_approximation},
        {"conjecture scan clean over N<=1e5, deterministic records", criterion_conjecture_scan},
        {"all-ones bodies follow the Fibonacci j-formula, N<=1e5", criterion_fibonacci_ones},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criteria[i].run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        std::printf("[%2zu/%zu] %s  %s (%s; %lld ms)\n", i + 1, criteria.size(),
                    outcome.ok ? "PASS" : "FAIL", criteria[i].title, outcome.detail.c_str(),
                    static_cast<long long>(ms));
        std::fflush(stdout);
        if (!outcome.ok) ++failures;
    }
    std::printf("ACCEPTANCE: %zu/%zu criteria passed\n", criteria.size() - failures,
                criteria.size());
    return failures;
}
