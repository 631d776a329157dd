#include "cfq/period_rules.hpp"

#include "cfq/error.hpp"
#include "cfq/sqrtn.hpp"

#include <doctest.h>

#include <algorithm>

using cfq::ClassRule;
using cfq::Digits;
using cfq::Integer;
using cfq::RuleFit;

namespace {

const ClassRule& rule(const std::string& name) {
    const auto& catalogue = cfq::rule_catalogue();
    const auto it = std::find_if(catalogue.begin(), catalogue.end(),
                                 [&](const ClassRule& r) { return r.name() == name; });
    REQUIRE(it != catalogue.end());
    return *it;
}

bool lists(const std::vector<const ClassRule*>& rules, const std::string& name) {
    return std::any_of(rules.begin(), rules.end(),
                       [&](const ClassRule* r) { return r->name() == name; });
}

} // namespace

TEST_CASE("catalogue holds the five families and the nineteen rows") {
    CHECK(cfq::rule_catalogue().size() == 24);
}

TEST_CASE("pinned predictions") {
    const auto p20 = rule("j|2n").apply(4, 4);
    CHECK(p20.fit == RuleFit::predicted);
    CHECK(p20.period == Digits{2, 8}); // sqrt(20)

    const auto p23 = rule("n=5k+4, j=(8n+3)/5").apply(4, 7);
    CHECK(p23.fit == RuleFit::predicted);
    CHECK(p23.period == Digits{1, 3, 1, 8}); // sqrt(23)

    const auto p2 = rule("j=1").apply(1, 1);
    CHECK(p2.fit == RuleFit::predicted);
    CHECK(p2.period == Digits{2}); // sqrt(2)

    const auto p13 = rule("j=4").apply(3, 4);
    CHECK(p13.fit == RuleFit::predicted);
    CHECK(p13.period == Digits{1, 1, 1, 1, 6}); // sqrt(13), odd n branch

    const auto p32 = rule("j=2n-3").apply(5, 7);
    CHECK(p32.fit == RuleFit::predicted);
    CHECK(p32.period == Digits{1, 1, 1, 10}); // sqrt(32), odd n branch

    const auto p21 = rule("j=2n-3").apply(4, 5);
    CHECK(p21.fit == RuleFit::predicted);
    CHECK(p21.period == Digits{1, 1, 2, 1, 1, 8}); // sqrt(21), even n branch
}

TEST_CASE("degenerate instances are skipped, not asserted") {
    // j = 1 divides 2n but the template [2n, 2n] collapses to the length-1 period.
    CHECK(rule("j|2n").apply(3, 1).fit == RuleFit::skipped_imprimitive);
    // n=2 instantiates [1, 4, 1, 4] whose true period is [1, 4].
    CHECK(rule("n=3k+2, j=(5n+2)/3").apply(2, 4).fit == RuleFit::skipped_imprimitive);
    // The same cell is covered correctly by the length-2 rule.
    CHECK(rule("j|2n").apply(2, 4).period == Digits{1, 4});
}

TEST_CASE("is_primitive_period") {
    CHECK(cfq::is_primitive_period(Digits{1}));
    CHECK(cfq::is_primitive_period(Digits{2, 2, 12}));
    CHECK(cfq::is_primitive_period(Digits{1, 2, 1, 3}));
    CHECK_FALSE(cfq::is_primitive_period(Digits{2, 2}));
    CHECK_FALSE(cfq::is_primitive_period(Digits{1, 4, 1, 4}));
    CHECK_FALSE(cfq::is_primitive_period(Digits{3, 3, 3}));
}

TEST_CASE("applicable_rules") {
    CHECK(lists(cfq::applicable_rules(6, 5), "n=5k+1, j=(4n+1)/5"));
    CHECK(lists(cfq::applicable_rules(3, 4), "j=4"));
    CHECK(lists(cfq::applicable_rules(2, 3), "j=2n-1"));
    // Overlap: sqrt(21) belongs to two rows at once.
    const auto at21 = cfq::applicable_rules(4, 5);
    CHECK(lists(at21, "n=3k+1, j=n+1"));
    CHECK(lists(at21, "n=6k+4, j=(7n+2)/6"));
    CHECK(lists(at21, "j=2n-3"));
    CHECK_THROWS_AS(cfq::applicable_rules(3, 7), cfq::error);
}

TEST_CASE("every applicable prediction matches the engine for n <= 60") {
    for (int n = 1; n <= 60; ++n) {
        for (int j = 1; j <= 2 * n; ++j) {
            const auto rules = cfq::applicable_rules(n, j);
            if (rules.empty()) continue;
            const Digits actual = cfq::sqrt_cf(Integer(n) * n + j).period();
            for (const ClassRule* r : rules) {
                CHECK(r->apply(n, j).period == actual);
            }
        }
    }
}

TEST_CASE("fibonacci_ones_j") {
    CHECK(cfq::fibonacci_ones_j(1, 1) == Integer(2));  // sqrt(3) = [1, (1, 2)]
    CHECK(cfq::fibonacci_ones_j(1, 5) == Integer(10)); // j = 2n always works for p = 1
    CHECK_FALSE(cfq::fibonacci_ones_j(2, 3).has_value()); // p + 1 = 3
    CHECK(cfq::fibonacci_ones_j(3, 2) == Integer(3));  // sqrt(7) = [2, (1,1,1,4)]
    CHECK_FALSE(cfq::fibonacci_ones_j(3, 1).has_value()); // 5/3 is not an integer
    CHECK(cfq::fibonacci_ones_j(4, 3) == Integer(4));  // sqrt(13)
    CHECK_FALSE(cfq::fibonacci_ones_j(5, 7).has_value()); // p + 1 = 6
    CHECK(cfq::fibonacci_ones_j(6, 7) == Integer(9));  // sqrt(58)
    CHECK_THROWS_AS(cfq::fibonacci_ones_j(0, 1), cfq::error);
    CHECK_THROWS_AS(cfq::fibonacci_ones_j(1, 0), cfq::error);
}

TEST_CASE("fibonacci_ones_j predictions expand to all-one bodies") {
    for (std::size_t p = 1; p <= 9; ++p) {
        for (int n = 1; n <= 40; ++n) {
            const auto j = cfq::fibonacci_ones_j(p, n);
            if (!j) continue;
            const auto cf = cfq::sqrt_cf(Integer(n) * n + *j);
            CHECK(cf.body() == Digits(p, Integer(1)));
        }
    }
}

TEST_CASE("verify_rules(50) finds no disagreements and no constraint violations") {
    const auto report = cfq::verify_rules(50);
    CHECK(report.cells == 50 * 51); // sum of 2n
    CHECK(report.total_disagreements() == 0);
    CHECK(report.total_violations() == 0);

    const auto j1 = std::find_if(report.rules.begin(), report.rules.end(),
                                 [](const auto& r) { return r.name == "j=1"; });
    REQUIRE(j1 != report.rules.end());
    CHECK(j1->instances == 50); // one instance per n
    CHECK(j1->agreements == 50);

    bool some_skips = false;
    std::uint64_t applied = 0;
    for (const auto& r : report.rules) {
        applied += r.instances;
        some_skips = some_skips || !r.skipped.empty();
    }
    CHECK(applied > 300);
    CHECK(some_skips); // the j=1 collapse of the length-2 rule is logged

    REQUIRE(report.constraints.size() == 2);
    CHECK(report.constraints[0].checked > 0); // length-3 periods do occur
    CHECK(report.constraints[1].checked > 0); // all-ones bodies do occur
}
