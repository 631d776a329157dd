#pragma once

#include "cfq/integer.hpp"
#include "cfq/sqrtn.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace cfq {

// A per-N predicate over the expansion of sqrt(N). Theorem-class predicates
// are expected to hold everywhere; the others are conjectures or known-false
// observations whose failures are findings, not errors.
struct ScanPredicate {
    std::string name;
    bool theorem = false;
    // nullopt means the predicate does not apply to this N (skip).
    std::function<std::optional<bool>(const SqrtCF&)> eval;
};

// Registry order is the report order:
//   palindrome            (theorem)  body reads the same both ways
//   period-le-2N          (theorem)  period length <= 2N
//   period-le-2n          (false for N=1726) period length <= 2n
//   body-le-n             (open)     every body digit <= n
//   no-odd-period-j3mod4  (open)     j = 3 (mod 4) implies even period length
const std::vector<ScanPredicate>& scan_predicates();

struct ScanConfig {
    Integer n_min;
    Integer n_max;
    std::vector<std::string> checks; // empty = all predicates
    std::string out_path;            // empty = no record file
    std::size_t emit_digits_max = 64;
    unsigned jobs = 1;
};

struct PredicateTally {
    std::string name;
    bool theorem = false;
    std::uint64_t pass = 0;
    std::uint64_t fail = 0;
    std::uint64_t skip = 0;
    std::vector<Integer> failing; // every failing N, in order
};

struct ScanSummary {
    Integer n_min;
    Integer n_max;
    std::uint64_t total = 0;   // integers in the range
    std::uint64_t squares = 0; // skipped perfect squares
    std::uint64_t checked = 0; // expanded non-squares
    std::vector<PredicateTally> tallies;

    std::uint64_t theorem_failures() const;
    std::uint64_t conjecture_failures() const;
};

// Scans every N in [n_min, n_max]: perfect squares are counted and skipped,
// every other N is expanded once and run through the selected predicates.
// Writes one JSON record per non-square N to out_path when set (digit
// sequences included only while the period length stays within
// emit_digits_max). The record stream and summary are byte-deterministic
// and independent of the worker count.
ScanSummary run_scan(const ScanConfig& config);

} // namespace cfq
