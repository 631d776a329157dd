#pragma once

#include "cfq/finite_cf.hpp"
#include "cfq/integer.hpp"
#include "cfq/period_rules.hpp"
#include "cfq/sqrtn.hpp"
#include "cfq/surd.hpp"

#include <json.hpp>

namespace cfq {

// All integers cross the wire as decimal strings so arbitrary precision
// survives any JSON parser. Key order is fixed (insertion order), which
// keeps emitted reports byte-deterministic.
using Json = nlohmann::ordered_json;

Json digits_json(std::span<const Integer> digits);
Digits digits_from_json(const Json& array);

// ["4","2","6","7"]
Json to_json(const FiniteCF& cf);
FiniteCF finite_cf_from_json(const Json& array);

// {"preperiod":["1"],"period":["2"]}
Json to_json(const PeriodicCF& cf);

// {"N":"41","n":"6","j":"5","body":["2","2"],"last":"12","period_length":3}
Json to_json(const SqrtCF& cf);

Json to_json(const QuadraticSurd& s);

Json to_json(const VerificationReport& report);

// One scan line; digit sequences only when with_digits is set.
Json scan_record_json(const SqrtCF& cf, bool with_digits);

struct ScanSummary;
Json to_json(const ScanSummary& summary);

} // namespace cfq
