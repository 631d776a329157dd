#include "cfq/serialize.hpp"

#include "cfq/error.hpp"
#include "cfq/scan.hpp"

namespace cfq {

Json digits_json(std::span<const Integer> digits) {
    Json out = Json::array();
    for (const Integer& d : digits) out.push_back(to_decimal(d));
    return out;
}

Digits digits_from_json(const Json& array) {
    if (!array.is_array()) fail(errc::parse_error, "expected a JSON array of decimal strings");
    Digits out;
    out.reserve(array.size());
    for (const Json& item : array) {
        if (item.is_string())
            out.push_back(parse_integer(item.get<std::string>()));
        else if (item.is_number_integer())
            out.push_back(Integer(item.get<long long>()));
        else
            fail(errc::parse_error, "digit entries must be decimal strings");
    }
    return out;
}

Json to_json(const FiniteCF& cf) { return digits_json(cf.digits()); }

FiniteCF finite_cf_from_json(const Json& array) { return FiniteCF(digits_from_json(array)); }

Json to_json(const PeriodicCF& cf) {
    Json out = Json::object();
    out["preperiod"] = digits_json(cf.preperiod);
    out["period"] = digits_json(cf.period);
    return out;
}

Json to_json(const SqrtCF& cf) {
    Json out = Json::object();
    out["N"] = to_decimal(cf.N());
    out["n"] = to_decimal(cf.n());
    out["j"] = to_decimal(cf.j());
    out["body"] = digits_json(cf.body());
    out["last"] = to_decimal(cf.last());
    out["period_length"] = cf.period_length();
    return out;
}

Json to_json(const QuadraticSurd& s) {
    Json out = Json::object();
    out["p"] = to_decimal(s.p());
    out["d"] = to_decimal(s.d());
    out["q"] = to_decimal(s.q());
    return out;
}

namespace {

const char* fit_name(RuleFit fit) {
    switch (fit) {
    case RuleFit::skipped_nonpositive_digit: return "nonpositive-digit";
    case RuleFit::skipped_imprimitive: return "imprimitive-period";
    default: return "n/a";
    }
}

} // namespace

Json to_json(const VerificationReport& report) {
    Json out = Json::object();
    out["n_max"] = to_decimal(report.n_max);
    out["cells"] = report.cells;
    Json rules = Json::array();
    for (const RuleStats& stats : report.rules) {
        Json r = Json::object();
        r["name"] = stats.name;
        r["instances"] = stats.instances;
        r["agreements"] = stats.agreements;
        Json disagreements = Json::array();
        for (const RuleDisagreement& d : stats.disagreements) {
            Json item = Json::object();
            item["n"] = to_decimal(d.n);
            item["j"] = to_decimal(d.j);
            item["N"] = to_decimal(d.N);
            item["predicted"] = digits_json(d.predicted);
            item["actual"] = digits_json(d.actual);
            disagreements.push_back(std::move(item));
        }
        r["disagreements"] = std::move(disagreements);
        Json skipped = Json::array();
        for (const RuleSkip& s : stats.skipped) {
            Json item = Json::object();
            item["n"] = to_decimal(s.n);
            item["j"] = to_decimal(s.j);
            item["reason"] = fit_name(s.reason);
            skipped.push_back(std::move(item));
        }
        r["skipped"] = std::move(skipped);
        rules.push_back(std::move(r));
    }
    out["rules"] = std::move(rules);
    Json constraints = Json::array();
    for (const ConstraintStats& stats : report.constraints) {
        Json c = Json::object();
        c["name"] = stats.name;
        c["checked"] = stats.checked;
        Json violations = Json::array();
        for (const ConstraintViolation& v : stats.violations) {
            Json item = Json::object();
            item["N"] = to_decimal(v.N);
            item["detail"] = v.detail;
            violations.push_back(std::move(item));
        }
        c["violations"] = std::move(violations);
        constraints.push_back(std::move(c));
    }
    out["constraints"] = std::move(constraints);
    out["total_disagreements"] = report.total_disagreements();
    out["total_violations"] = report.total_violations();
    return out;
}

Json scan_record_json(const SqrtCF& cf, bool with_digits) {
    Json out = Json::object();
    out["N"] = to_decimal(cf.N());
    out["n"] = to_decimal(cf.n());
    out["j"] = to_decimal(cf.j());
    out["period_length"] = cf.period_length();
    Integer body_max = 0;
    for (const Integer& d : cf.body()) body_max = std::max(body_max, d);
    out["body_max_digit"] = to_decimal(body_max);
    if (with_digits) out["digits"] = to_json(cf.periodic_cf());
    return out;
}

Json to_json(const ScanSummary& summary) {
    Json out = Json::object();
    out["n_min"] = to_decimal(summary.n_min);
    out["n_max"] = to_decimal(summary.n_max);
    out["total"] = summary.total;
    out["squares"] = summary.squares;
    out["checked"] = summary.checked;
    Json predicates = Json::array();
    for (const PredicateTally& tally : summary.tallies) {
        Json p = Json::object();
        p["name"] = tally.name;
        p["class"] = tally.theorem ? "theorem" : "conjecture";
        p["pass"] = tally.pass;
        p["fail"] = tally.fail;
        p["skip"] = tally.skip;
        Json failing = Json::array();
        for (const Integer& N : tally.failing) failing.push_back(to_decimal(N));
        p["failing"] = std::move(failing);
        predicates.push_back(std::move(p));
    }
    out["predicates"] = std::move(predicates);
    out["theorem_failures"] = summary.theorem_failures();
    out["conjecture_failures"] = summary.conjecture_failures();
    return out;
}

} // namespace cfq
