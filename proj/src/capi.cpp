#include "cfquad.h"

#include "cfq/approx.hpp"
#include "cfq/error.hpp"
#include "cfq/finite_cf.hpp"
#include "cfq/period_rules.hpp"
#include "cfq/scan.hpp"
#include "cfq/serialize.hpp"
#include "cfq/sqrtn.hpp"
#include "cfq/surd.hpp"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct cfq_surd {
    cfq::QuadraticSurd value;
};

namespace {

thread_local std::string t_last_error;

cfq_status map_code(cfq::errc code) {
    using cfq::errc;
    switch (code) {
    case errc::invalid_argument: return CFQ_ERROR_INVALID_ARGUMENT;
    case errc::parse_error: return CFQ_ERROR_PARSE;
    case errc::domain_error: return CFQ_ERROR_DOMAIN;
    case errc::square_input: return CFQ_ERROR_SQUARE_INPUT;
    case errc::invalid_surd: return CFQ_ERROR_INVALID_SURD;
    case errc::rational_surd: return CFQ_ERROR_RATIONAL_SURD;
    case errc::rational_root: return CFQ_ERROR_RATIONAL_ROOT;
    case errc::complex_root: return CFQ_ERROR_COMPLEX_ROOT;
    case errc::not_purely_periodic: return CFQ_ERROR_NOT_PURELY_PERIODIC;
    case errc::iteration_limit: return CFQ_ERROR_ITERATION_LIMIT;
    case errc::shape_violation: return CFQ_ERROR_SHAPE;
    case errc::io_error: return CFQ_ERROR_IO;
    }
    return CFQ_ERROR_INTERNAL;
}

// Runs the body with exceptions mapped to status codes; nothing may cross
// the C boundary.
template <typename Fn>
cfq_status guarded(Fn&& body) noexcept {
    try {
        t_last_error.clear();
        body();
        return CFQ_OK;
    } catch (const cfq::error& e) {
        t_last_error = e.what();
        return map_code(e.code());
    } catch (const std::bad_alloc&) {
        t_last_error = "out of memory";
        return CFQ_ERROR_INTERNAL;
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return CFQ_ERROR_INTERNAL;
    } catch (...) {
        t_last_error = "unknown error";
        return CFQ_ERROR_INTERNAL;
    }
}

char* dup_string(const std::string& text) {
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

template <typename T>
T* require(T* value, const char* name) {
    if (!value) cfq::fail(cfq::errc::invalid_argument, std::string(name) + " must not be null");
    return value;
}

cfq::Integer parse_arg(const char* value, const char* name) {
    return cfq::parse_integer(require(value, name));
}

cfq::Json parse_json_arg(const char* text, const char* name) {
    const cfq::Json parsed = cfq::Json::parse(require(text, name), nullptr, false);
    if (parsed.is_discarded())
        cfq::fail(cfq::errc::parse_error, std::string(name) + " is not valid JSON");
    return parsed;
}

} // namespace

extern "C" {

const char* cfq_status_name(cfq_status status) {
    switch (status) {
    case CFQ_OK: return "ok";
    case CFQ_ERROR_INVALID_ARGUMENT: return "invalid-argument";
    case CFQ_ERROR_PARSE: return "parse-error";
    case CFQ_ERROR_DOMAIN: return "domain-error";
    case CFQ_ERROR_SQUARE_INPUT: return "square-input";
    case CFQ_ERROR_INVALID_SURD: return "invalid-surd";
    case CFQ_ERROR_RATIONAL_SURD: return "rational-surd";
    case CFQ_ERROR_RATIONAL_ROOT: return "rational-root";
    case CFQ_ERROR_COMPLEX_ROOT: return "complex-root";
    case CFQ_ERROR_NOT_PURELY_PERIODIC: return "not-purely-periodic";
    case CFQ_ERROR_ITERATION_LIMIT: return "iteration-limit";
    case CFQ_ERROR_SHAPE: return "shape-violation";
    case CFQ_ERROR_IO: return "io-error";
    case CFQ_ERROR_INTERNAL: return "internal-error";
    }
    return "unknown";
}

const char* cfq_last_error(void) { return t_last_error.c_str(); }

void cfq_string_free(char* text) { std::free(text); }

cfq_status cfq_rational_cf(const char* num, const char* den, char** out_json) {
    return guarded([&] {
        require(out_json, "out_json");
        const cfq::Rational x(parse_arg(num, "num"), parse_arg(den, "den"));
        *out_json = dup_string(cfq::to_json(cfq::rational_cf(x)).dump());
    });
}

cfq_status cfq_cf_eval(const char* digits_json, char** out_num, char** out_den) {
    return guarded([&] {
        require(out_num, "out_num");
        require(out_den, "out_den");
        const cfq::FiniteCF cf = cfq::finite_cf_from_json(parse_json_arg(digits_json, "digits"));
        const cfq::Rational value = cfq::eval_cf(cf);
        char* num = dup_string(cfq::to_decimal(value.num()));
        try {
            *out_den = dup_string(cfq::to_decimal(value.den()));
        } catch (...) {
            std::free(num);
            throw;
        }
        *out_num = num;
    });
}

cfq_status cfq_cf_alternate(const char* digits_json, char** out_json) {
    return guarded([&] {
        require(out_json, "out_json");
        const cfq::FiniteCF cf = cfq::finite_cf_from_json(parse_json_arg(digits_json, "digits"));
        *out_json = dup_string(cfq::to_json(cfq::alt_representation(cf)).dump());
    });
}

cfq_status cfq_isqrt(const char* m, char** out) {
    return guarded([&] {
        require(out, "out");
        *out = dup_string(cfq::to_decimal(cfq::isqrt(parse_arg(m, "m"))));
    });
}

cfq_status cfq_surd_create(const char* p, const char* d, const char* q, cfq_surd** out) {
    return guarded([&] {
        require(out, "out");
        *out = new cfq_surd{
            cfq::QuadraticSurd(parse_arg(p, "p"), parse_arg(d, "d"), parse_arg(q, "q"))};
    });
}

cfq_status cfq_surd_from_sqrt(const char* n, cfq_surd** out) {
    return guarded([&] {
        require(out, "out");
        *out = new cfq_surd{cfq::QuadraticSurd::sqrt_of(parse_arg(n, "n"))};
    });
}

cfq_status cfq_surd_from_polynomial(const char* a, const char* b, const char* c, int larger_root,
                                    cfq_surd** out) {
    return guarded([&] {
        require(out, "out");
        const cfq::QuadraticPolynomial poly{parse_arg(a, "a"), parse_arg(b, "b"),
                                            parse_arg(c, "c")};
        const auto choice = larger_root ? cfq::RootChoice::larger : cfq::RootChoice::smaller;
        *out = new cfq_surd{cfq::from_polynomial(poly, choice)};
    });
}

void cfq_surd_free(cfq_surd* s) { delete s; }

cfq_status cfq_surd_json(const cfq_surd* s, char** out_json) {
    return guarded([&] {
        require(s, "surd");
        require(out_json, "out_json");
        *out_json = dup_string(cfq::to_json(s->value).dump());
    });
}

cfq_status cfq_surd_conjugate(const cfq_surd* s, cfq_surd** out) {
    return guarded([&] {
        require(s, "surd");
        require(out, "out");
        *out = new cfq_surd{s->value.conjugate()};
    });
}

cfq_status cfq_surd_floor(const cfq_surd* s, char** out) {
    return guarded([&] {
        require(s, "surd");
        require(out, "out");
        *out = dup_string(cfq::to_decimal(s->value.floor()));
    });
}

cfq_status cfq_surd_is_reduced(const cfq_surd* s, int* out) {
    return guarded([&] {
        require(s, "surd");
        require(out, "out");
        *out = cfq::is_reduced(s->value) ? 1 : 0;
    });
}

cfq_status cfq_surd_expand(const cfq_surd* s, char** out_json) {
    return guarded([&] {
        require(s, "surd");
        require(out_json, "out_json");
        *out_json = dup_string(cfq::to_json(cfq::expand(s->value)).dump());
    });
}

cfq_status cfq_sqrt_cf(const char* n, char** out_json) {
    return guarded([&] {
        require(out_json, "out_json");
        *out_json = dup_string(cfq::to_json(cfq::sqrt_cf(parse_arg(n, "n"))).dump());
    });
}

cfq_status cfq_sqrt_period_length(const char* n, unsigned long long* out) {
    return guarded([&] {
        require(out, "out");
        *out = cfq::period_length(parse_arg(n, "n"));
    });
}

cfq_status cfq_sqrt_reconstruct(const char* n, const char* body_json, char** out_num,
                                char** out_den) {
    return guarded([&] {
        require(out_num, "out_num");
        require(out_den, "out_den");
        const cfq::Digits body = cfq::digits_from_json(parse_json_arg(body_json, "body"));
        const cfq::Rational value = cfq::reconstruct_N(parse_arg(n, "n"), body);
        char* num = dup_string(cfq::to_decimal(value.num()));
        try {
            *out_den = dup_string(cfq::to_decimal(value.den()));
        } catch (...) {
            std::free(num);
            throw;
        }
        *out_num = num;
    });
}

cfq_status cfq_verify_observations(const char* n_max, char** out_json) {
    return guarded([&] {
        require(out_json, "out_json");
        const auto start = std::chrono::steady_clock::now();
        cfq::Json report = cfq::to_json(cfq::verify_rules(parse_arg(n_max, "n_max")));
        const auto elapsed = std::chrono::steady_clock::now() - start;
        report["elapsed_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
        *out_json = dup_string(report.dump());
    });
}

cfq_status cfq_approx_check(const char* n, unsigned upto_index, const char* q_max,
                            char** out_json) {
    return guarded([&] {
        require(out_json, "out_json");
        const cfq::Integer radicand = parse_arg(n, "n");
        const cfq::Integer q_limit = parse_arg(q_max, "q_max");
        const cfq::QuadraticSurd x = cfq::QuadraticSurd::sqrt_of(radicand);
        if (x.is_rational())
            cfq::fail(cfq::errc::square_input,
                      "approx target sqrt(" + cfq::to_decimal(radicand) + ") is rational");

        const auto start = std::chrono::steady_clock::now();
        const cfq::BestApproximationReport best = cfq::check_best_approximation(x, upto_index);
        const cfq::HalfBoundReport half = cfq::check_half_q_squared(x, upto_index);
        const cfq::LegendreReport legendre = cfq::check_legendre(x, q_limit);
        const auto elapsed = std::chrono::steady_clock::now() - start;

        cfq::Json out = cfq::Json::object();
        out["target"] = "sqrt" + cfq::to_decimal(radicand);
        cfq::Json best_json = cfq::Json::object();
        best_json["first_index"] = best.first_index;
        best_json["last_index"] = best.last_index;
        best_json["enumerated"] = best.enumerated;
        cfq::Json best_violations = cfq::Json::array();
        for (const cfq::ApproxViolation& v : best.violations) {
            cfq::Json item = cfq::Json::object();
            item["index"] = v.index;
            item["convergent"] = v.convergent.str();
            item["rival"] = v.rival.str();
            best_violations.push_back(std::move(item));
        }
        best_json["violations"] = std::move(best_violations);
        out["best_approximation"] = std::move(best_json);

        cfq::Json half_json = cfq::Json::object();
        half_json["pairs_checked"] = half.pairs_checked;
        half_json["violations"] = half.violations;
        out["half_q_squared"] = std::move(half_json);

        cfq::Json legendre_json = cfq::Json::object();
        legendre_json["q_max"] = cfq::to_decimal(legendre.q_max);
        cfq::Json qualifiers = cfq::Json::array();
        for (const cfq::Rational& r : legendre.qualifiers) qualifiers.push_back(r.str());
        legendre_json["qualifiers"] = std::move(qualifiers);
        cfq::Json rogue = cfq::Json::array();
        for (const cfq::Rational& r : legendre.non_convergent) rogue.push_back(r.str());
        legendre_json["non_convergent"] = std::move(rogue);
        out["legendre"] = std::move(legendre_json);

        out["violations_total"] =
            best.violations.size() + half.violations.size() + legendre.non_convergent.size();
        out["elapsed_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
        *out_json = dup_string(out.dump());
    });
}

cfq_status cfq_scan_run(const cfq_scan_config* config, char** out_summary_json) {
    return guarded([&] {
        require(config, "config");
        require(out_summary_json, "out_summary_json");

        cfq::ScanConfig cpp;
        cpp.n_min = parse_arg(config->n_min, "n_min");
        cpp.n_max = parse_arg(config->n_max, "n_max");
        if (config->checks) {
            std::string list(config->checks);
            std::size_t pos = 0;
            while (pos <= list.size()) {
                const std::size_t comma = list.find(',', pos);
                const std::string name =
                    list.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
                if (!name.empty()) cpp.checks.push_back(name);
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
            if (cpp.checks.empty())
                cfq::fail(cfq::errc::invalid_argument, "checks list is empty");
        }
        if (config->out_path) cpp.out_path = config->out_path;
        if (config->emit_digits_max > 0)
            cpp.emit_digits_max = static_cast<std::size_t>(config->emit_digits_max);
        cpp.jobs = config->jobs > 0 ? static_cast<unsigned>(config->jobs) : 1;

        const auto start = std::chrono::steady_clock::now();
        const cfq::ScanSummary summary = cfq::run_scan(cpp);
        const auto elapsed = std::chrono::steady_clock::now() - start;
        cfq::Json out = cfq::to_json(summary);
        out["elapsed_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
        *out_summary_json = dup_string(out.dump());
    });
}

} // extern "C"
