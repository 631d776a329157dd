// cfquad command line tool. Talks to the engine exclusively through the
// C API in cfquad.h; results arrive as JSON and are rendered here.

#include "cfquad.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::ordered_json;

struct StringDeleter {
    void operator()(char* s) const { cfq_string_free(s); }
};
using ApiString = std::unique_ptr<char, StringDeleter>;

[[noreturn]] void die(cfq_status status) {
    std::cerr << "error (" << cfq_status_name(status) << "): " << cfq_last_error() << "\n";
    std::exit(1);
}

ApiString take(char* raw) { return ApiString(raw); }

Json parse(const ApiString& text) { return Json::parse(text.get()); }

std::string pad(const std::string& text, std::size_t width) {
    return text.size() >= width ? text : text + std::string(width - text.size(), ' ');
}

void print_scan_summary(const Json& summary) {
    std::cout << "scan [" << summary["n_min"].get<std::string>() << ", "
              << summary["n_max"].get<std::string>() << "]: " << summary["checked"]
              << " expanded, " << summary["squares"] << " squares skipped ("
              << summary["elapsed_ms"] << " ms)\n\n";
    std::cout << pad("predicate", 22) << pad("class", 12) << pad("pass", 10) << pad("fail", 8)
              << "skip\n";
    for (const Json& p : summary["predicates"]) {
        std::cout << pad(p["name"].get<std::string>(), 22)
                  << pad(p["class"].get<std::string>(), 12)
                  << pad(p["pass"].dump(), 10) << pad(p["fail"].dump(), 8) << p["skip"].dump()
                  << "\n";
        if (!p["failing"].empty()) {
            std::cout << "    failing N:";
            for (const Json& N : p["failing"]) std::cout << " " << N.get<std::string>();
            std::cout << "\n";
        }
    }
}

void print_verify_report(const Json& report) {
    std::cout << "verified rule catalogue for n <= " << report["n_max"].get<std::string>() << " ("
              << report["cells"] << " cells, " << report["elapsed_ms"] << " ms)\n\n";
    std::cout << pad("rule", 26) << pad("instances", 11) << pad("agree", 8) << pad("disagree", 10)
              << "skipped\n";
    for (const Json& r : report["rules"]) {
        std::cout << pad(r["name"].get<std::string>(), 26) << pad(r["instances"].dump(), 11)
                  << pad(r["agreements"].dump(), 8) << pad(r["disagreements"].size() == 0
                                                               ? "0"
                                                               : std::to_string(r["disagreements"].size()),
                                                           10)
                  << r["skipped"].size() << "\n";
        for (const Json& d : r["disagreements"]) {
            std::cout << "    n=" << d["n"].get<std::string>() << " j=" << d["j"].get<std::string>()
                      << " N=" << d["N"].get<std::string>() << " predicted " << d["predicted"].dump()
                      << " actual " << d["actual"].dump() << "\n";
        }
    }
    std::cout << "\n" << pad("constraint", 60) << pad("checked", 9) << "violations\n";
    for (const Json& c : report["constraints"]) {
        std::cout << pad(c["name"].get<std::string>(), 60) << pad(c["checked"].dump(), 9)
                  << c["violations"].size() << "\n";
        for (const Json& v : c["violations"])
            std::cout << "    N=" << v["N"].get<std::string>() << " " << v["detail"].get<std::string>()
                      << "\n";
    }
    std::cout << "\ntotal disagreements: " << report["total_disagreements"]
              << ", total violations: " << report["total_violations"] << "\n";
}

void print_approx_report(const Json& report) {
    std::cout << "approximation checks for " << report["target"].get<std::string>() << " ("
              << report["elapsed_ms"] << " ms)\n";
    const Json& best = report["best_approximation"];
    std::cout << "  best-approximation: indices " << best["first_index"] << ".."
              << best["last_index"] << ", violations " << best["violations"].size() << "\n";
    const Json& half = report["half_q_squared"];
    std::cout << "  1/(2q^2) pairs:     " << half["pairs_checked"] << " checked, violations "
              << half["violations"].size() << "\n";
    const Json& leg = report["legendre"];
    std::cout << "  legendre q<=" << leg["q_max"].get<std::string>() << ":    "
              << leg["qualifiers"].size() << " qualifiers, non-convergent "
              << leg["non_convergent"].size() << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact continued fractions of rationals and quadratic irrationals"};
    app.require_subcommand(1);

    // expand <N>
    std::string expand_n;
    CLI::App* cmd_expand = app.add_subcommand("expand", "continued fraction of sqrt(N)");
    cmd_expand->add_option("N", expand_n, "radicand (non-square, >= 2)")->required();

    // expand-surd --p --d --q
    std::string surd_p = "0", surd_d, surd_q = "1";
    CLI::App* cmd_surd = app.add_subcommand("expand-surd", "expansion of (P + sqrt(D)) / Q");
    cmd_surd->add_option("--p", surd_p, "P (default 0)");
    cmd_surd->add_option("--d", surd_d, "D, the radicand")->required();
    cmd_surd->add_option("--q", surd_q, "Q (default 1)");

    // rational <num> <den>
    std::string rat_num, rat_den;
    CLI::App* cmd_rational = app.add_subcommand("rational", "continued fraction of num/den");
    cmd_rational->add_option("num", rat_num, "numerator")->required();
    cmd_rational->add_option("den", rat_den, "denominator")->required();

    // scan --min --max ...
    std::string scan_min, scan_max, scan_checks, scan_out;
    int scan_jobs = 1;
    int scan_emit = 64;
    bool scan_strict = false;
    CLI::App* cmd_scan = app.add_subcommand("scan", "batch scan of a range of N");
    cmd_scan->add_option("--min", scan_min, "first N")->required();
    cmd_scan->add_option("--max", scan_max, "last N")->required();
    cmd_scan->add_option("--checks", scan_checks,
                         "comma-separated predicates (default: all of palindrome, period-le-2N, "
                         "period-le-2n, body-le-n, no-odd-period-j3mod4)");
    cmd_scan->add_flag("--strict", scan_strict, "conjecture failures also fail the exit status");
    cmd_scan->add_option("--jobs", scan_jobs, "worker threads")->check(CLI::PositiveNumber);
    cmd_scan->add_option("--out", scan_out, "JSONL record file");
    cmd_scan->add_option("--emit-digits-max", scan_emit,
                         "emit digit sequences only for periods up to this length");

    // verify-observations --n-max K
    std::string verify_nmax;
    bool verify_json = false;
    CLI::App* cmd_verify =
        app.add_subcommand("verify-observations", "check the rule catalogue against the engine");
    cmd_verify->add_option("--n-max", verify_nmax, "largest n to sweep")->required();
    cmd_verify->add_flag("--json", verify_json, "print the raw JSON report");

    // approx-check --target sqrtN --qmax Q
    std::string approx_target, approx_qmax = "1000";
    unsigned approx_upto = 10;
    bool approx_json = false;
    CLI::App* cmd_approx =
        app.add_subcommand("approx-check", "best-approximation, 1/(2q^2) and Legendre checks");
    cmd_approx->add_option("--target", approx_target, "target, e.g. sqrt41")->required();
    cmd_approx->add_option("--qmax", approx_qmax, "denominator bound for the Legendre sweep");
    cmd_approx->add_option("--upto", approx_upto, "largest convergent index for the other checks");
    cmd_approx->add_flag("--json", approx_json, "print the raw JSON report");

    CLI11_PARSE(app, argc, argv);

    if (cmd_expand->parsed()) {
        char* raw = nullptr;
        if (const cfq_status st = cfq_sqrt_cf(expand_n.c_str(), &raw); st != CFQ_OK) die(st);
        std::cout << take(raw).get() << "\n";
        return 0;
    }

    if (cmd_surd->parsed()) {
        cfq_surd* surd = nullptr;
        if (const cfq_status st =
                cfq_surd_create(surd_p.c_str(), surd_d.c_str(), surd_q.c_str(), &surd);
            st != CFQ_OK)
            die(st);
        char* raw = nullptr;
        const cfq_status st = cfq_surd_expand(surd, &raw);
        cfq_surd_free(surd);
        if (st != CFQ_OK) die(st);
        std::cout << take(raw).get() << "\n";
        return 0;
    }

    if (cmd_rational->parsed()) {
        char* raw = nullptr;
        if (const cfq_status st = cfq_rational_cf(rat_num.c_str(), rat_den.c_str(), &raw);
            st != CFQ_OK)
            die(st);
        std::cout << take(raw).get() << "\n";
        return 0;
    }

    if (cmd_scan->parsed()) {
        cfq_scan_config config{};
        config.n_min = scan_min.c_str();
        config.n_max = scan_max.c_str();
        config.checks = scan_checks.empty() ? nullptr : scan_checks.c_str();
        config.out_path = scan_out.empty() ? nullptr : scan_out.c_str();
        config.emit_digits_max = scan_emit;
        config.jobs = scan_jobs;
        char* raw = nullptr;
        if (const cfq_status st = cfq_scan_run(&config, &raw); st != CFQ_OK) die(st);
        const ApiString text = take(raw);
        const Json summary = parse(text);
        print_scan_summary(summary);
        const auto theorem_failures = summary["theorem_failures"].get<std::uint64_t>();
        const auto conjecture_failures = summary["conjecture_failures"].get<std::uint64_t>();
        if (theorem_failures > 0 || (scan_strict && conjecture_failures > 0)) return 2;
        return 0;
    }

    if (cmd_verify->parsed()) {
        char* raw = nullptr;
        if (const cfq_status st = cfq_verify_observations(verify_nmax.c_str(), &raw);
            st != CFQ_OK)
            die(st);
        const ApiString text = take(raw);
        const Json report = parse(text);
        if (verify_json)
            std::cout << text.get() << "\n";
        else
            print_verify_report(report);
        const auto disagreements = report["total_disagreements"].get<std::uint64_t>();
        const auto violations = report["total_violations"].get<std::uint64_t>();
        return disagreements > 0 || violations > 0 ? 2 : 0;
    }

    if (cmd_approx->parsed()) {
        if (approx_target.rfind("sqrt", 0) != 0) {
            std::cerr << "error: --target must look like sqrt<N>, e.g. sqrt41\n";
            return 1;
        }
        const std::string radicand = approx_target.substr(4);
        char* raw = nullptr;
        if (const cfq_status st =
                cfq_approx_check(radicand.c_str(), approx_upto, approx_qmax.c_str(), &raw);
            st != CFQ_OK)
            die(st);
        const ApiString text = take(raw);
        const Json report = parse(text);
        if (approx_json)
            std::cout << text.get() << "\n";
        else
            print_approx_report(report);
        return report["violations_total"].get<std::uint64_t>() > 0 ? 2 : 0;
    }

    return 1;
}
