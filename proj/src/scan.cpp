#include "cfq/scan.hpp"

#include "cfq/error.hpp"
#include "cfq/serialize.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <thread>

namespace cfq {

const std::vector<ScanPredicate>& scan_predicates() {
    static const std::vector<ScanPredicate> predicates = [] {
        std::vector<ScanPredicate> out;
        out.push_back({"palindrome", true, [](const SqrtCF& cf) -> std::optional<bool> {
                           return palindrome_check(cf.body());
                       }});
        out.push_back({"period-le-2N", true, [](const SqrtCF& cf) -> std::optional<bool> {
                           return Integer(cf.period_length()) <= 2 * cf.N();
                       }});
        out.push_back({"period-le-2n", false, [](const SqrtCF& cf) -> std::optional<bool> {
                           return Integer(cf.period_length()) <= 2 * cf.n();
                       }});
        out.push_back({"body-le-n", false, [](const SqrtCF& cf) -> std::optional<bool> {
                           for (const Integer& d : cf.body())
                               if (d > cf.n()) return false;
                           return true;
                       }});
        out.push_back({"no-odd-period-j3mod4", false, [](const SqrtCF& cf) -> std::optional<bool> {
                           if (cf.j() % 4 != 3) return std::nullopt;
                           return cf.period_length() % 2 == 0;
                       }});
        return out;
    }();
    return predicates;
}

std::uint64_t ScanSummary::theorem_failures() const {
    std::uint64_t total = 0;
    for (const PredicateTally& t : tallies)
        if (t.theorem) total += t.fail;
    return total;
}

std::uint64_t ScanSummary::conjecture_failures() const {
    std::uint64_t total = 0;
    for (const PredicateTally& t : tallies)
        if (!t.theorem) total += t.fail;
    return total;
}

namespace {

struct ChunkResult {
    std::string lines;
    std::uint64_t squares = 0;
    std::uint64_t checked = 0;
    std::vector<PredicateTally> tallies;
};

std::vector<const ScanPredicate*> select_predicates(const std::vector<std::string>& names) {
    const std::vector<ScanPredicate>& all = scan_predicates();
    if (names.empty()) {
        std::vector<const ScanPredicate*> out;
        for (const ScanPredicate& p : all) out.push_back(&p);
        return out;
    }
    std::vector<const ScanPredicate*> out;
    for (const ScanPredicate& p : all) { // registry order regardless of request order
        if (std::find(names.begin(), names.end(), p.name) != names.end()) out.push_back(&p);
    }
    for (const std::string& name : names) {
        const bool known = std::any_of(all.begin(), all.end(),
                                       [&](const ScanPredicate& p) { return p.name == name; });
        if (!known) fail(errc::invalid_argument, "unknown scan check '" + name + "'");
    }
    return out;
}

std::vector<PredicateTally> empty_tallies(const std::vector<const ScanPredicate*>& predicates) {
    std::vector<PredicateTally> out;
    for (const ScanPredicate* p : predicates) out.push_back({p->name, p->theorem, 0, 0, 0, {}});
    return out;
}

void scan_one(const Integer& N, const std::vector<const ScanPredicate*>& predicates,
              std::size_t emit_digits_max, bool want_lines, ChunkResult& result) {
    if (is_square(N)) {
        ++result.squares;
        return;
    }
    const SqrtCF cf = sqrt_cf(N);
    ++result.checked;

    Json checks = Json::object();
    for (std::size_t i = 0; i < predicates.size(); ++i) {
        const std::optional<bool> verdict = predicates[i]->eval(cf);
        PredicateTally& tally = result.tallies[i];
        if (!verdict) {
            ++tally.skip;
            if (want_lines) checks[predicates[i]->name] = "skip";
        } else if (*verdict) {
            ++tally.pass;
            if (want_lines) checks[predicates[i]->name] = "pass";
        } else {
            ++tally.fail;
            tally.failing.push_back(N);
            if (want_lines) checks[predicates[i]->name] = "fail";
        }
    }

    if (want_lines) {
        Json record = scan_record_json(cf, cf.period_length() <= emit_digits_max);
        record["checks"] = std::move(checks);
        result.lines += record.dump();
        result.lines += '\n';
    }
}

} // namespace

ScanSummary run_scan(const ScanConfig& config) {
    if (config.n_min < 2) fail(errc::invalid_argument, "scan range must start at 2 or above");
    if (config.n_max < config.n_min) fail(errc::invalid_argument, "scan range is empty");
    const Integer span = config.n_max - config.n_min + 1;
    if (span > (Integer(1) << 48)) fail(errc::invalid_argument, "scan range is too large");

    const std::vector<const ScanPredicate*> predicates = select_predicates(config.checks);
    const bool want_lines = !config.out_path.empty();

    constexpr std::uint64_t kChunk = 2048;
    const std::uint64_t total = span.convert_to<std::uint64_t>();
    const std::uint64_t chunk_count = (total + kChunk - 1) / kChunk;
    std::vector<ChunkResult> chunks(chunk_count);

    const unsigned jobs = std::max(1u, config.jobs);
    std::atomic<std::uint64_t> next_chunk{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    const auto worker = [&] {
        for (;;) {
            const std::uint64_t id = next_chunk.fetch_add(1);
            if (id >= chunk_count || failed.load()) return;
            try {
                ChunkResult& result = chunks[id];
                result.tallies = empty_tallies(predicates);
                const Integer first = config.n_min + Integer(id) * kChunk;
                const std::uint64_t len =
                    std::min<std::uint64_t>(kChunk, total - id * kChunk);
                for (std::uint64_t k = 0; k < len; ++k)
                    scan_one(first + k, predicates, config.emit_digits_max, want_lines, result);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                failed.store(true);
                return;
            }
        }
    };

    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    // Order-restoring merge: chunk order is range order.
    ScanSummary summary;
    summary.n_min = config.n_min;
    summary.n_max = config.n_max;
    summary.total = total;
    summary.tallies = empty_tallies(predicates);
    std::string lines;
    for (const ChunkResult& chunk : chunks) {
        summary.squares += chunk.squares;
        summary.checked += chunk.checked;
        for (std::size_t i = 0; i < summary.tallies.size(); ++i) {
            PredicateTally& into = summary.tallies[i];
            const PredicateTally& from = chunk.tallies[i];
            into.pass += from.pass;
            into.fail += from.fail;
            into.skip += from.skip;
            into.failing.insert(into.failing.end(), from.failing.begin(), from.failing.end());
        }
        if (want_lines) lines += chunk.lines;
    }

    if (want_lines) {
        std::ofstream out(config.out_path, std::ios::binary | std::ios::trunc);
        if (!out) fail(errc::io_error, "cannot open '" + config.out_path + "' for writing");
        out << lines;
        if (!out.flush()) fail(errc::io_error, "write to '" + config.out_path + "' failed");
    }
    return summary;
}

} // namespace cfq
