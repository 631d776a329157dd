#pragma once

#include <stdexcept>
#include <string>

namespace cfq {

// Failure categories mirrored one-to-one by the C API status codes.
enum class errc {
    invalid_argument,
    parse_error,
    domain_error,
    square_input,        // a non-square radicand was required
    invalid_surd,        // zero denominator or negative radicand
    rational_surd,       // radicand is a perfect square, value is rational
    rational_root,       // polynomial discriminant is a perfect square
    complex_root,        // polynomial discriminant is negative
    not_purely_periodic,
    iteration_limit,
    shape_violation,     // expansion broke the [n, a_1..a_r, 2n] shape
    io_error,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace cfq
