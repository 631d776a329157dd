#include "cfq/integer.hpp"

#include "cfq/error.hpp"

#include <cctype>

namespace cfq {

Integer floor_div(const Integer& a, const Integer& b) {
    if (b == 0) fail(errc::domain_error, "floor_div: division by zero");
    Integer q = a / b; // truncates toward zero
    const Integer r = a - q * b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

Integer isqrt(const Integer& m) {
    if (m < 0) fail(errc::domain_error, "isqrt: negative argument");
    if (m < 2) return m;
    const unsigned bits = boost::multiprecision::msb(m) + 1;
    Integer x = Integer(1) << ((bits + 1) / 2); // x >= sqrt(m), so the iteration descends
    for (;;) {
        const Integer y = (x + m / x) >> 1;
        if (y >= x) break;
        x = y;
    }
    // Floor certificate; the loops do not run unless the iteration above is wrong.
    while (x * x > m) --x;
    while ((x + 1) * (x + 1) <= m) ++x;
    return x;
}

bool is_square(const Integer& m) {
    if (m < 0) return false;
    const Integer t = isqrt(m);
    return t * t == m;
}

Integer parse_integer(std::string_view text) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    if (i == text.size()) fail(errc::parse_error, "not a decimal integer: '" + std::string(text) + "'");
    for (std::size_t k = i; k < text.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(text[k])))
            fail(errc::parse_error, "not a decimal integer: '" + std::string(text) + "'");
    }
    if (text.front() == '+') text.remove_prefix(1); // cpp_int rejects a leading plus
    return Integer(std::string(text));
}

std::string to_decimal(const Integer& value) { return value.str(); }

} // namespace cfq
