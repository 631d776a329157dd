#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace cfq {

// Arbitrary-precision signed integer. Everything in this library is exact;
// there is no floating point on any computation path.
using Integer = boost::multiprecision::cpp_int;

using Digits = std::vector<Integer>;

// Quotient rounded toward minus infinity. b must be nonzero.
Integer floor_div(const Integer& a, const Integer& b);

// Largest t with t*t <= m. Newton iteration followed by an explicit
// floor certificate t*t <= m < (t+1)*(t+1). m must be nonnegative.
Integer isqrt(const Integer& m);

bool is_square(const Integer& m);

// Parses an optionally signed decimal string. Rejects anything else.
Integer parse_integer(std::string_view text);

std::string to_decimal(const Integer& value);

} // namespace cfq
