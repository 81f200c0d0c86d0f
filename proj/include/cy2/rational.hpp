#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace cy2 {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Renders a rational as `p` or `p/q`, with `q > 0` and gcd(p,q)=1.
std::string to_string(const Rat& r);

/// Parses `p` or `p/q` (optionally signed). Returns nullopt on malformed
/// input or zero denominator.
std::optional<Rat> parse_rational(std::string_view text);

}  // namespace cy2
