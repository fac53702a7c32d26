#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace motdens {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Parses "p/r" or a bare (optionally signed) integer. Returns nullopt on malformed
// input or a zero denominator. The result is normalized by the rational type itself.
std::optional<Rat> parse_rational(const std::string& text);

// Lowest-terms rendering: "p" when the denominator is 1, otherwise "p/r".
std::string format_rational(const Rat& value);

bool is_integral(const Rat& value);

// Exact conversion of an integral rational; throws motdens::Error otherwise.
long long to_ll(const Rat& value);

}  // namespace motdens
