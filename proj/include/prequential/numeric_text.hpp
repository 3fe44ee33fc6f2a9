#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace prequential {

/// Shortest text with 17 significant digits; round-trips any finite double.
std::string format_double(double value);

/// Shortest text that parses back to exactly `value`.
std::string format_shortest(double value);

/// Strict parse of the whole token (surrounding blanks and one leading '+'
/// allowed). Returns nullopt on trailing garbage, empty input, overflow or a
/// non-finite value.
std::optional<double> parse_double(std::string_view text);
std::optional<std::uint64_t> parse_uint(std::string_view text);

std::string_view trim(std::string_view text);

} // namespace prequential
