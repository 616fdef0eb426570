#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace hominf {

/// Shortest decimal representation that round-trips, '.' separator, no locale.
[[nodiscard]] std::string format_double(double value);

/// Locale-independent parse of a full field; std::nullopt on any leftover text.
[[nodiscard]] std::optional<double> parse_double(std::string_view text);

}  // namespace hominf
