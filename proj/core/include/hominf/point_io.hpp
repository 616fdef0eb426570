#pragma once

#include <filesystem>
#include <iosfwd>

#include "hominf/geometry.hpp"

namespace hominf {

/// Point-set text format: one point per line, comma-separated decimal
/// coordinates with '.' as the decimal separator, no header. Blank lines are
/// skipped. Every line must have the same number of fields.
///
/// Throws std::runtime_error with the offending line number on malformed input.
[[nodiscard]] PointCloud read_points(std::istream& in);
[[nodiscard]] PointCloud read_point_file(const std::filesystem::path& path);

/// Writes with shortest round-trip formatting.
void write_points(std::ostream& out, const PointCloud& points);
void write_point_file(const std::filesystem::path& path, const PointCloud& points);

}  // namespace hominf
