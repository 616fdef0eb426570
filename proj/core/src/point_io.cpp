#include "hominf/point_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <system_error>
#include <vector>

#include "hominf/format.hpp"

namespace hominf {

PointCloud read_points(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t dim = 0;
  std::vector<double> coords;
  std::vector<double> row;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    row.clear();
    std::string_view rest(line);
    while (true) {
      const auto comma = rest.find(',');
      const auto field = rest.substr(0, comma);
      const auto value = parse_double(field);
      if (!value) {
        throw std::runtime_error("point file line " + std::to_string(line_no) +
                                 ": bad number '" + std::string(field) + "'");
      }
      row.push_back(*value);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (dim == 0) {
      dim = row.size();
    } else if (row.size() != dim) {
      throw std::runtime_error("point file line " + std::to_string(line_no) + ": expected " +
                               std::to_string(dim) + " coordinates, got " +
                               std::to_string(row.size()));
    }
    coords.insert(coords.end(), row.begin(), row.end());
  }
  return PointCloud(dim, std::move(coords));
}

PointCloud read_point_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open point file " + path.string());
  return read_points(in);
}

void write_points(std::ostream& out, const PointCloud& points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto p = points[i];
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (j > 0) out << ',';
      out << format_double(p[j]);
    }
    out << '\n';
  }
}

void write_point_file(const std::filesystem::path& path, const PointCloud& points) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write point file " + path.string());
  write_points(out, points);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace hominf
