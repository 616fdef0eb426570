#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hominf/format.hpp"
#include "hominf/harness.hpp"

namespace hominf {

namespace {

constexpr std::size_t kCsvColumns = 15;

std::string optional_field(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  while (true) {
    const auto comma = line.find(',');
    fields.push_back(line.substr(0, comma));
    if (comma == std::string_view::npos) break;
    line.remove_prefix(comma + 1);
  }
  return fields;
}

[[noreturn]] void bad_row(std::size_t line_no, const std::string& what) {
  throw std::runtime_error("csv line " + std::to_string(line_no) + ": " + what);
}

double real_field(std::string_view f, std::size_t line_no) {
  const auto v = parse_double(f);
  if (!v) bad_row(line_no, "bad number '" + std::string(f) + "'");
  return *v;
}

std::optional<double> optional_real_field(std::string_view f, std::size_t line_no) {
  if (f.empty()) return std::nullopt;
  return real_field(f, line_no);
}

template <typename Int>
Int integer_field(std::string_view f, std::size_t line_no) {
  Int v{};
  const auto res = std::from_chars(f.data(), f.data() + f.size(), v);
  if (res.ec != std::errc{} || res.ptr != f.data() + f.size()) {
    bad_row(line_no, "bad integer '" + std::string(f) + "'");
  }
  return v;
}

}  // namespace

void write_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.m << ',' << r.n << ',' << format_double(r.tau) << ',' << r.d << ',' << r.D << ','
        << r.trials << ',' << to_string(r.test) << ',' << format_double(r.type_one_hat) << ','
        << format_double(r.type_two_hat) << ',' << format_double(r.risk_hat) << ','
        << format_double(r.stderr_hat) << ',' << optional_field(r.exact_type_one) << ','
        << optional_field(r.exact_type_two) << ',' << format_double(r.miss_prob) << ','
        << optional_field(r.rate_envelope) << '\n';
  }
}

void emit_csv(std::span<const SweepRow> rows, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_csv(out, rows);
  out.flush();
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::vector<SweepRow> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw std::runtime_error("csv: missing or unexpected header");
  }
  std::vector<SweepRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split_fields(line);
    if (f.size() != kCsvColumns) bad_row(line_no, "expected 15 fields");
    SweepRow r;
    r.m = integer_field<std::size_t>(f[0], line_no);
    r.n = integer_field<std::size_t>(f[1], line_no);
    r.tau = real_field(f[2], line_no);
    r.d = integer_field<int>(f[3], line_no);
    r.D = integer_field<int>(f[4], line_no);
    r.trials = integer_field<std::size_t>(f[5], line_no);
    r.test = parse_test_kind(f[6]);
    r.type_one_hat = real_field(f[7], line_no);
    r.type_two_hat = real_field(f[8], line_no);
    r.risk_hat = real_field(f[9], line_no);
    r.stderr_hat = real_field(f[10], line_no);
    r.exact_type_one = optional_real_field(f[11], line_no);
    r.exact_type_two = optional_real_field(f[12], line_no);
    r.miss_prob = real_field(f[13], line_no);
    r.rate_envelope = optional_real_field(f[14], line_no);
    rows.push_back(r);
  }
  return rows;
}

}  // namespace hominf
