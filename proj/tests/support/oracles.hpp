#pragma once

// Independent brute-force references used only by the tests.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hominf::testing {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Number of the m^n equally likely ball-to-bin assignments with exactly k
/// empty bins, for k = 0..m, by walking every assignment.
inline std::vector<std::uint64_t> enumerate_empty_counts(std::size_t m, std::size_t n) {
  std::vector<std::uint64_t> hist(m + 1, 0);
  std::vector<std::size_t> assignment(n, 0);
  std::vector<std::size_t> load(m, 0);
  load[0] = n;
  while (true) {
    std::size_t empty = 0;
    for (const auto c : load) empty += (c == 0);
    ++hist[empty];
    // Odometer increment.
    std::size_t pos = 0;
    while (pos < n) {
      --load[assignment[pos]];
      if (++assignment[pos] < m) {
        ++load[assignment[pos]];
        break;
      }
      assignment[pos] = 0;
      ++load[0];
      ++pos;
    }
    if (pos == n) break;
  }
  return hist;
}

/// Exact law of the empty count as rationals.
inline std::vector<Rational> enumerate_empty_law(std::size_t m, std::size_t n) {
  const auto hist = enumerate_empty_counts(m, n);
  BigInt total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= m;
  std::vector<Rational> law;
  law.reserve(hist.size());
  for (const auto h : hist) law.emplace_back(BigInt(h), total);
  return law;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Rank over GF(2) of a dense 0/1 matrix by Gaussian elimination with a full
/// pivot search over every remaining row and column.
inline std::size_t dense_rank_gf2(std::vector<std::vector<std::uint8_t>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<bool> row_used(rows, false);
  std::vector<bool> col_used(cols, false);
  std::size_t rank = 0;
  while (true) {
    bool found = false;
    std::size_t pr = 0;
    std::size_t pc = 0;
    for (std::size_t r = 0; r < rows && !found; ++r) {
      if (row_used[r]) continue;
      for (std::size_t c = 0; c < cols; ++c) {
        if (!col_used[c] && a[r][c]) {
          pr = r;
          pc = c;
          found = true;
          break;
        }
      }
    }
    if (!found) return rank;
    row_used[pr] = true;
    col_used[pc] = true;
    ++rank;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r != pr && a[r][pc]) {
        for (std::size_t c = 0; c < cols; ++c) a[r][c] ^= a[pr][c];
      }
    }
  }
}

}  // namespace hominf::testing
