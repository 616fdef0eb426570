#pragma once

#include <cstddef>
#include <vector>

#include "hominf/geometry.hpp"

namespace hominf {

/// Per-sphere hit counts of one sample.
struct OccupancySummary {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<std::size_t> counts;
  std::size_t empty_count = 0;
};

/// Assigns every point to its sphere. Propagates assign() errors.
[[nodiscard]] OccupancySummary summarize(const SpherePack& pack, const SampleSet& samples);
/// Builds a summary from raw counts (n and the empty count are derived).
[[nodiscard]] OccupancySummary summarize_counts(std::vector<std::size_t> counts);

/// Law of the number K of empty bins after n uniform balls into m bins.
struct OccupancyDistribution {
  std::size_t m = 0;
  std::size_t n = 0;
  /// probabilities[k] = P(K = k), k = 0..m.
  std::vector<double> probabilities;

  [[nodiscard]] double operator[](std::size_t k) const { return probabilities.at(k); }
};

/// How an exact occupancy quantity was evaluated.
enum class OccupancyMethod {
  kInclusionExclusion,
  /// Ball-by-ball recursion, used when the alternating series would lose
  /// more than ~1e-12 absolute accuracy to cancellation.
  kRecursion,
};

/// P(no bin empty) = sum_j (-1)^j C(m,j) (1 - j/m)^n.
[[nodiscard]] double prob_all_occupied(std::size_t m, std::size_t n);
[[nodiscard]] double prob_all_occupied(std::size_t m, std::size_t n, OccupancyMethod* used);

/// 1 - prob_all_occupied(m, n).
[[nodiscard]] double miss_probability(std::size_t m, std::size_t n);

/// P(K = k) = C(m,k) sum_j (-1)^j C(m-k,j) (1 - (k+j)/m)^n for k = 0..m.
[[nodiscard]] OccupancyDistribution empty_count_distribution(std::size_t m, std::size_t n);
[[nodiscard]] OccupancyDistribution empty_count_distribution(std::size_t m, std::size_t n,
                                                             OccupancyMethod* used);

/// Same law by the occupied-count Markov chain, O(n min(n, m)).
[[nodiscard]] OccupancyDistribution empty_count_distribution_recursive(std::size_t m,
                                                                       std::size_t n);

/// Limit 1 - exp(-exp(c)) of P(collection incomplete after m ln m - c m draws).
[[nodiscard]] double coupon_limit(double c);

/// ceil(m ln m + m ln(1/delta)). Throws std::invalid_argument unless 0 < delta <= 1.
[[nodiscard]] std::size_t threshold_sample_size(std::size_t m, double delta);

}  // namespace hominf
