#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hominf/geometry.hpp"

namespace hominf {

enum class TestKind {
  /// Likelihood-ratio test on the empty-sphere count.
  kLrt,
  /// Reject iff some sphere received no point.
  kOccupancy,
  /// Plug-in test from the single-linkage beta_0 estimate.
  kEstimator,
};

[[nodiscard]] std::string_view to_string(TestKind kind);
/// Accepts "lrt", "occupancy" and "estimator".
[[nodiscard]] TestKind parse_test_kind(std::string_view name);

struct TrialConfig {
  int d = 1;
  int D = 2;
  double tau = 1.0 / 16.0;
  std::size_t n = 0;
  std::size_t trials = 1;
  std::uint64_t master_seed = 0;
  TestKind test = TestKind::kLrt;
  /// Estimator scale; defaults to tau.
  std::optional<double> scale;
  /// Caps the rate envelope column of a sweep.
  std::optional<double> delta;
  /// Worker threads; 0 uses the hardware concurrency. Results do not depend on it.
  unsigned threads = 0;
};

struct RiskEstimate {
  double type_one_hat = 0.0;
  double type_two_hat = 0.0;
  double risk_hat = 0.0;
  /// Binomial standard errors of the two components, combined in quadrature.
  double stderr_hat = 0.0;
  std::size_t trials = 0;
  std::size_t null_rejections = 0;
  std::size_t alternate_acceptances = 0;
  std::optional<double> exact_type_one;
  std::optional<double> exact_type_two;

  friend bool operator==(const RiskEstimate&, const RiskEstimate&) = default;
};

/// Substream tags of the two hypotheses.
inline constexpr std::uint64_t kNullStream = 0;
inline constexpr std::uint64_t kMixtureStream = 1;

/// Runs `trials` Null and `trials` Mixture experiments; trial t of hypothesis
/// h draws from substream_seed(master_seed, t, h).
[[nodiscard]] RiskEstimate mc_risk(const TrialConfig& config);

/// Decision (1 = reject the null) of the configured test on one sample.
[[nodiscard]] int apply_test(const TrialConfig& config, const SpherePack& pack,
                             const SampleSet& samples);

struct SweepRow {
  std::size_t m = 0;
  std::size_t n = 0;
  double tau = 0.0;
  int d = 0;
  int D = 0;
  std::size_t trials = 0;
  TestKind test = TestKind::kLrt;
  double type_one_hat = 0.0;
  double type_two_hat = 0.0;
  double risk_hat = 0.0;
  double stderr_hat = 0.0;
  std::optional<double> exact_type_one;
  std::optional<double> exact_type_two;
  /// 1 - prob_all_occupied(m, n).
  double miss_prob = 0.0;
  std::optional<double> rate_envelope;
};

/// One mc_risk run per n. n_values must be nonempty and strictly increasing.
[[nodiscard]] std::vector<SweepRow> sweep_n(const TrialConfig& config,
                                            std::span<const std::size_t> n_values);

/// Exact-only rows (no Monte Carlo): trials = 0 and the *_hat fields are zero.
[[nodiscard]] std::vector<SweepRow> exact_sweep(const TrialConfig& config,
                                                std::span<const std::size_t> n_values);

/// Smallest n in [n_min, n_max] with risk <= epsilon. The LRT uses the exact
/// total risk; other tests use risk_hat + 2 stderr from mc_risk.
/// std::nullopt when no n in range qualifies.
[[nodiscard]] std::optional<std::size_t> sample_complexity(const TrialConfig& config,
                                                           double epsilon, std::size_t n_min,
                                                           std::size_t n_max);

enum class RateColumn { kExactTypeOne, kRiskHat };

struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  std::size_t points = 0;
};

inline constexpr double kRateWindowLow = 1e-3;
inline constexpr double kRateWindowHigh = 0.5;

/// Least squares of log(value) on n over rows whose value lies in
/// [1e-3, 0.5]. Throws std::invalid_argument with fewer than 4 such rows.
[[nodiscard]] RateFit fit_rate(std::span<const SweepRow> rows, RateColumn column);

/// Ordinary least squares y = slope x + intercept.
[[nodiscard]] RateFit least_squares(std::span<const double> x, std::span<const double> y);

inline constexpr std::string_view kCsvHeader =
    "m,n,tau,d,D,trials,test,type1_hat,type2_hat,risk_hat,stderr,exact_type1,exact_type2,"
    "miss_prob,rate_envelope";

void write_csv(std::ostream& out, std::span<const SweepRow> rows);
/// Throws std::runtime_error on I/O failure.
void emit_csv(std::span<const SweepRow> rows, const std::filesystem::path& path);
/// Inverse of write_csv; throws std::runtime_error on malformed input.
[[nodiscard]] std::vector<SweepRow> read_csv(std::istream& in);

}  // namespace hominf
