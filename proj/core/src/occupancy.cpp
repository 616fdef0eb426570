#include "hominf/occupancy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>

namespace hominf {

OccupancySummary summarize_counts(std::vector<std::size_t> counts) {
  OccupancySummary s;
  s.m = counts.size();
  for (const auto c : counts) {
    s.n += c;
    if (c == 0) ++s.empty_count;
  }
  s.counts = std::move(counts);
  return s;
}

OccupancySummary summarize(const SpherePack& pack, const SampleSet& samples) {
  std::vector<std::size_t> counts(pack.count(), 0);
  for (std::size_t p = 0; p < samples.points.size(); ++p) {
    ++counts[assign(pack, samples.points[p])];
  }
  return summarize_counts(std::move(counts));
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
// Terms this far (in log units) below the running maximum of a unimodal
// series are dropped together with everything after them.
constexpr double kTailCutoff = 60.0;
// Absolute error budget before switching to the recursion.
constexpr double kMaxSeriesError = 1e-12;

/// Signed sum of terms given as (sign, log|term|), Neumaier-compensated, with
/// a running bound on the rounding error caused by cancellation.
class AlternatingSeries {
 public:
  /// `log_scale` bounds the magnitudes of the pieces summed into
  /// log_magnitude; their rounding sets the term's relative error.
  void add(bool negative, double log_magnitude, double log_scale) {
    if (log_magnitude == -std::numeric_limits<double>::infinity()) return;
    add_value(negative, std::exp(log_magnitude), 8.0 + 2.0 * log_scale);
  }

  /// Term given directly with relative error ~ eps * rel_scale.
  void add_value(bool negative, double mag, double rel_scale) {
    const double term = negative ? -mag : mag;
    const double t = sum_ + term;
    if (std::abs(sum_) >= std::abs(term)) {
      comp_ += (sum_ - t) + term;
    } else {
      comp_ += (term - t) + sum_;
    }
    sum_ = t;
    error_ += mag * kEps * rel_scale;
  }

  [[nodiscard]] double value() const noexcept { return sum_ + comp_; }

  [[nodiscard]] double error_bound() const noexcept { return error_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
  double error_ = 0.0;
};

/// log(1 - s/m) for 0 <= s < m.
class LogFraction {
 public:
  explicit LogFraction(std::size_t m)
      : m_(static_cast<double>(m)), log_m_(std::log(static_cast<double>(m))) {}

  [[nodiscard]] double operator()(std::size_t s) const {
    const auto sd = static_cast<double>(s);
    if (2.0 * sd <= m_) return std::log1p(-sd / m_);
    return std::log(m_ - sd) - log_m_;
  }

 private:
  double m_;
  double log_m_;
};

/// Binomial coefficient carried exactly while it stays below 2^53.
class ExactBinomial {
 public:
  /// C(top, j) -> C(top, j+1).
  void step(std::size_t top, std::size_t j) {
    if (!exact_) return;
    const std::uint64_t factor = top - j;
    if (value_ > kLimit / std::max<std::uint64_t>(factor, 1)) {
      exact_ = false;
      return;
    }
    value_ = value_ * factor / (j + 1);
    exact_ = value_ < kLimit;
  }
  [[nodiscard]] std::optional<double> value() const {
    return exact_ ? std::optional<double>(static_cast<double>(value_)) : std::nullopt;
  }

 private:
  static constexpr std::uint64_t kLimit = std::uint64_t{1} << 53;
  std::uint64_t value_ = 1;
  bool exact_ = true;
};

struct Prefactor {
  double log_value = 0.0;
  std::optional<double> exact;
};

/// sum_{j=0}^{m-k-1} (-1)^j C(m-k, j) (1 - (k+j)/m)^n, scaled by the prefactor.
/// The j = m-k term vanishes for n >= 1 and is omitted.
///
/// Magnitudes are taken from log space; when the binomials are exact
/// integers and the power is a normal double, the term is formed directly
/// instead, which keeps dyadic cases such as m = 2 exact.
AlternatingSeries inclusion_exclusion(std::size_t m, std::size_t n, std::size_t k,
                                      const Prefactor& prefactor, const LogFraction& log_frac) {
  AlternatingSeries series;
  const std::size_t free_bins = m - k;
  const auto nd = static_cast<double>(n);
  const auto md = static_cast<double>(m);
  double log_binom = 0.0;
  ExactBinomial binom;
  double peak = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < free_bins; ++j) {
    if (j > 0) {
      log_binom += std::log(static_cast<double>(free_bins - j + 1)) -
                   std::log(static_cast<double>(j));
      binom.step(free_bins, j - 1);
    }
    const std::size_t s = k + j;
    const double log_power = nd * log_frac(s);
    const double lm = prefactor.log_value + log_binom + log_power;
    // Rounding of (1 - s/m) is amplified n-fold by the power.
    const double input_scale = 0.5 * nd * static_cast<double>(s) / (md - static_cast<double>(s));

    const auto exact_binom = binom.value();
    const double power = lm > -700.0 ? std::pow((md - static_cast<double>(s)) / md, nd) : 0.0;
    if (prefactor.exact && exact_binom && power > 1e-290) {
      series.add_value(j % 2 == 1, *prefactor.exact * *exact_binom * power, 4.0 + input_scale);
    } else {
      series.add(j % 2 == 1, lm,
                 std::abs(prefactor.log_value) + log_binom + std::abs(log_power) +
                     static_cast<double>(j) + input_scale);
    }
    // log C(N, j) and log(1 - s/m) are both concave in j, so the magnitudes
    // are unimodal and the tail past the peak only shrinks.
    if (lm > peak) {
      peak = lm;
    } else if (lm < peak - kTailCutoff) {
      break;
    }
  }
  return series;
}

double clamp_probability(double p) { return std::clamp(p, 0.0, 1.0); }

void require_bins(std::size_t m) {
  if (m == 0) throw std::invalid_argument("occupancy: need at least one bin");
}

}  // namespace

OccupancyDistribution empty_count_distribution_recursive(std::size_t m, std::size_t n) {
  require_bins(m);
  const std::size_t top = std::min(n, m);
  const auto md = static_cast<double>(m);
  std::vector<double> occupied(top + 1, 0.0);
  occupied[0] = 1.0;
  for (std::size_t ball = 1; ball <= n; ++ball) {
    const std::size_t hi = std::min(ball, m);
    for (std::size_t j = hi; j >= 1; --j) {
      occupied[j] = occupied[j] * (static_cast<double>(j) / md) +
                    occupied[j - 1] * (static_cast<double>(m - j + 1) / md);
    }
    occupied[0] = 0.0;
  }
  OccupancyDistribution dist{m, n, std::vector<double>(m + 1, 0.0)};
  for (std::size_t j = 0; j <= top; ++j) dist.probabilities[m - j] = clamp_probability(occupied[j]);
  return dist;
}

OccupancyDistribution empty_count_distribution(std::size_t m, std::size_t n) {
  return empty_count_distribution(m, n, nullptr);
}

OccupancyDistribution empty_count_distribution(std::size_t m, std::size_t n,
                                               OccupancyMethod* used) {
  require_bins(m);
  if (used) *used = OccupancyMethod::kInclusionExclusion;
  OccupancyDistribution dist{m, n, std::vector<double>(m + 1, 0.0)};
  if (n == 0) {
    dist.probabilities[m] = 1.0;
    return dist;
  }

  const LogFraction log_frac(m);
  // P(K = k) = 0 for k < m - n (at most n bins can be hit) and for k = m.
  const std::size_t k_lo = n >= m ? 0 : m - n;
  Prefactor choose_mk{0.0, 1.0};
  ExactBinomial exact_choose_mk;
  double error = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    if (k > 0) {
      choose_mk.log_value +=
          std::log(static_cast<double>(m - k + 1)) - std::log(static_cast<double>(k));
      exact_choose_mk.step(m, k - 1);
      choose_mk.exact = exact_choose_mk.value();
    }
    if (k < k_lo) continue;
    const auto series = inclusion_exclusion(m, n, k, choose_mk, log_frac);
    dist.probabilities[k] = clamp_probability(series.value());
    error += series.error_bound();
  }

  if (error > kMaxSeriesError) {
    if (used) *used = OccupancyMethod::kRecursion;
    return empty_count_distribution_recursive(m, n);
  }
  return dist;
}

double prob_all_occupied(std::size_t m, std::size_t n) { return prob_all_occupied(m, n, nullptr); }

double prob_all_occupied(std::size_t m, std::size_t n, OccupancyMethod* used) {
  require_bins(m);
  if (used) *used = OccupancyMethod::kInclusionExclusion;
  if (n < m) return 0.0;
  if (m == 1) return 1.0;
  const auto series = inclusion_exclusion(m, n, 0, Prefactor{0.0, 1.0}, LogFraction(m));
  if (series.error_bound() > kMaxSeriesError) {
    if (used) *used = OccupancyMethod::kRecursion;
    return empty_count_distribution_recursive(m, n).probabilities[0];
  }
  return clamp_probability(series.value());
}

double miss_probability(std::size_t m, std::size_t n) { return 1.0 - prob_all_occupied(m, n); }

double coupon_limit(double c) { return -std::expm1(-std::exp(c)); }

std::size_t threshold_sample_size(std::size_t m, double delta) {
  require_bins(m);
  if (!(delta > 0.0 && delta <= 1.0)) {
    throw std::invalid_argument("threshold_sample_size: delta must lie in (0, 1]");
  }
  const auto md = static_cast<double>(m);
  return static_cast<std::size_t>(std::ceil(md * std::log(md) + md * std::log(1.0 / delta)));
}

}  // namespace hominf
