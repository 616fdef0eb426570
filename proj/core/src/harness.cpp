#include "hominf/harness.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>

#include "hominf/homology.hpp"
#include "hominf/lrt.hpp"
#include "hominf/occupancy.hpp"
#include "hominf/rng.hpp"

namespace hominf {

std::string_view to_string(TestKind kind) {
  switch (kind) {
    case TestKind::kLrt:
      return "lrt";
    case TestKind::kOccupancy:
      return "occupancy";
    case TestKind::kEstimator:
      return "estimator";
  }
  return "unknown";
}

TestKind parse_test_kind(std::string_view name) {
  if (name == "lrt") return TestKind::kLrt;
  if (name == "occupancy") return TestKind::kOccupancy;
  if (name == "estimator") return TestKind::kEstimator;
  throw std::invalid_argument("unknown test kind '" + std::string(name) + "'");
}

int apply_test(const TrialConfig& config, const SpherePack& pack, const SampleSet& samples) {
  switch (config.test) {
    case TestKind::kLrt:
      return likelihood_ratio(pack, samples).decision;
    case TestKind::kOccupancy:
      return summarize(pack, samples).empty_count > 0 ? 1 : 0;
    case TestKind::kEstimator: {
      EstimatorOptions beta0_only;
      beta0_only.max_dim = 1;
      const double scale = config.scale.value_or(pack.radius());
      return test_from_estimator(homology_estimator(pack, samples, scale, beta0_only), pack);
    }
  }
  throw std::logic_error("apply_test: unhandled test kind");
}

namespace {

void validate(const TrialConfig& config) {
  if (config.trials == 0) throw std::invalid_argument("trials must be at least 1");
  if (config.test == TestKind::kEstimator && config.scale) {
    const double s = *config.scale;
    if (!(s > 0.0 && s < 2.0 * config.tau)) {
      throw std::invalid_argument("estimator scale must lie in (0, 2 tau)");
    }
  }
}

unsigned worker_count(const TrialConfig& config) {
  unsigned t = config.threads != 0 ? config.threads : std::thread::hardware_concurrency();
  t = std::max(1u, t);
  return static_cast<unsigned>(std::min<std::size_t>(t, config.trials));
}

}  // namespace

RiskEstimate mc_risk(const TrialConfig& config) {
  validate(config);
  const SpherePack pack = build_pack(config.d, config.D, config.tau);
  if (pack.count() < 2) throw std::invalid_argument("mc_risk: the pack needs at least two spheres");

  const unsigned workers = worker_count(config);
  std::vector<std::size_t> rejections(workers, 0);
  std::vector<std::size_t> acceptances(workers, 0);
  std::vector<std::exception_ptr> errors(workers);

  auto run = [&](unsigned w) {
    try {
      // Strided split; each trial owns its substreams, so the split is irrelevant to results.
      for (std::size_t t = w; t < config.trials; t += workers) {
        const auto null_sample = sample(pack, Hypothesis::null(), config.n,
                                        substream_seed(config.master_seed, t, kNullStream));
        rejections[w] += static_cast<std::size_t>(apply_test(config, pack, null_sample));
        const auto alt_sample = sample(pack, Hypothesis::mixture(), config.n,
                                       substream_seed(config.master_seed, t, kMixtureStream));
        acceptances[w] += apply_test(config, pack, alt_sample) == 0 ? 1 : 0;
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  RiskEstimate est;
  est.trials = config.trials;
  for (unsigned w = 0; w < workers; ++w) {
    est.null_rejections += rejections[w];
    est.alternate_acceptances += acceptances[w];
  }
  const auto td = static_cast<double>(config.trials);
  est.type_one_hat = static_cast<double>(est.null_rejections) / td;
  est.type_two_hat = static_cast<double>(est.alternate_acceptances) / td;
  est.risk_hat = est.type_one_hat + est.type_two_hat;
  est.stderr_hat = std::sqrt(est.type_one_hat * (1.0 - est.type_one_hat) / td +
                             est.type_two_hat * (1.0 - est.type_two_hat) / td);
  if (config.test == TestKind::kLrt) {
    const auto exact = exact_lrt_risk(pack.count(), config.n);
    est.exact_type_one = exact.type_one;
    est.exact_type_two = exact.type_two;
  }
  return est;
}

namespace {

void check_increasing(std::span<const std::size_t> n_values) {
  if (n_values.empty()) throw std::invalid_argument("sweep: n_values must be nonempty");
  for (std::size_t i = 1; i < n_values.size(); ++i) {
    if (n_values[i] <= n_values[i - 1]) {
      throw std::invalid_argument("sweep: n_values must be strictly increasing");
    }
  }
}

SweepRow base_row(const TrialConfig& config, std::size_t m, std::size_t n) {
  SweepRow row;
  row.m = m;
  row.n = n;
  row.tau = config.tau;
  row.d = config.d;
  row.D = config.D;
  row.test = config.test;
  row.miss_prob = 1.0 - prob_all_occupied(m, n);
  if (config.delta) row.rate_envelope = risk_lower_bound(n, config.tau, config.d, *config.delta);
  return row;
}

}  // namespace

std::vector<SweepRow> sweep_n(const TrialConfig& config, std::span<const std::size_t> n_values) {
  check_increasing(n_values);
  const std::size_t m = build_pack(config.d, config.D, config.tau).count();
  std::vector<SweepRow> rows;
  rows.reserve(n_values.size());
  for (const auto n : n_values) {
    TrialConfig c = config;
    c.n = n;
    const auto est = mc_risk(c);
    SweepRow row = base_row(config, m, n);
    row.trials = est.trials;
    row.type_one_hat = est.type_one_hat;
    row.type_two_hat = est.type_two_hat;
    row.risk_hat = est.risk_hat;
    row.stderr_hat = est.stderr_hat;
    row.exact_type_one = est.exact_type_one;
    row.exact_type_two = est.exact_type_two;
    rows.push_back(row);
  }
  return rows;
}

std::vector<SweepRow> exact_sweep(const TrialConfig& config,
                                  std::span<const std::size_t> n_values) {
  check_increasing(n_values);
  const std::size_t m = build_pack(config.d, config.D, config.tau).count();
  std::vector<SweepRow> rows;
  rows.reserve(n_values.size());
  for (const auto n : n_values) {
    SweepRow row = base_row(config, m, n);
    row.test = TestKind::kLrt;
    const auto exact = exact_lrt_risk(m, n);
    row.exact_type_one = exact.type_one;
    row.exact_type_two = exact.type_two;
    rows.push_back(row);
  }
  return rows;
}

std::optional<std::size_t> sample_complexity(const TrialConfig& config, double epsilon,
                                             std::size_t n_min, std::size_t n_max) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("sample_complexity: epsilon must be positive");
  if (n_min > n_max) throw std::invalid_argument("sample_complexity: empty range");
  const std::size_t m = build_pack(config.d, config.D, config.tau).count();
  for (std::size_t n = n_min; n <= n_max; ++n) {
    double risk = 0.0;
    if (config.test == TestKind::kLrt) {
      risk = exact_lrt_risk(m, n).total;
    } else {
      TrialConfig c = config;
      c.n = n;
      const auto est = mc_risk(c);
      risk = est.risk_hat + 2.0 * est.stderr_hat;
    }
    if (risk <= epsilon) return n;
  }
  return std::nullopt;
}

RateFit least_squares(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("least_squares: need at least two paired values");
  }
  const auto k = static_cast<double>(x.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= k;
  my /= k;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("least_squares: x values are all equal");
  RateFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.points = x.size();
  return fit;
}

RateFit fit_rate(std::span<const SweepRow> rows, RateColumn column) {
  std::vector<double> x;
  std::vector<double> y;
  for (const auto& row : rows) {
    std::optional<double> v;
    if (column == RateColumn::kExactTypeOne) {
      v = row.exact_type_one;
    } else {
      v = row.risk_hat;
    }
    if (!v || *v < kRateWindowLow || *v > kRateWindowHigh) continue;
    x.push_back(static_cast<double>(row.n));
    y.push_back(std::log(*v));
  }
  if (x.size() < 4) {
    throw std::invalid_argument("fit_rate: " + std::to_string(x.size()) +
                                " rows in the fitting window, need at least 4");
  }
  return least_squares(x, y);
}

}  // namespace hominf
