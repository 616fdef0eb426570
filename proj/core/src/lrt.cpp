#include "hominf/lrt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "hominf/occupancy.hpp"

namespace hominf {

namespace {

void require_two_spheres(std::size_t m) {
  if (m < 2) throw std::invalid_argument("likelihood ratio test needs m >= 2");
}

/// log L = log(k/m) + n log(m/(m-1)) for k >= 1.
double log_ratio(std::size_t m, std::size_t n, std::size_t k) {
  const auto md = static_cast<double>(m);
  return std::log(static_cast<double>(k)) - std::log(md) -
         static_cast<double>(n) * std::log1p(-1.0 / md);
}

int exact_sign(std::size_t m, std::size_t n, std::size_t k) {
  using boost::multiprecision::cpp_int;
  // L > 1  <=>  k m^{n-1} > (m-1)^n, and L = k/m when n = 0.
  if (n == 0) return k > m ? 1 : (k == m ? 0 : -1);
  const cpp_int lhs = cpp_int(k) * boost::multiprecision::pow(cpp_int(m), static_cast<unsigned>(n - 1));
  const cpp_int rhs = boost::multiprecision::pow(cpp_int(m - 1), static_cast<unsigned>(n));
  return lhs > rhs ? 1 : (lhs == rhs ? 0 : -1);
}

}  // namespace

int likelihood_ratio_sign(std::size_t m, std::size_t n, std::size_t k) {
  require_two_spheres(m);
  if (k == 0) return -1;
  const double x = log_ratio(m, n, k);
  if (std::abs(x) > 1e-9) return x > 0 ? 1 : -1;
  return exact_sign(m, n, k);
}

double likelihood_ratio_closed_form(std::size_t m, std::size_t n, std::size_t k) {
  require_two_spheres(m);
  if (k > m) throw std::invalid_argument("likelihood_ratio_closed_form: k exceeds m");
  if (k == 0) return 0.0;
  return std::exp(log_ratio(m, n, k));
}

double t_mn(std::size_t m, std::size_t n) { return likelihood_ratio_closed_form(m, n, 1); }

std::size_t lrt_rejection_start(std::size_t m, std::size_t n) {
  require_two_spheres(m);
  const auto md = static_cast<double>(m);
  const double threshold = md * std::pow((md - 1.0) / md, static_cast<double>(n));
  std::size_t k = threshold >= md ? m + 1 : static_cast<std::size_t>(std::floor(threshold)) + 1;
  while (k > 1 && likelihood_ratio_sign(m, n, k - 1) > 0) --k;
  while (k <= m && likelihood_ratio_sign(m, n, k) <= 0) ++k;
  return k;
}

LikelihoodReport likelihood_ratio(const SpherePack& pack, const SampleSet& samples) {
  const std::size_t m = pack.count();
  require_two_spheres(m);
  const auto summary = summarize(pack, samples);
  const auto nd = static_cast<double>(summary.n);
  const auto md = static_cast<double>(m);

  const double log_null_density = -std::log(pack.total_volume());
  // Removing one sphere spreads the same mass over (m-1)/m of the volume.
  const double log_alt_density = log_null_density + std::log(md / (md - 1.0));

  LikelihoodReport r;
  r.empty_count = summary.empty_count;
  r.log_l0 = nd * log_null_density;

  // log of (1/m) sum_i L_{1i}; L_{1i} > 0 only when sphere i is empty.
  const double log_alt_term = nd * log_alt_density;
  double log_sum = -std::numeric_limits<double>::infinity();
  for (const auto c : summary.counts) {
    if (c != 0) continue;
    if (log_sum == -std::numeric_limits<double>::infinity()) {
      log_sum = log_alt_term;
    } else {
      const double hi = std::max(log_sum, log_alt_term);
      log_sum = hi + std::log(std::exp(log_sum - hi) + std::exp(log_alt_term - hi));
    }
  }
  r.log_l1 = log_sum - std::log(md);

  const int sign = likelihood_ratio_sign(m, summary.n, summary.empty_count);
  if (summary.empty_count == 0) {
    r.ratio = 0.0;
  } else {
    r.ratio = std::exp(r.log_l1 - r.log_l0);
    // Keep the reported ratio on the side of 1 given by the exact sign.
    if (sign == 0) {
      r.ratio = 1.0;
    } else if (sign > 0) {
      r.ratio = std::max(r.ratio, std::nextafter(1.0, 2.0));
    } else {
      r.ratio = std::min(r.ratio, std::nextafter(1.0, 0.0));
    }
  }
  r.decision = sign > 0 ? 1 : 0;
  return r;
}

namespace {

struct RejectionRisk {
  double type_one;
  double type_two;
};

RejectionRisk risk_for_start(const OccupancyDistribution& null_law,
                             const OccupancyDistribution& reduced_law, std::size_t start) {
  RejectionRisk r{0.0, 0.0};
  for (std::size_t k = start; k < null_law.probabilities.size(); ++k) {
    r.type_one += null_law.probabilities[k];
  }
  // Under an alternate K = 1 + K' with K' over the m-1 remaining bins.
  for (std::size_t kp = 0; kp < reduced_law.probabilities.size() && kp + 1 < start; ++kp) {
    r.type_two += reduced_law.probabilities[kp];
  }
  r.type_one = std::clamp(r.type_one, 0.0, 1.0);
  r.type_two = std::clamp(r.type_two, 0.0, 1.0);
  return r;
}

}  // namespace

ExactRiskReport exact_lrt_risk(std::size_t m, std::size_t n) {
  require_two_spheres(m);
  const auto null_law = empty_count_distribution(m, n);
  const auto reduced_law = empty_count_distribution(m - 1, n);
  const auto md = static_cast<double>(m);

  ExactRiskReport report;
  report.m = m;
  report.n = n;
  report.k_threshold = md * std::pow((md - 1.0) / md, static_cast<double>(n));
  const auto r = risk_for_start(null_law, reduced_law, lrt_rejection_start(m, n));
  report.type_one = r.type_one;
  report.type_two = r.type_two;
  report.total = r.type_one + r.type_two;
  return report;
}

double occupancy_threshold_risk(std::size_t m, std::size_t n, std::size_t t) {
  require_two_spheres(m);
  const auto r =
      risk_for_start(empty_count_distribution(m, n), empty_count_distribution(m - 1, n), t);
  return r.type_one + r.type_two;
}

double risk_lower_bound(std::size_t n, double tau, int d, double delta) {
  const double td = std::pow(tau, d);
  return std::min(std::exp(-static_cast<double>(n) * td) / td, delta);
}

int test_from_estimator(const BettiProfile& estimate, const SpherePack& pack) {
  return estimate.beta(0) >= pack.count() ? 0 : 1;
}

}  // namespace hominf
