#pragma once

#include <cstddef>

#include "hominf/geometry.hpp"
#include "hominf/homology.hpp"

namespace hominf {

/// Likelihoods of one sample under P_0^n and under the uniform mixture of
/// the P_{1i}^n.
struct LikelihoodReport {
  double log_l0 = 0.0;
  /// -infinity when every alternate has zero likelihood (no empty sphere).
  double log_l1 = 0.0;
  double ratio = 0.0;
  std::size_t empty_count = 0;
  /// 1 rejects the null; the test accepts at ratio == 1.
  int decision = 0;
};

/// Requires m >= 2. Propagates assign() errors for foreign points.
[[nodiscard]] LikelihoodReport likelihood_ratio(const SpherePack& pack, const SampleSet& samples);

/// (k/m) (m/(m-1))^n, evaluated in log space. Throws for m < 2 or k > m.
[[nodiscard]] double likelihood_ratio_closed_form(std::size_t m, std::size_t n, std::size_t k);

/// (1/m) (1 - 1/m)^{-n}: the likelihood ratio when exactly one sphere is empty.
[[nodiscard]] double t_mn(std::size_t m, std::size_t n);

/// Smallest empty count k at which the likelihood ratio exceeds 1, or m + 1
/// if none does. Ties (ratio exactly 1) are resolved in exact integer
/// arithmetic: k m^{n-1} > (m-1)^n.
[[nodiscard]] std::size_t lrt_rejection_start(std::size_t m, std::size_t n);

/// Sign of log L at (m, n, k): -1, 0 or +1, exact.
[[nodiscard]] int likelihood_ratio_sign(std::size_t m, std::size_t n, std::size_t k);

struct ExactRiskReport {
  std::size_t m = 0;
  std::size_t n = 0;
  /// m (1 - 1/m)^n; the test rejects iff K exceeds it.
  double k_threshold = 0.0;
  double type_one = 0.0;
  double type_two = 0.0;
  double total = 0.0;
};

/// Exact Type I / Type II risk of the likelihood-ratio test against the
/// uniform mixture of alternates. Under every alternate K = 1 + K', with K'
/// the empty count of n balls in the other m-1 bins.
[[nodiscard]] ExactRiskReport exact_lrt_risk(std::size_t m, std::size_t n);

/// Exact total risk of "reject iff K >= t".
[[nodiscard]] double occupancy_threshold_risk(std::size_t m, std::size_t n, std::size_t t);

/// min(tau^{-d} exp(-n tau^d), delta) with all constants set to 1.
[[nodiscard]] double risk_lower_bound(std::size_t n, double tau, int d, double delta);

/// Plug-in test from a homology estimate: 0 (null) iff beta_0 >= m.
/// Over-fragmented estimates (beta_0 > m) count as the null.
[[nodiscard]] int test_from_estimator(const BettiProfile& estimate, const SpherePack& pack);

}  // namespace hominf
