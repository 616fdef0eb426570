#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hominf {

/// Row-major set of points sharing one dimension.
class PointCloud {
 public:
  PointCloud() = default;
  explicit PointCloud(std::size_t dim) : dim_(dim) {}
  PointCloud(std::size_t dim, std::vector<double> coords);

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] std::size_t size() const noexcept {
    return dim_ == 0 ? 0 : coords_.size() / dim_;
  }
  [[nodiscard]] bool empty() const noexcept { return size() == 0; }

  [[nodiscard]] std::span<const double> operator[](std::size_t i) const noexcept {
    return {coords_.data() + i * dim_, dim_};
  }
  [[nodiscard]] std::span<double> operator[](std::size_t i) noexcept {
    return {coords_.data() + i * dim_, dim_};
  }

  void reserve(std::size_t n) { coords_.reserve(n * dim_); }
  void push_back(std::span<const double> point);
  /// Appends a zero point and returns a view to fill in.
  std::span<double> emplace_zero();

  [[nodiscard]] const std::vector<double>& coords() const noexcept { return coords_; }

  friend bool operator==(const PointCloud&, const PointCloud&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<double> coords_;
};

[[nodiscard]] double squared_distance(std::span<const double> a,
                                      std::span<const double> b) noexcept;
[[nodiscard]] double distance(std::span<const double> a, std::span<const double> b) noexcept;

/// The null manifold: m disjoint d-spheres of radius tau in [0,1]^D.
///
/// Sphere indices are zero-based throughout the library. Packs made by
/// build_pack() sit on a regular grid and remember its size, which lets
/// assign() locate the nearest center in O(d). Hand-built packs have
/// grid_size() == 0 and fall back to a linear scan.
class SpherePack {
 public:
  /// Hand-built pack; no geometric checks beyond shape (see validate_pack).
  SpherePack(int intrinsic_dim, int ambient_dim, double radius, PointCloud centers);

  [[nodiscard]] int intrinsic_dim() const noexcept { return intrinsic_dim_; }
  [[nodiscard]] int ambient_dim() const noexcept { return ambient_dim_; }
  [[nodiscard]] double radius() const noexcept { return radius_; }
  [[nodiscard]] std::size_t grid_size() const noexcept { return grid_size_; }
  [[nodiscard]] std::size_t count() const noexcept { return centers_.size(); }
  [[nodiscard]] const PointCloud& centers() const noexcept { return centers_; }
  [[nodiscard]] std::span<const double> center(std::size_t i) const noexcept {
    return centers_[i];
  }
  /// m * A_d * tau^d, the d-dimensional measure of the union of spheres.
  [[nodiscard]] double total_volume() const noexcept;

 private:
  friend SpherePack build_pack(int, int, double);

  int intrinsic_dim_;
  int ambient_dim_;
  double radius_;
  std::size_t grid_size_ = 0;
  PointCloud centers_;
};

/// Surface measure of the unit d-sphere in R^{d+1}: 2 pi^{(d+1)/2} / Gamma((d+1)/2).
[[nodiscard]] double unit_sphere_area(int d);
/// Volume of the unit d-ball: pi^{d/2} / Gamma(d/2 + 1).
[[nodiscard]] double unit_ball_volume(int d);

/// Spheres per axis for radius tau: max(1, floor(1 / (4 tau))).
[[nodiscard]] std::size_t grid_size_for(double tau);

/// Grid pack with centers (tau + 4 tau k_1, ..., tau + 4 tau k_d, tau, 0, ..., 0).
/// Center index is k_1 + g k_2 + g^2 k_3 + ...
/// Throws std::invalid_argument if D <= d, d < 1 or tau is outside (0, 1/2).
[[nodiscard]] SpherePack build_pack(int d, int D, double tau);

struct ValidationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  [[nodiscard]] bool all_passed() const noexcept;
};

/// Containment in [0,1]^D, 4 tau center separation, count bounds, embedding.
[[nodiscard]] ValidationReport validate_pack(const SpherePack& pack);

/// Uniform density of P_0 with respect to d-dimensional volume: 1 / total_volume.
[[nodiscard]] double density_floor(const SpherePack& pack);
/// The ball-volume variant 1 / (v_d tau^d m).
[[nodiscard]] double ball_volume_density_floor(const SpherePack& pack);

enum class HypothesisKind { kNull, kAlternate, kMixture };

struct Hypothesis {
  HypothesisKind kind = HypothesisKind::kNull;
  /// Removed sphere, meaningful for kAlternate only.
  std::size_t removed = 0;

  static Hypothesis null() { return {HypothesisKind::kNull, 0}; }
  static Hypothesis alternate(std::size_t i) { return {HypothesisKind::kAlternate, i}; }
  static Hypothesis mixture() { return {HypothesisKind::kMixture, 0}; }

  friend bool operator==(const Hypothesis&, const Hypothesis&) = default;
};

[[nodiscard]] std::string to_string(const Hypothesis& hyp);

struct SampleSet {
  PointCloud points;
  Hypothesis hypothesis;
  /// Set whenever the hypothesis resolved to an alternate.
  std::optional<std::size_t> removed_index;
  std::uint64_t seed = 0;

  [[nodiscard]] std::size_t size() const noexcept { return points.size(); }
};

/// n i.i.d. uniform points on the pack (Null), on the pack minus one sphere
/// (Alternate), or on the pack minus a uniformly drawn sphere (Mixture, one
/// draw per call). Deterministic in (pack, hyp, n, seed).
[[nodiscard]] SampleSet sample(const SpherePack& pack, const Hypothesis& hyp, std::size_t n,
                               std::uint64_t seed);

/// Index of the nearest center, lowest index on ties. Throws
/// std::invalid_argument when the point is farther than tau/2 from every
/// sphere surface or has the wrong dimension.
[[nodiscard]] std::size_t assign(const SpherePack& pack, std::span<const double> point);

}  // namespace hominf
