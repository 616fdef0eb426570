#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hominf/geometry.hpp"

namespace hominf {

using Vertex = std::uint32_t;
/// Strictly increasing vertex indices; a q-simplex has q+1 of them.
using Simplex = std::vector<Vertex>;

struct RipsOptions {
  std::size_t max_points = 2000;
};

inline constexpr int kMaxRipsDim = 3;

/// Finite simplicial complex closed under taking faces.
///
/// Simplices of each dimension are kept in lexicographic order, which makes
/// face lookup a binary search.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Smallest complex on `vertex_count` vertices containing every generator
  /// and all of its faces, truncated at `max_dim`. Every vertex is present.
  static SimplicialComplex closure(std::size_t vertex_count, int max_dim,
                                   const std::vector<Simplex>& generators);

  [[nodiscard]] std::size_t vertex_count() const noexcept { return vertex_count_; }
  [[nodiscard]] int max_dim() const noexcept { return max_dim_; }
  [[nodiscard]] double scale() const noexcept { return scale_; }
  /// q-simplices in lexicographic order; empty for q outside [0, max_dim].
  [[nodiscard]] const std::vector<Simplex>& simplices(int q) const;
  [[nodiscard]] std::size_t size(int q) const { return simplices(q).size(); }
  /// Position of `s` among the simplices of its dimension, or -1.
  [[nodiscard]] std::ptrdiff_t index_of(const Simplex& s) const;

  /// sum_q (-1)^q #q-simplices.
  [[nodiscard]] long long euler_characteristic() const;

 private:
  friend SimplicialComplex rips(const PointCloud&, double, int, const RipsOptions&);

  std::size_t vertex_count_ = 0;
  int max_dim_ = 0;
  double scale_ = 0.0;
  std::vector<std::vector<Simplex>> by_dim_;
};

/// Vietoris-Rips complex: q-simplices are the (q+1)-subsets whose pairwise
/// distances are all <= eps. Throws std::invalid_argument for max_dim outside
/// [1, 3], non-positive eps, or more than options.max_points points.
[[nodiscard]] SimplicialComplex rips(const PointCloud& points, double eps, int max_dim,
                                     const RipsOptions& options = {});

/// Betti numbers over GF(2).
///
/// betti[q] = #q-simplices - rank d_q - rank d_{q+1} for q = 0..max_dim of
/// the complex it was computed from, with d_{max_dim+1} = 0. The top entry is
/// the homology of the truncated complex; for a Rips complex only the entries
/// below max_dim describe the full Rips filtration level.
struct BettiProfile {
  std::vector<std::size_t> betti;
  long long euler_characteristic = 0;

  [[nodiscard]] std::size_t beta(int q) const {
    return q >= 0 && static_cast<std::size_t>(q) < betti.size() ? betti[q] : 0;
  }
};

/// Rank over GF(2) of the boundary map from q-simplices to (q-1)-simplices,
/// by column reduction. rank d_0 = 0.
[[nodiscard]] std::size_t boundary_rank(const SimplicialComplex& complex, int q);

[[nodiscard]] BettiProfile betti(const SimplicialComplex& complex);

struct ClusterEstimate {
  double threshold = 0.0;
  std::size_t cluster_count = 0;
};

/// Connected components of the graph {dist <= threshold} via union-find.
/// Equals beta_0 of rips(points, threshold, 1). Throws on empty input.
[[nodiscard]] ClusterEstimate betti0_linkage(const PointCloud& points, double threshold);

/// Component label (0..count-1, in order of first appearance) of every point.
[[nodiscard]] std::vector<std::size_t> linkage_labels(const PointCloud& points,
                                                      double threshold);

struct EstimatorOptions {
  /// Betti numbers beta_0..beta_{max_dim-1} are reported; 1 means beta_0 only.
  int max_dim = 2;
  /// Above this many points only beta_0 is computed.
  std::size_t point_budget = 2000;
};

/// Plug-in homology estimate from a sample at the given Rips scale.
///
/// beta_0 always comes from single linkage. Higher Betti numbers come from
/// rips + betti when the sample fits the point budget; otherwise betti holds
/// beta_0 alone and euler_characteristic is set to beta_0. The scale must lie in
/// (0, 2 tau), below the gap between neighbouring spheres.
[[nodiscard]] BettiProfile homology_estimator(const SpherePack& pack, const SampleSet& samples,
                                              double scale, const EstimatorOptions& options = {});

}  // namespace hominf
