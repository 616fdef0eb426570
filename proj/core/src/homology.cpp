#include "hominf/homology.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace hominf {

namespace {

const std::vector<Simplex> kNoSimplices;

void check_simplex(const Simplex& s, std::size_t vertex_count) {
  if (s.empty()) throw std::invalid_argument("simplex must have at least one vertex");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= vertex_count) throw std::invalid_argument("simplex vertex out of range");
    if (i > 0 && s[i - 1] >= s[i]) {
      throw std::invalid_argument("simplex vertices must be strictly increasing");
    }
  }
}

/// Symmetric difference of two sorted index lists (addition over GF(2)).
void add_mod2(std::vector<std::size_t>& acc, const std::vector<std::size_t>& other,
              std::vector<std::size_t>& scratch) {
  scratch.clear();
  std::set_symmetric_difference(acc.begin(), acc.end(), other.begin(), other.end(),
                                std::back_inserter(scratch));
  acc.swap(scratch);
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

void expand_cliques(Simplex& current, const std::vector<Vertex>& candidates,
                    const std::vector<std::vector<Vertex>>& upper_neighbors, int max_dim,
                    std::vector<std::vector<Simplex>>& out) {
  const int dim = static_cast<int>(current.size()) - 1;
  out[dim].push_back(current);
  if (dim == max_dim) return;
  std::vector<Vertex> next;
  for (const Vertex v : candidates) {
    next.clear();
    const auto& nv = upper_neighbors[v];
    std::set_intersection(candidates.begin(), candidates.end(), nv.begin(), nv.end(),
                          std::back_inserter(next));
    current.push_back(v);
    expand_cliques(current, next, upper_neighbors, max_dim, out);
    current.pop_back();
  }
}

}  // namespace

SimplicialComplex SimplicialComplex::closure(std::size_t vertex_count, int max_dim,
                                             const std::vector<Simplex>& generators) {
  if (max_dim < 0) throw std::invalid_argument("closure: max_dim must be >= 0");
  std::vector<std::set<Simplex>> faces(static_cast<std::size_t>(max_dim) + 1);
  for (Vertex v = 0; v < vertex_count; ++v) faces[0].insert(Simplex{v});

  for (const auto& g : generators) {
    check_simplex(g, vertex_count);
    // Every nonempty subset of g up to max_dim+1 vertices is a face.
    const std::size_t k = g.size();
    if (k > 20) throw std::invalid_argument("closure: generator too large");
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      const int q = std::popcount(mask) - 1;
      if (q > max_dim) continue;
      Simplex face;
      face.reserve(static_cast<std::size_t>(q) + 1);
      for (std::size_t i = 0; i < k; ++i) {
        if (mask & (1u << i)) face.push_back(g[i]);
      }
      faces[q].insert(std::move(face));
    }
  }

  SimplicialComplex c;
  c.vertex_count_ = vertex_count;
  c.max_dim_ = max_dim;
  c.by_dim_.resize(faces.size());
  for (std::size_t q = 0; q < faces.size(); ++q) {
    c.by_dim_[q].assign(faces[q].begin(), faces[q].end());
  }
  return c;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int q) const {
  if (q < 0 || static_cast<std::size_t>(q) >= by_dim_.size()) return kNoSimplices;
  return by_dim_[q];
}

std::ptrdiff_t SimplicialComplex::index_of(const Simplex& s) const {
  const auto& list = simplices(static_cast<int>(s.size()) - 1);
  const auto it = std::lower_bound(list.begin(), list.end(), s);
  if (it == list.end() || *it != s) return -1;
  return it - list.begin();
}

long long SimplicialComplex::euler_characteristic() const {
  long long chi = 0;
  for (std::size_t q = 0; q < by_dim_.size(); ++q) {
    const auto n = static_cast<long long>(by_dim_[q].size());
    chi += (q % 2 == 0) ? n : -n;
  }
  return chi;
}

SimplicialComplex rips(const PointCloud& points, double eps, int max_dim,
                       const RipsOptions& options) {
  if (max_dim < 1 || max_dim > kMaxRipsDim) {
    throw std::invalid_argument("rips: max_dim must lie in [1, " + std::to_string(kMaxRipsDim) +
                                "]");
  }
  if (!(eps > 0.0)) throw std::invalid_argument("rips: scale must be positive");
  const std::size_t n = points.size();
  if (n > options.max_points) {
    throw std::invalid_argument("rips: " + std::to_string(n) + " points exceed the budget of " +
                                std::to_string(options.max_points));
  }

  std::vector<std::vector<Vertex>> upper(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (distance(points[i], points[j]) <= eps) upper[i].push_back(static_cast<Vertex>(j));
    }
  }

  SimplicialComplex c;
  c.vertex_count_ = n;
  c.max_dim_ = max_dim;
  c.scale_ = eps;
  c.by_dim_.resize(static_cast<std::size_t>(max_dim) + 1);
  Simplex current;
  for (std::size_t i = 0; i < n; ++i) {
    current.assign(1, static_cast<Vertex>(i));
    expand_cliques(current, upper[i], upper, max_dim, c.by_dim_);
  }
  return c;
}

std::size_t boundary_rank(const SimplicialComplex& complex, int q) {
  if (q <= 0) return 0;
  const auto& cols = complex.simplices(q);
  const std::size_t rows = complex.size(q - 1);
  std::vector<std::ptrdiff_t> pivot_owner(rows, -1);
  std::vector<std::vector<std::size_t>> reduced(cols.size());
  std::vector<std::size_t> scratch;
  Simplex face;
  std::size_t rank = 0;

  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Simplex& s = cols[c];
    auto& col = reduced[c];
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      face.clear();
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (i != drop) face.push_back(s[i]);
      }
      const auto idx = complex.index_of(face);
      if (idx < 0) throw std::logic_error("boundary_rank: complex is not closed under faces");
      col.push_back(static_cast<std::size_t>(idx));
    }
    std::sort(col.begin(), col.end());

    while (!col.empty() && pivot_owner[col.back()] >= 0) {
      add_mod2(col, reduced[static_cast<std::size_t>(pivot_owner[col.back()])], scratch);
    }
    if (!col.empty()) {
      pivot_owner[col.back()] = static_cast<std::ptrdiff_t>(c);
      ++rank;
    }
  }
  return rank;
}

BettiProfile betti(const SimplicialComplex& complex) {
  const int top = complex.max_dim();
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 2, 0);
  for (int q = 1; q <= top; ++q) ranks[q] = boundary_rank(complex, q);

  BettiProfile profile;
  profile.euler_characteristic = complex.euler_characteristic();
  for (int q = 0; q <= top; ++q) {
    profile.betti.push_back(complex.size(q) - ranks[q] - ranks[q + 1]);
  }
  return profile;
}

std::vector<std::size_t> linkage_labels(const PointCloud& points, double threshold) {
  const std::size_t n = points.size();
  UnionFind uf(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (distance(points[i], points[j]) <= threshold) uf.unite(i, j);
    }
  }
  std::vector<std::size_t> root_label(n, n);
  std::vector<std::size_t> labels(n);
  std::size_t next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = uf.find(i);
    if (root_label[r] == n) root_label[r] = next++;
    labels[i] = root_label[r];
  }
  return labels;
}

ClusterEstimate betti0_linkage(const PointCloud& points, double threshold) {
  if (points.empty()) throw std::invalid_argument("betti0_linkage: empty point set");
  const auto labels = linkage_labels(points, threshold);
  return {threshold, *std::max_element(labels.begin(), labels.end()) + 1};
}

BettiProfile homology_estimator(const SpherePack& pack, const SampleSet& samples, double scale,
                                const EstimatorOptions& options) {
  if (!(scale > 0.0 && scale < 2.0 * pack.radius())) {
    throw std::invalid_argument("homology_estimator: scale must lie in (0, 2 tau)");
  }
  const PointCloud& points = samples.points;
  const std::size_t beta0 = points.empty() ? 0 : betti0_linkage(points, scale).cluster_count;

  BettiProfile profile;
  if (options.max_dim <= 1 || points.empty() || points.size() > options.point_budget) {
    profile.betti = {beta0};
    profile.euler_characteristic = static_cast<long long>(beta0);
    return profile;
  }
  const auto complex =
      rips(points, scale, std::min(options.max_dim, kMaxRipsDim), {options.point_budget});
  profile = betti(complex);
  profile.betti.resize(static_cast<std::size_t>(complex.max_dim()));
  profile.betti[0] = beta0;
  return profile;
}

}  // namespace hominf
