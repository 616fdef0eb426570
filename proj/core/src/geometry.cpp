#include "hominf/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hominf/rng.hpp"

namespace hominf {

PointCloud::PointCloud(std::size_t dim, std::vector<double> coords)
    : dim_(dim), coords_(std::move(coords)) {
  if (dim_ == 0 ? !coords_.empty() : coords_.size() % dim_ != 0) {
    throw std::invalid_argument("PointCloud: coordinate count is not a multiple of dim");
  }
}

void PointCloud::push_back(std::span<const double> point) {
  if (point.size() != dim_) {
    throw std::invalid_argument("PointCloud: point dimension mismatch");
  }
  coords_.insert(coords_.end(), point.begin(), point.end());
}

std::span<double> PointCloud::emplace_zero() {
  coords_.resize(coords_.size() + dim_, 0.0);
  return {coords_.data() + coords_.size() - dim_, dim_};
}

double squared_distance(std::span<const double> a, std::span<const double> b) noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double t = a[i] - b[i];
    s += t * t;
  }
  return s;
}

double distance(std::span<const double> a, std::span<const double> b) noexcept {
  return std::sqrt(squared_distance(a, b));
}

SpherePack::SpherePack(int intrinsic_dim, int ambient_dim, double radius, PointCloud centers)
    : intrinsic_dim_(intrinsic_dim),
      ambient_dim_(ambient_dim),
      radius_(radius),
      centers_(std::move(centers)) {
  if (intrinsic_dim_ < 1 || ambient_dim_ <= intrinsic_dim_) {
    throw std::invalid_argument("SpherePack: need 1 <= d < D");
  }
  if (!(radius_ > 0.0)) {
    throw std::invalid_argument("SpherePack: radius must be positive");
  }
  if (centers_.dim() != static_cast<std::size_t>(ambient_dim_) || centers_.empty()) {
    throw std::invalid_argument("SpherePack: centers must be a nonempty set in R^D");
  }
}

double SpherePack::total_volume() const noexcept {
  return static_cast<double>(count()) * unit_sphere_area(intrinsic_dim_) *
         std::pow(radius_, intrinsic_dim_);
}

double unit_sphere_area(int d) {
  const double h = 0.5 * (d + 1);
  return 2.0 * std::pow(std::numbers::pi, h) / std::tgamma(h);
}

double unit_ball_volume(int d) {
  const double h = 0.5 * d;
  return std::pow(std::numbers::pi, h) / std::tgamma(h + 1.0);
}

std::size_t grid_size_for(double tau) {
  // 1e-9 slack keeps exact quotients such as 1/(4 * 1/16) from rounding down.
  const double g = std::floor(1.0 / (4.0 * tau) + 1e-9);
  return std::max<std::size_t>(1, static_cast<std::size_t>(g));
}

SpherePack build_pack(int d, int D, double tau) {
  if (d < 1) throw std::invalid_argument("build_pack: intrinsic dimension must be >= 1");
  if (D <= d) throw std::invalid_argument("build_pack: ambient dimension must exceed d");
  if (!(tau > 0.0 && tau < 0.5)) {
    throw std::invalid_argument("build_pack: tau must lie in (0, 1/2)");
  }
  const std::size_t g = grid_size_for(tau);
  std::size_t m = 1;
  for (int j = 0; j < d; ++j) {
    if (m > std::numeric_limits<std::size_t>::max() / g || m * g > (std::size_t{1} << 26)) {
      throw std::invalid_argument("build_pack: too many spheres for this tau and d");
    }
    m *= g;
  }

  PointCloud centers(static_cast<std::size_t>(D));
  centers.reserve(m);
  std::vector<std::size_t> k(static_cast<std::size_t>(d), 0);
  for (std::size_t idx = 0; idx < m; ++idx) {
    auto c = centers.emplace_zero();
    std::size_t rest = idx;
    for (int j = 0; j < d; ++j) {
      c[j] = tau + 4.0 * tau * static_cast<double>(rest % g);
      rest /= g;
    }
    c[d] = tau;
  }
  SpherePack pack(d, D, tau, std::move(centers));
  pack.grid_size_ = g;
  return pack;
}

bool ValidationReport::all_passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

ValidationReport validate_pack(const SpherePack& pack) {
  ValidationReport report;
  const double tau = pack.radius();
  const int d = pack.intrinsic_dim();
  const std::size_t m = pack.count();
  constexpr double kTol = 1e-12;

  {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < m; ++i) {
      const auto c = pack.center(i);
      // A d-sphere in the first d+1 coordinates extends tau along each of them.
      for (int j = 0; j <= d; ++j) {
        lo = std::min(lo, c[j] - tau);
        hi = std::max(hi, c[j] + tau);
      }
      for (std::size_t j = d + 1; j < c.size(); ++j) {
        lo = std::min(lo, c[j]);
        hi = std::max(hi, c[j]);
      }
    }
    std::ostringstream os;
    os << "extent [" << lo << ", " << hi << "]";
    report.checks.push_back({"containment", lo >= -kTol && hi <= 1.0 + kTol, os.str()});
  }

  {
    double min_sq = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        min_sq = std::min(min_sq, squared_distance(pack.center(i), pack.center(j)));
      }
    }
    std::ostringstream os;
    if (m < 2) {
      os << "single sphere";
      report.checks.push_back({"separation", true, os.str()});
    } else {
      const double min_dist = std::sqrt(min_sq);
      os << "min center distance " << min_dist << " (need >= " << 4.0 * tau << ")";
      report.checks.push_back({"separation", min_dist >= 4.0 * tau * (1.0 - kTol), os.str()});
    }
  }

  {
    std::ostringstream os;
    if (tau <= 0.25) {
      const double lower = std::pow(8.0 * tau, -d);
      const double upper = std::pow(4.0 * tau, -d);
      const auto mm = static_cast<double>(m);
      os << "m = " << m << ", bounds [" << lower << ", " << upper << "]";
      report.checks.push_back(
          {"count_bounds", mm >= lower * (1.0 - kTol) && mm <= upper * (1.0 + kTol), os.str()});
    } else {
      os << "not applicable for tau > 1/4";
      report.checks.push_back({"count_bounds", true, os.str()});
    }
  }

  {
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      const auto c = pack.center(i);
      for (std::size_t j = d + 1; j < c.size(); ++j) ok = ok && c[j] == 0.0;
    }
    report.checks.push_back(
        {"embedding", ok, ok ? "coordinates beyond d+1 are zero" : "nonzero trailing coordinate"});
  }
  return report;
}

double density_floor(const SpherePack& pack) { return 1.0 / pack.total_volume(); }

double ball_volume_density_floor(const SpherePack& pack) {
  return 1.0 / (unit_ball_volume(pack.intrinsic_dim()) *
                std::pow(pack.radius(), pack.intrinsic_dim()) *
                static_cast<double>(pack.count()));
}

std::string to_string(const Hypothesis& hyp) {
  switch (hyp.kind) {
    case HypothesisKind::kNull:
      return "null";
    case HypothesisKind::kAlternate:
      return "alternate(" + std::to_string(hyp.removed) + ")";
    case HypothesisKind::kMixture:
      return "mixture";
  }
  return "unknown";
}

SampleSet sample(const SpherePack& pack, const Hypothesis& hyp, std::size_t n,
                 std::uint64_t seed) {
  const std::size_t m = pack.count();
  const int d = pack.intrinsic_dim();
  const double tau = pack.radius();

  SampleSet out;
  out.hypothesis = hyp;
  out.seed = seed;
  out.points = PointCloud(static_cast<std::size_t>(pack.ambient_dim()));

  SplitMix64 rng(seed);
  std::optional<std::size_t> removed;
  switch (hyp.kind) {
    case HypothesisKind::kNull:
      break;
    case HypothesisKind::kAlternate:
      if (m < 2) throw std::invalid_argument("sample: alternates need at least two spheres");
      if (hyp.removed >= m) throw std::invalid_argument("sample: alternate index out of range");
      removed = hyp.removed;
      break;
    case HypothesisKind::kMixture:
      if (m < 2) throw std::invalid_argument("sample: alternates need at least two spheres");
      removed = std::uniform_int_distribution<std::size_t>(0, m - 1)(rng);
      break;
  }
  out.removed_index = removed;

  const std::size_t allowed = removed ? m - 1 : m;
  std::uniform_int_distribution<std::size_t> pick(0, allowed - 1);
  std::normal_distribution<double> gauss;
  std::vector<double> dir(static_cast<std::size_t>(d) + 1);

  out.points.reserve(n);
  for (std::size_t p = 0; p < n; ++p) {
    std::size_t s = pick(rng);
    if (removed && s >= *removed) ++s;

    double norm_sq = 0.0;
    do {
      norm_sq = 0.0;
      for (auto& v : dir) {
        v = gauss(rng);
        norm_sq += v * v;
      }
    } while (norm_sq == 0.0);
    const double scale = tau / std::sqrt(norm_sq);

    auto x = out.points.emplace_zero();
    const auto c = pack.center(s);
    std::copy(c.begin(), c.end(), x.begin());
    for (std::size_t j = 0; j < dir.size(); ++j) x[j] += scale * dir[j];
  }
  return out;
}

namespace {

std::size_t nearest_on_grid(const SpherePack& pack, std::span<const double> x) {
  const double tau = pack.radius();
  const auto g = static_cast<long long>(pack.grid_size());
  std::size_t idx = 0;
  std::size_t stride = 1;
  for (int j = 0; j < pack.intrinsic_dim(); ++j) {
    // Rounds half down so that exact midpoints go to the lower index.
    long long k = static_cast<long long>(std::ceil((x[j] - tau) / (4.0 * tau) - 0.5));
    k = std::clamp<long long>(k, 0, g - 1);
    idx += static_cast<std::size_t>(k) * stride;
    stride *= static_cast<std::size_t>(g);
  }
  return idx;
}

std::size_t nearest_by_scan(const SpherePack& pack, std::span<const double> x) {
  std::size_t best = 0;
  double best_sq = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pack.count(); ++i) {
    const double sq = squared_distance(pack.center(i), x);
    if (sq < best_sq) {
      best_sq = sq;
      best = i;
    }
  }
  return best;
}

}  // namespace

std::size_t assign(const SpherePack& pack, std::span<const double> point) {
  if (point.size() != static_cast<std::size_t>(pack.ambient_dim())) {
    throw std::invalid_argument("assign: point dimension does not match the pack");
  }
  const std::size_t i =
      pack.grid_size() > 0 ? nearest_on_grid(pack, point) : nearest_by_scan(pack, point);
  const double tau = pack.radius();
  const double gap = std::abs(distance(pack.center(i), point) - tau);
  if (!(gap <= 0.5 * tau)) {
    throw std::invalid_argument("assign: point is not within tau/2 of any sphere");
  }
  return i;
}

}  // namespace hominf
