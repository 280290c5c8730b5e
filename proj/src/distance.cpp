#include "lesiondist/distance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace lesiondist {

DistanceKind kind_from_name(std::string_view name) {
  if (name == "geodesic") return DistanceKind::Geodesic;
  if (name == "intensity") return DistanceKind::Intensity;
  if (name == "euclidean") return DistanceKind::Euclidean;
  fail(Errc::ConfigError, "unknown distance kind '" + std::string(name) + "'");
}

namespace {

// Finite stand-in for +inf so relaxations never overflow.
constexpr double kUnreached = std::numeric_limits<double>::max() / 2;

struct NeighborOffset {
  int dz, dy, dx;
  std::ptrdiff_t linear;  // index offset in row-major storage
  double step;            // spatial length of the move, spacing applied
};

struct Neighborhood {
  std::vector<NeighborOffset> forward;   // offsets preceding the center in raster order
  std::vector<NeighborOffset> backward;  // the complement
  std::vector<NeighborOffset> all;
};

Neighborhood make_neighborhood(const VoxelGrid& g, std::span<const double> spacing) {
  const int nd = g.ndim();
  std::vector<double> sp(3, 1.0);
  if (!spacing.empty()) {
    if (static_cast<int>(spacing.size()) != nd)
      fail(Errc::ConfigError, "spacing must have one entry per axis");
    for (int i = 0; i < nd; ++i) {
      if (!(spacing[i] > 0)) fail(Errc::ConfigError, "spacing entries must be positive");
      sp[3 - nd + i] = spacing[i];
    }
  }

  Neighborhood nb;
  const int zlo = nd == 3 ? -1 : 0, zhi = nd == 3 ? 1 : 0;
  for (int dz = zlo; dz <= zhi; ++dz) {
    for (int dy = -1; dy <= 1; ++dy) {
      for (int dx = -1; dx <= 1; ++dx) {
        if (dz == 0 && dy == 0 && dx == 0) continue;
        NeighborOffset o;
        o.dz = dz;
        o.dy = dy;
        o.dx = dx;
        o.linear = (static_cast<std::ptrdiff_t>(dz) * g.height() + dy) * g.width() + dx;
        o.step = std::sqrt(dz * sp[0] * dz * sp[0] + dy * sp[1] * dy * sp[1] +
                           dx * sp[2] * dx * sp[2]);
        const bool precedes = dz < 0 || (dz == 0 && (dy < 0 || (dy == 0 && dx < 0)));
        (precedes ? nb.forward : nb.backward).push_back(o);
        nb.all.push_back(o);
      }
    }
  }
  return nb;
}

inline double edge_cost(DistanceKind kind, double intensity_diff, double step) {
  switch (kind) {
    case DistanceKind::Geodesic:
      return std::sqrt(intensity_diff * intensity_diff + step * step);
    case DistanceKind::Intensity:
      return std::abs(intensity_diff);
    case DistanceKind::Euclidean:
      return step;
  }
  return 0.0;
}

void check_inputs(const VoxelGrid& image, const DotSet& dots) {
  if (dots.empty()) fail(Errc::EmptyDotSet, "distance transform needs at least one dot");
  dots.check_in_bounds(image);
}

}  // namespace

DistanceMap distance_transform(const VoxelGrid& image, const DotSet& dots, DistanceKind kind,
                               std::span<const double> spacing, int max_passes) {
  check_inputs(image, dots);
  const Neighborhood nb = make_neighborhood(image, spacing);
  const int nz = image.depth(), ny = image.height(), nx = image.width();
  const std::vector<float>& g = image.data();

  std::vector<double> dist(image.size(), kUnreached);
  for (const Coord& c : dots.coords()) dist[image.index(c)] = 0.0;

  // One directed sweep: ascending raster order with the forward mask, or
  // descending with the backward mask. Accumulates in double; each update
  // is a relaxation, so values only decrease.
  const auto sweep = [&](const std::vector<NeighborOffset>& mask, bool ascending) {
    bool changed = false;
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(image.size());
    for (std::ptrdiff_t s = 0; s < n; ++s) {
      const std::ptrdiff_t i = ascending ? s : n - 1 - s;
      const int x = static_cast<int>(i % nx);
      const int y = static_cast<int>((i / nx) % ny);
      const int z = static_cast<int>(i / (static_cast<std::ptrdiff_t>(nx) * ny));
      double best = dist[i];
      for (const NeighborOffset& o : mask) {
        const int zz = z + o.dz, yy = y + o.dy, xx = x + o.dx;
        if (zz < 0 || zz >= nz || yy < 0 || yy >= ny || xx < 0 || xx >= nx) continue;
        const std::ptrdiff_t j = i + o.linear;
        const double cand = dist[j] + edge_cost(kind, static_cast<double>(g[i]) - g[j], o.step);
        if (cand < best) best = cand;
      }
      if (best < dist[i]) {
        dist[i] = best;
        changed = true;
      }
    }
    return changed;
  };

  int passes = 0;
  bool changed = true;
  while (changed) {
    if (passes >= max_passes)
      fail(Errc::DidNotConverge,
           "no fixed point after " + std::to_string(max_passes) + " iterations");
    const bool fwd = sweep(nb.forward, true);
    const bool bwd = sweep(nb.backward, false);
    changed = fwd || bwd;
    ++passes;
  }

  std::vector<float> out(image.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<float>(dist[i]);
  return DistanceMap{VoxelGrid(image.dims(), std::move(out)), kind, passes};
}

VoxelGrid dijkstra_oracle(const VoxelGrid& image, const DotSet& dots, DistanceKind kind,
                          std::span<const double> spacing) {
  check_inputs(image, dots);
  const Neighborhood nb = make_neighborhood(image, spacing);
  const int nz = image.depth(), ny = image.height(), nx = image.width();
  const std::vector<float>& g = image.data();

  std::vector<double> dist(image.size(), kUnreached);
  using Entry = std::pair<double, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  for (const Coord& c : dots.coords()) {
    dist[image.index(c)] = 0.0;
    heap.emplace(0.0, image.index(c));
  }

  while (!heap.empty()) {
    const auto [d, i] = heap.top();
    heap.pop();
    if (d > dist[i]) continue;  // stale entry
    const int x = static_cast<int>(i % nx);
    const int y = static_cast<int>((i / nx) % ny);
    const int z = static_cast<int>(i / (static_cast<std::size_t>(nx) * ny));
    for (const NeighborOffset& o : nb.all) {
      const int zz = z + o.dz, yy = y + o.dy, xx = x + o.dx;
      if (zz < 0 || zz >= nz || yy < 0 || yy >= ny || xx < 0 || xx >= nx) continue;
      const std::size_t j = i + o.linear;
      const double cand = d + edge_cost(kind, static_cast<double>(g[i]) - g[j], o.step);
      if (cand < dist[j]) {
        dist[j] = cand;
        heap.emplace(cand, j);
      }
    }
  }

  std::vector<float> out(image.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<float>(dist[i]);
  return VoxelGrid(image.dims(), std::move(out));
}

}  // namespace lesiondist
