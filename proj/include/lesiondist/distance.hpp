#pragma once

#include <span>
#include <string_view>

#include "lesiondist/grid.hpp"

namespace lesiondist {

/// Edge-cost family for path lengths on the 8/26-connected grid graph.
/// Geodesic combines the intensity and spatial terms, sqrt(dI^2 + dE^2);
/// Intensity keeps only |dI|, Euclidean only the spatial step.
enum class DistanceKind { Geodesic, Intensity, Euclidean };

constexpr const char* kind_name(DistanceKind k) {
  switch (k) {
    case DistanceKind::Geodesic: return "geodesic";
    case DistanceKind::Intensity: return "intensity";
    case DistanceKind::Euclidean: return "euclidean";
  }
  return "?";
}

DistanceKind kind_from_name(std::string_view name);

struct DistanceMap {
  VoxelGrid grid;
  DistanceKind kind;
  /// Full forward+backward iterations executed until the fixed point
  /// (including the final iteration that changed nothing).
  int sweeps = 0;
};

/// Minimum path cost from every voxel to the nearest dot, via alternating
/// forward/backward raster sweeps run to a fixed point. Exact on the grid
/// graph. spacing gives per-axis voxel size in (z,)y,x order; empty = 1.
DistanceMap distance_transform(const VoxelGrid& image, const DotSet& dots, DistanceKind kind,
                               std::span<const double> spacing = {}, int max_passes = 100);

/// Multi-source Dijkstra on the same grid graph with the identical edge
/// costs. Reference implementation for small grids.
VoxelGrid dijkstra_oracle(const VoxelGrid& image, const DotSet& dots, DistanceKind kind,
                          std::span<const double> spacing = {});

}  // namespace lesiondist
