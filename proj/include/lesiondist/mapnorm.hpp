#pragma once

#include <vector>

#include "lesiondist/distance.hpp"

namespace lesiondist {

/// Inverted, decay-normalized distance map: values in [0,1], 1 at the dots,
/// 0 at the distance maximum.
struct TargetMap {
  VoxelGrid grid;
  DistanceKind kind;
  double decay = 1.0;
  /// Set when max(DM) was zero; the map is then all ones by convention.
  bool degenerate = false;
};

struct ShiftConfig {
  double radius = 3.0;             // max Euclidean displacement, voxels
  double component_fraction = 0.6; // mask threshold as a fraction of the local window max
  int window = 7;                  // side of the window the threshold is taken over
};

enum class ShiftNote { Moved, Unmoved, NotOnComponent };

struct ShiftResult {
  DotSet dots;
  std::vector<ShiftNote> notes;  // aligned with the input dots
};

/// Elementwise (1 - DM/max(DM))^decay. A zero maximum yields all ones with
/// the degenerate flag set.
TargetMap normalize_map(const DistanceMap& dm, double decay);

/// Moves each dot to the brightest voxel that is within cfg.radius and in
/// the dot's 8-connected component of the thresholded image. Dots below the
/// threshold stay put and are tagged NotOnComponent. Ties go to the smaller
/// raster index.
ShiftResult shift_dots(const VoxelGrid& image, const DotSet& dots, const ShiftConfig& cfg = {});

/// Divides by the image maximum; output maximum is exactly 1.
VoxelGrid image_normalize(const VoxelGrid& image);

}  // namespace lesiondist
