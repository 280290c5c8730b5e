#pragma once

#include <filesystem>
#include <limits>
#include <vector>

#include "lesiondist/grid.hpp"

namespace lesiondist {

struct Detection {
  int y = 0;
  int x = 0;
  double score = 0.0;

  bool operator==(const Detection&) const = default;
};

/// Scored candidates, sorted by score descending then (y,x) ascending.
/// threshold records the cut applied; -inf marks an unthresholded set.
struct DetectionSet {
  std::vector<Detection> items;
  double threshold = -std::numeric_limits<double>::infinity();

  std::size_t size() const { return items.size(); }
  bool empty() const { return items.empty(); }
};

/// Non-maximum suppression with a 5x5 maximum filter, window truncated at
/// the borders. 8-connected plateaus of equal value collapse to a single
/// candidate at the plateau centroid (rounded, ties toward smaller index).
DetectionSet local_maxima(const VoxelGrid& map);

DetectionSet threshold_detections(const DetectionSet& cands, double threshold);

// Detection CSV: header "y,x,score", one candidate per line.
void detections_write_csv(const DetectionSet& dets, const std::filesystem::path& path);
DetectionSet detections_read_csv(const std::filesystem::path& path);

}  // namespace lesiondist
