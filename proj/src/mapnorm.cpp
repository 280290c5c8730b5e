#include "lesiondist/mapnorm.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace lesiondist {

TargetMap normalize_map(const DistanceMap& dm, double decay) {
  if (!(decay > 0)) fail(Errc::NonPositiveDecay, "decay must be positive");
  const float max = dm.grid.max_value();
  std::vector<float> out(dm.grid.size());
  if (max <= 0.0f) {
    std::fill(out.begin(), out.end(), 1.0f);
    return TargetMap{VoxelGrid(dm.grid.dims(), std::move(out)), dm.kind, decay, true};
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double ratio = static_cast<double>(dm.grid[i]) / max;
    out[i] = static_cast<float>(std::pow(1.0 - ratio, decay));
  }
  return TargetMap{VoxelGrid(dm.grid.dims(), std::move(out)), dm.kind, decay, false};
}

ShiftResult shift_dots(const VoxelGrid& image, const DotSet& dots, const ShiftConfig& cfg) {
  if (image.ndim() != 2) fail(Errc::ConfigError, "shift_dots expects a 2D image");
  dots.check_in_bounds(image);
  const int h = image.height(), w = image.width();
  const int half = cfg.window / 2;

  std::vector<Coord> shifted;
  std::vector<ShiftNote> notes;
  std::vector<char> member(image.size());  // scratch: component membership

  for (const Coord& dot : dots.coords()) {
    const int dy = dot[1], dx = dot[2];

    float wmax = 0.0f;
    for (int y = std::max(0, dy - half); y <= std::min(h - 1, dy + half); ++y)
      for (int x = std::max(0, dx - half); x <= std::min(w - 1, dx + half); ++x)
        wmax = std::max(wmax, image.at(y, x));

    const double thresh = cfg.component_fraction * wmax;
    if (wmax <= 0.0f || image.at(dy, dx) < thresh) {
      shifted.push_back(dot);
      notes.push_back(ShiftNote::NotOnComponent);
      continue;
    }

    // Flood the dot's 8-connected component of {image >= thresh}. The
    // component may wander outside the shift radius; eligibility is checked
    // against the radius afterwards.
    std::fill(member.begin(), member.end(), 0);
    std::vector<std::size_t> stack{image.index(dy, dx)};
    member[stack[0]] = 1;
    std::size_t best = stack[0];
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      const int y = static_cast<int>(i) / w, x = static_cast<int>(i) % w;
      const double ry = y - dy, rx = x - dx;
      if (ry * ry + rx * rx <= cfg.radius * cfg.radius) {
        if (image[i] > image[best] ||
            (image[i] == image[best] && i < best))
          best = i;
      }
      for (int ny = std::max(0, y - 1); ny <= std::min(h - 1, y + 1); ++ny) {
        for (int nx = std::max(0, x - 1); nx <= std::min(w - 1, x + 1); ++nx) {
          const std::size_t j = image.index(ny, nx);
          if (!member[j] && image[j] >= thresh) {
            member[j] = 1;
            stack.push_back(j);
          }
        }
      }
    }

    const int by = static_cast<int>(best) / w, bx = static_cast<int>(best) % w;
    shifted.push_back(Coord{0, by, bx});
    notes.push_back(best == image.index(dy, dx) ? ShiftNote::Unmoved : ShiftNote::Moved);
  }

  // Two dots can land on the same peak; collapse exact collisions.
  std::vector<Coord> unique;
  for (const Coord& c : shifted) {
    if (std::find(unique.begin(), unique.end(), c) == unique.end()) unique.push_back(c);
  }
  return ShiftResult{DotSet(2, std::move(unique)), std::move(notes)};
}

VoxelGrid image_normalize(const VoxelGrid& image) {
  const float max = image.max_value();
  if (!(max > 0.0f)) fail(Errc::NonPositiveMax, "image maximum must be positive");
  std::vector<float> out(image.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = image[i] / max;
  return VoxelGrid(image.dims(), std::move(out));
}

}  // namespace lesiondist
