#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "lesiondist/error.hpp"

namespace lesiondist {

/// Voxel coordinate, ordered (z,y,x) to match row-major storage.
/// 2D coordinates keep z == 0.
using Coord = std::array<int, 3>;

std::string coord_to_string(const Coord& c, int ndim);

/// Dense scalar field over a 2D or 3D voxel grid. Row-major, x fastest.
/// Values are finite 32-bit floats; construction rejects NaN/Inf.
class VoxelGrid {
 public:
  VoxelGrid(std::vector<int> dims, std::vector<float> data);

  static VoxelGrid zeros(std::vector<int> dims);
  static VoxelGrid filled(std::vector<int> dims, float value);

  int ndim() const { return static_cast<int>(dims_.size()); }
  const std::vector<int>& dims() const { return dims_; }
  int depth() const { return ndim() == 3 ? dims_[0] : 1; }
  int height() const { return dims_[ndim() - 2]; }
  int width() const { return dims_.back(); }
  std::size_t size() const { return data_.size(); }

  std::size_t index(int y, int x) const {
    return static_cast<std::size_t>(y) * width() + x;
  }
  std::size_t index(int z, int y, int x) const {
    return (static_cast<std::size_t>(z) * height() + y) * width() + x;
  }
  std::size_t index(const Coord& c) const { return index(c[0], c[1], c[2]); }

  bool contains(const Coord& c) const {
    if (ndim() == 2 && c[0] != 0) return false;
    return c[0] >= 0 && c[0] < depth() && c[1] >= 0 && c[1] < height() && c[2] >= 0 &&
           c[2] < width();
  }

  float operator[](std::size_t i) const { return data_[i]; }
  float& operator[](std::size_t i) { return data_[i]; }
  float at(int y, int x) const { return data_[index(y, x)]; }
  float at(int z, int y, int x) const { return data_[index(z, y, x)]; }

  const std::vector<float>& data() const { return data_; }
  std::vector<float>& data() { return data_; }

  float max_value() const;

  bool operator==(const VoxelGrid&) const = default;

 private:
  std::vector<int> dims_;
  std::vector<float> data_;
};

/// Set of annotation coordinates on a grid. Rejects duplicates.
class DotSet {
 public:
  explicit DotSet(int ndim = 2) : ndim_(ndim) {}
  DotSet(int ndim, std::vector<Coord> coords);

  int ndim() const { return ndim_; }
  std::size_t size() const { return coords_.size(); }
  bool empty() const { return coords_.empty(); }
  const std::vector<Coord>& coords() const { return coords_; }
  const Coord& operator[](std::size_t i) const { return coords_[i]; }

  /// Throws OutOfBounds unless every dot lies inside the grid.
  void check_in_bounds(const VoxelGrid& grid) const;

  bool operator==(const DotSet&) const = default;

 private:
  int ndim_;
  std::vector<Coord> coords_;
};

// Binary grid container: magic "LDGR", u16 version = 1, u16 ndim, u32 dims,
// then little-endian f32 payload, row-major. Round-trips bit-exactly.
VoxelGrid grid_read(const std::filesystem::path& path);
void grid_write(const VoxelGrid& grid, const std::filesystem::path& path);

// Dot CSV: one coordinate per line, "y,x" (2D) or "z,y,x" (3D), optional
// header line matching the column names.
DotSet dots_read_csv(const std::filesystem::path& path, int ndim);
void dots_write_csv(const DotSet& dots, const std::filesystem::path& path);

}  // namespace lesiondist
