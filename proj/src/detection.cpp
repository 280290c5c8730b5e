#include "lesiondist/detection.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace lesiondist {

namespace {

constexpr int kWindowHalf = 2;  // 5x5 maximum filter

// Round to nearest, exact .5 toward the smaller index.
int round_half_down(double v) {
  const double fl = std::floor(v);
  return static_cast<int>(fl) + ((v - fl) > 0.5 ? 1 : 0);
}

void sort_detections(std::vector<Detection>& items) {
  std::sort(items.begin(), items.end(), [](const Detection& a, const Detection& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.y != b.y) return a.y < b.y;
    return a.x < b.x;
  });
}

}  // namespace

DetectionSet local_maxima(const VoxelGrid& map) {
  if (map.ndim() != 2) fail(Errc::ConfigError, "local_maxima expects a 2D map");
  const int h = map.height(), w = map.width();

  std::vector<char> candidate(map.size(), 0);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const float v = map.at(y, x);
      bool is_max = true;
      for (int yy = std::max(0, y - kWindowHalf); is_max && yy <= std::min(h - 1, y + kWindowHalf); ++yy)
        for (int xx = std::max(0, x - kWindowHalf); xx <= std::min(w - 1, x + kWindowHalf); ++xx)
          if (map.at(yy, xx) > v) {
            is_max = false;
            break;
          }
      if (is_max) candidate[map.index(y, x)] = 1;
    }
  }

  // Adjacent candidates necessarily share a value (each lies in the other's
  // window), so plateaus are plain 8-connected components of the mask.
  std::vector<Detection> items;
  std::vector<char> seen(map.size(), 0);
  std::vector<std::size_t> stack;
  for (std::size_t start = 0; start < map.size(); ++start) {
    if (!candidate[start] || seen[start]) continue;
    stack.assign(1, start);
    seen[start] = 1;
    long long sum_y = 0, sum_x = 0, count = 0;
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      const int y = static_cast<int>(i) / w, x = static_cast<int>(i) % w;
      sum_y += y;
      sum_x += x;
      ++count;
      for (int yy = std::max(0, y - 1); yy <= std::min(h - 1, y + 1); ++yy) {
        for (int xx = std::max(0, x - 1); xx <= std::min(w - 1, x + 1); ++xx) {
          const std::size_t j = map.index(yy, xx);
          if (candidate[j] && !seen[j]) {
            seen[j] = 1;
            stack.push_back(j);
          }
        }
      }
    }
    Detection d;
    d.y = round_half_down(static_cast<double>(sum_y) / count);
    d.x = round_half_down(static_cast<double>(sum_x) / count);
    d.score = map[start];
    items.push_back(d);
  }

  sort_detections(items);
  // Interleaved plateaus can round to the same voxel; keep the higher score.
  std::vector<Detection> unique;
  for (const Detection& d : items) {
    const bool dup = std::any_of(unique.begin(), unique.end(), [&](const Detection& u) {
      return u.y == d.y && u.x == d.x;
    });
    if (!dup) unique.push_back(d);
  }
  return DetectionSet{std::move(unique)};
}

DetectionSet threshold_detections(const DetectionSet& cands, double threshold) {
  DetectionSet out;
  out.threshold = threshold;
  for (const Detection& d : cands.items)
    if (d.score >= threshold) out.items.push_back(d);
  return out;
}

void detections_write_csv(const DetectionSet& dets, const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::trunc);
  if (!os) fail(Errc::IoFailure, "cannot open " + path.string() + " for writing");
  os << "y,x,score\n";
  os.precision(17);
  for (const Detection& d : dets.items) os << d.y << "," << d.x << "," << d.score << "\n";
  if (!os.good()) fail(Errc::IoFailure, "write error on " + path.string());
}

DetectionSet detections_read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::IoFailure, "cannot open " + path.string());
  DetectionSet out;
  std::string line;
  int lineno = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (first) {
      first = false;
      if (line == "y,x,score") continue;
    }
    std::istringstream ss(line);
    Detection d;
    char c1 = 0, c2 = 0;
    if (!(ss >> d.y >> c1 >> d.x >> c2 >> d.score) || c1 != ',' || c2 != ',')
      fail(Errc::ParseError, "line " + std::to_string(lineno) + " of " + path.string());
    out.items.push_back(d);
  }
  sort_detections(out.items);
  return out;
}

}  // namespace lesiondist
