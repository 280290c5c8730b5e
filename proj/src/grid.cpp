#include "lesiondist/grid.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <set>
#include <sstream>

namespace lesiondist {

std::string coord_to_string(const Coord& c, int ndim) {
  std::ostringstream os;
  os << "(";
  if (ndim == 3) os << c[0] << ",";
  os << c[1] << "," << c[2] << ")";
  return os.str();
}

VoxelGrid::VoxelGrid(std::vector<int> dims, std::vector<float> data)
    : dims_(std::move(dims)), data_(std::move(data)) {
  if (dims_.size() != 2 && dims_.size() != 3)
    fail(Errc::ParseError, "grid must be 2D or 3D, got ndim=" + std::to_string(dims_.size()));
  std::size_t n = 1;
  for (int d : dims_) {
    if (d <= 0) fail(Errc::ParseError, "non-positive dimension " + std::to_string(d));
    n *= static_cast<std::size_t>(d);
  }
  if (n != data_.size())
    fail(Errc::ParseError, "payload size " + std::to_string(data_.size()) +
                               " does not match dims product " + std::to_string(n));
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!std::isfinite(data_[i]))
      fail(Errc::NonFiniteValue, "non-finite value at index " + std::to_string(i));
  }
}

VoxelGrid VoxelGrid::zeros(std::vector<int> dims) { return filled(std::move(dims), 0.0f); }

VoxelGrid VoxelGrid::filled(std::vector<int> dims, float value) {
  std::size_t n = 1;
  for (int d : dims) n *= static_cast<std::size_t>(std::max(d, 0));
  return VoxelGrid(std::move(dims), std::vector<float>(n, value));
}

float VoxelGrid::max_value() const { return *std::max_element(data_.begin(), data_.end()); }

DotSet::DotSet(int ndim, std::vector<Coord> coords) : ndim_(ndim), coords_(std::move(coords)) {
  if (ndim_ != 2 && ndim_ != 3)
    fail(Errc::ParseError, "dot set must be 2D or 3D, got ndim=" + std::to_string(ndim_));
  std::set<Coord> seen;
  for (const Coord& c : coords_) {
    if (ndim_ == 2 && c[0] != 0)
      fail(Errc::ParseError, "2D dot with nonzero leading coordinate " + coord_to_string(c, 3));
    if (!seen.insert(c).second)
      fail(Errc::DuplicateDot, "duplicate dot " + coord_to_string(c, ndim_));
  }
}

void DotSet::check_in_bounds(const VoxelGrid& grid) const {
  if (ndim_ != grid.ndim())
    fail(Errc::OutOfBounds, "dot set is " + std::to_string(ndim_) + "D but grid is " +
                                std::to_string(grid.ndim()) + "D");
  for (const Coord& c : coords_) {
    if (!grid.contains(c))
      fail(Errc::OutOfBounds, "dot " + coord_to_string(c, ndim_) + " outside grid bounds");
  }
}

namespace {

constexpr char kMagic[4] = {'L', 'D', 'G', 'R'};
constexpr std::uint16_t kVersion = 1;

void put_u16(std::string& out, std::uint16_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
}

void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

class ByteReader {
 public:
  ByteReader(const std::string& buf) : buf_(buf) {}

  bool exhausted() const { return pos_ == buf_.size(); }
  std::size_t remaining() const { return buf_.size() - pos_; }

  bool take(void* dst, std::size_t n) {
    if (remaining() < n) return false;
    std::memcpy(dst, buf_.data() + pos_, n);
    pos_ += n;
    return true;
  }

  bool take_u16(std::uint16_t& v) {
    unsigned char b[2];
    if (!take(b, 2)) return false;
    v = static_cast<std::uint16_t>(b[0] | (b[1] << 8));
    return true;
  }

  bool take_u32(std::uint32_t& v) {
    unsigned char b[4];
    if (!take(b, 4)) return false;
    v = static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
        (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
    return true;
  }

 private:
  const std::string& buf_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(trim(line.substr(start)));
      break;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return fields;
}

}  // namespace

VoxelGrid grid_read(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::IoFailure, "cannot open " + path.string());
  std::string buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (!in.good() && !in.eof()) fail(Errc::IoFailure, "read error on " + path.string());

  ByteReader r(buf);
  char magic[4];
  if (!r.take(magic, 4)) fail(Errc::Truncated, "file shorter than header: " + path.string());
  if (std::memcmp(magic, kMagic, 4) != 0)
    fail(Errc::BadMagic, "bad magic in " + path.string());

  std::uint16_t version = 0, ndim = 0;
  if (!r.take_u16(version) || !r.take_u16(ndim))
    fail(Errc::Truncated, "file shorter than header: " + path.string());
  if (version != kVersion)
    fail(Errc::UnsupportedVersion,
         "version " + std::to_string(version) + " in " + path.string());
  if (ndim != 2 && ndim != 3)
    fail(Errc::ParseError, "ndim " + std::to_string(ndim) + " in " + path.string());

  std::vector<int> dims(ndim);
  std::size_t count = 1;
  for (std::uint16_t i = 0; i < ndim; ++i) {
    std::uint32_t d = 0;
    if (!r.take_u32(d)) fail(Errc::Truncated, "file shorter than header: " + path.string());
    if (d == 0 || d > 0x7fffffffu)
      fail(Errc::ParseError, "dimension " + std::to_string(d) + " in " + path.string());
    dims[i] = static_cast<int>(d);
    count *= d;
  }

  if (r.remaining() != count * 4) {
    if (r.remaining() < count * 4)
      fail(Errc::Truncated, "payload truncated in " + path.string());
    fail(Errc::ParseError, "trailing bytes after payload in " + path.string());
  }
  std::vector<float> data(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::uint32_t bits = 0;
    r.take_u32(bits);
    float f;
    std::memcpy(&f, &bits, 4);
    data[i] = f;
  }
  return VoxelGrid(std::move(dims), std::move(data));
}

void grid_write(const VoxelGrid& grid, const std::filesystem::path& path) {
  std::string out;
  out.reserve(12 + grid.ndim() * 4 + grid.size() * 4);
  out.append(kMagic, 4);
  put_u16(out, kVersion);
  put_u16(out, static_cast<std::uint16_t>(grid.ndim()));
  for (int d : grid.dims()) put_u32(out, static_cast<std::uint32_t>(d));
  for (float f : grid.data()) {
    std::uint32_t bits;
    std::memcpy(&bits, &f, 4);
    put_u32(out, bits);
  }

  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) fail(Errc::IoFailure, "cannot open " + path.string() + " for writing");
  os.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!os.good()) fail(Errc::IoFailure, "write error on " + path.string());
}

DotSet dots_read_csv(const std::filesystem::path& path, int ndim) {
  if (ndim != 2 && ndim != 3) fail(Errc::ParseError, "ndim must be 2 or 3");
  std::ifstream in(path);
  if (!in) fail(Errc::IoFailure, "cannot open " + path.string());

  std::vector<Coord> coords;
  std::string line;
  int lineno = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view stripped = trim(line);
    if (stripped.empty()) continue;
    if (first) {
      first = false;
      if (stripped == "y,x" || stripped == "z,y,x") continue;
    }
    const auto fields = split_fields(stripped);
    if (static_cast<int>(fields.size()) != ndim)
      fail(Errc::WrongArity, "line " + std::to_string(lineno) + ": expected " +
                                 std::to_string(ndim) + " columns, got " +
                                 std::to_string(fields.size()));
    Coord c{0, 0, 0};
    for (int i = 0; i < ndim; ++i) {
      const std::string_view f = fields[i];
      int v = 0;
      const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
      if (ec != std::errc{} || ptr != f.data() + f.size())
        fail(Errc::ParseError,
             "line " + std::to_string(lineno) + ": not an integer: '" + std::string(f) + "'");
      c[3 - ndim + i] = v;
    }
    coords.push_back(c);
  }
  return DotSet(ndim, std::move(coords));  // throws DuplicateDot on repeats
}

void dots_write_csv(const DotSet& dots, const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::trunc);
  if (!os) fail(Errc::IoFailure, "cannot open " + path.string() + " for writing");
  os << (dots.ndim() == 3 ? "z,y,x" : "y,x") << "\n";
  for (const Coord& c : dots.coords()) {
    if (dots.ndim() == 3) os << c[0] << ",";
    os << c[1] << "," << c[2] << "\n";
  }
  if (!os.good()) fail(Errc::IoFailure, "write error on " + path.string());
}

}  // namespace lesiondist
