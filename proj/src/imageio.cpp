#include "catstego/imageio.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <fstream>
#include <iterator>

#include <unistd.h>

namespace catstego::io {

namespace {

class HeaderReader {
 public:
  explicit HeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::string magic() {
    if (bytes_.size() < 2) throw ImageLoadError("bad magic number: file shorter than 2 bytes");
    pos_ = 2;
    return {static_cast<char>(bytes_[0]), static_cast<char>(bytes_[1])};
  }

  std::uint64_t next_uint(const char* field) {
    skip_space_and_comments();
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      v = v * 10 + (bytes_[pos_] - '0');
      if (v > (1ull << 32)) throw ImageLoadError(std::string("header field ") + field + " is too large");
      ++pos_;
    }
    if (pos_ == start) throw ImageLoadError(std::string("malformed header: missing ") + field);
    return v;
  }

  /// Exactly one whitespace byte separates the header from the raster.
  std::size_t raster_offset() {
    if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
      throw ImageLoadError("malformed header: no whitespace before raster");
    }
    return pos_ + 1;
  }

 private:
  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (std::isspace(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else {
        break;
      }
    }
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

std::size_t square_side(std::uint64_t width, std::uint64_t height) {
  if (width != height) {
    throw ImageLoadError("non-square image: " + std::to_string(width) + "x" + std::to_string(height));
  }
  if (width == 0 || width > (1u << 15)) throw ImageLoadError("image side " + std::to_string(width) + " unsupported");
  return static_cast<std::size_t>(width);
}

void append_header(std::vector<std::uint8_t>& out, const std::string& header) {
  out.insert(out.end(), header.begin(), header.end());
}

}  // namespace

GrayImage decode_gray(std::span<const std::uint8_t> bytes) {
  HeaderReader hr(bytes);
  if (hr.magic() != "P5") throw ImageLoadError("bad magic number: expected P5");
  const auto width = hr.next_uint("width");
  const auto height = hr.next_uint("height");
  const auto maxval = hr.next_uint("maxval");
  if (maxval != 255) throw ImageLoadError("maxval must be 255, got " + std::to_string(maxval));
  const std::size_t side = square_side(width, height);
  const std::size_t off = hr.raster_offset();
  const std::size_t need = side * side;
  if (bytes.size() < off + need) {
    throw ImageLoadError("truncated raster: need " + std::to_string(need) + " bytes, have " +
                         std::to_string(bytes.size() - std::min(off, bytes.size())));
  }
  return GrayImage(side, std::vector<std::uint8_t>(bytes.begin() + off, bytes.begin() + off + need));
}

std::vector<std::uint8_t> encode_gray(const GrayImage& img) {
  std::vector<std::uint8_t> out;
  append_header(out, "P5\n" + std::to_string(img.side()) + " " + std::to_string(img.side()) + "\n255\n");
  out.insert(out.end(), img.cells().begin(), img.cells().end());
  return out;
}

BinaryImage decode_binary(std::span<const std::uint8_t> bytes) {
  HeaderReader hr(bytes);
  if (hr.magic() != "P4") throw ImageLoadError("bad magic number: expected P4");
  const auto width = hr.next_uint("width");
  const auto height = hr.next_uint("height");
  const std::size_t side = square_side(width, height);
  const std::size_t off = hr.raster_offset();
  const std::size_t stride = (side + 7) / 8;
  if (bytes.size() < off + stride * side) {
    throw ImageLoadError("truncated raster: need " + std::to_string(stride * side) + " bytes, have " +
                         std::to_string(bytes.size() - std::min(off, bytes.size())));
  }
  BinaryImage img(side);
  auto cells = img.mutable_cells();
  for (std::size_t x = 0; x < side; ++x) {
    const std::uint8_t* row = bytes.data() + off + x * stride;
    for (std::size_t y = 0; y < side; ++y) cells[x * side + y] = (row[y / 8] >> (7 - y % 8)) & 1u;
  }
  return img;
}

std::vector<std::uint8_t> encode_binary(const BinaryImage& img) {
  const std::size_t side = img.side();
  const std::size_t stride = (side + 7) / 8;
  std::vector<std::uint8_t> out;
  append_header(out, "P4\n" + std::to_string(side) + " " + std::to_string(side) + "\n");
  const std::size_t off = out.size();
  out.resize(off + stride * side, 0);
  const auto cells = img.cells();
  for (std::size_t x = 0; x < side; ++x) {
    std::uint8_t* row = out.data() + off + x * stride;
    for (std::size_t y = 0; y < side; ++y) {
      if (cells[x * side + y]) row[y / 8] |= static_cast<std::uint8_t>(0x80u >> (y % 8));
    }
  }
  return out;
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ImageLoadError("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file_atomic(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  static std::atomic<unsigned> counter{0};
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) {
      out.close();
      std::filesystem::remove(tmp);
      throw std::runtime_error("write failed for " + path.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot move output into place at " + path.string() + ": " + ec.message());
  }
}

NetpbmKind sniff(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ImageLoadError("cannot open " + path.string());
  char magic[2] = {};
  in.read(magic, 2);
  if (in.gcount() == 2 && magic[0] == 'P' && magic[1] == '5') return NetpbmKind::Gray;
  if (in.gcount() == 2 && magic[0] == 'P' && magic[1] == '4') return NetpbmKind::Bitmap;
  throw ImageLoadError("bad magic number in " + path.string() + ": expected P4 or P5");
}

GrayImage read_gray(const std::filesystem::path& path) {
  const auto bytes = read_file(path);
  try {
    return decode_gray(bytes);
  } catch (const ImageLoadError& e) {
    throw ImageLoadError(path.string() + ": " + e.what());
  }
}

BinaryImage read_binary(const std::filesystem::path& path) {
  const auto bytes = read_file(path);
  try {
    return decode_binary(bytes);
  } catch (const ImageLoadError& e) {
    throw ImageLoadError(path.string() + ": " + e.what());
  }
}

void write_gray(const std::filesystem::path& path, const GrayImage& img) { write_file_atomic(path, encode_gray(img)); }

void write_binary(const std::filesystem::path& path, const BinaryImage& img) {
  write_file_atomic(path, encode_binary(img));
}

}  // namespace catstego::io
