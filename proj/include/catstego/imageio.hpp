#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "catstego/grid.hpp"

namespace catstego::io {

class ImageLoadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class NetpbmKind { Gray /* P5 */, Bitmap /* P4 */ };

/// Magic number of a file without decoding it. Throws ImageLoadError.
NetpbmKind sniff(const std::filesystem::path& path);

/// Binary P5, maxval 255, square. Header comments are accepted.
GrayImage decode_gray(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> encode_gray(const GrayImage& img);

/// Binary P4, square, rows padded to whole bytes. Bit 1 is black.
BinaryImage decode_binary(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> encode_binary(const BinaryImage& img);

GrayImage read_gray(const std::filesystem::path& path);
BinaryImage read_binary(const std::filesystem::path& path);

/// Writes go to a sibling temporary and are renamed into place, so a
/// failed write never leaves a partial file at `path`.
void write_gray(const std::filesystem::path& path, const GrayImage& img);
void write_binary(const std::filesystem::path& path, const BinaryImage& img);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file_atomic(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace catstego::io
