#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "catstego/grid.hpp"
#include "catstego/schedule.hpp"

namespace catstego {

/// Bit position inside an 8-bit pixel, 0 = least significant.
class PlaneIndex {
 public:
  constexpr explicit PlaneIndex(unsigned index) : index_(index) {
    if (index > 7) throw std::out_of_range("plane index must be in [0, 7]");
  }
  constexpr unsigned value() const noexcept { return index_; }
  constexpr unsigned weight() const noexcept { return 1u << index_; }

  friend constexpr bool operator==(PlaneIndex, PlaneIndex) = default;

 private:
  unsigned index_;
};

std::vector<PlaneIndex> to_planes(std::span<const std::uint8_t> indices);

BinaryImage get_plane(const GrayImage& img, PlaneIndex p);

/// Replaces bit p of every pixel with `bits`; every other bit is kept.
GrayImage set_plane(const GrayImage& img, PlaneIndex p, const BinaryImage& bits);

/// Scrambles messages[k] with `sched` and writes it into planes[k].
/// Requires |messages| == |planes|, distinct planes, and matching sides.
GrayImage embed(const GrayImage& cover, std::span<const BinaryImage> messages, const ScrambleSchedule& sched,
                std::span<const PlaneIndex> planes);

/// Reads planes[k] and unscrambles it with `sched`.
std::vector<BinaryImage> extract(const GrayImage& stego, const ScrambleSchedule& sched,
                                 std::span<const PlaneIndex> planes);

/// Planes as stored, with no unscrambling.
std::vector<BinaryImage> extract_raw(const GrayImage& stego, std::span<const PlaneIndex> planes);

class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Largest payload, in bytes, that pack_payload accepts for side n.
std::size_t payload_capacity(std::size_t side) noexcept;

/// Row-major bit layout: 32-bit big-endian byte count, then the payload
/// MSB-first, then zero padding up to N^2 bits. Throws CapacityError when
/// 32 + 8 * bytes.size() > N^2.
BinaryImage pack_payload(std::span<const std::uint8_t> bytes, std::size_t side);

/// Throws std::invalid_argument if the header claims more bytes than fit.
std::vector<std::uint8_t> unpack_payload(const BinaryImage& bits);

}  // namespace catstego
