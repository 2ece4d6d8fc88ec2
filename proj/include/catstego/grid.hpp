#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace catstego {

struct GrayTag {};
struct BinaryTag {};

/// Square N x N grid of byte cells stored row-major. Cell (x, y) lives at
/// x * N + y, so x is the row index and y is the column index.
///
/// The Tag keeps 8-bit carriers and 1-bit messages apart at compile time.
/// BinaryImage cells are always 0 or 1; writes through set() and the
/// value constructor normalize any nonzero byte to 1.
template <class Tag>
class SquareGrid {
 public:
  SquareGrid() = default;

  explicit SquareGrid(std::size_t side) : side_(side), cells_(checked_area(side), 0) {}

  SquareGrid(std::size_t side, std::vector<std::uint8_t> cells) : side_(side), cells_(std::move(cells)) {
    if (cells_.size() != checked_area(side)) {
      throw std::invalid_argument("grid of side " + std::to_string(side) + " needs " +
                                  std::to_string(side * side) + " cells, got " +
                                  std::to_string(cells_.size()));
    }
    if constexpr (std::is_same_v<Tag, BinaryTag>) {
      for (auto& c : cells_) c = c ? 1 : 0;
    }
  }

  std::size_t side() const noexcept { return side_; }
  std::size_t area() const noexcept { return cells_.size(); }
  bool empty() const noexcept { return cells_.empty(); }

  std::uint8_t at(std::size_t x, std::size_t y) const { return cells_.at(x * side_ + y); }

  void set(std::size_t x, std::size_t y, std::uint8_t v) {
    if constexpr (std::is_same_v<Tag, BinaryTag>) v = v ? 1 : 0;
    cells_.at(x * side_ + y) = v;
  }

  std::span<const std::uint8_t> cells() const noexcept { return cells_; }

  /// Raw mutable access for kernels. Callers writing a BinaryImage must
  /// only store 0 or 1.
  std::span<std::uint8_t> mutable_cells() noexcept { return cells_; }

  friend bool operator==(const SquareGrid&, const SquareGrid&) = default;

 private:
  static std::size_t checked_area(std::size_t side) {
    if (side == 0) throw std::invalid_argument("grid side must be at least 1");
    if (side > (std::size_t{1} << 15)) throw std::invalid_argument("grid side exceeds 32768");
    return side * side;
  }

  std::size_t side_ = 0;
  std::vector<std::uint8_t> cells_;
};

using GrayImage = SquareGrid<GrayTag>;
using BinaryImage = SquareGrid<BinaryTag>;

template <class TagA, class TagB>
void require_same_side(const SquareGrid<TagA>& a, const SquareGrid<TagB>& b, const char* what) {
  if (a.side() != b.side()) {
    throw std::invalid_argument(std::string(what) + ": side mismatch (" + std::to_string(a.side()) +
                                " vs " + std::to_string(b.side()) + ")");
  }
}

}  // namespace catstego
