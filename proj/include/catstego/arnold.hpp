#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catstego/grid.hpp"

namespace catstego {

enum class Family { Classic, RowFirst, ColFirst };

std::string_view family_name(Family f) noexcept;
std::optional<Family> parse_family(std::string_view name) noexcept;

/// One member of the cat map family. Classic ignores the parameter and
/// normalizes it to 1, so two Classic specs always compare equal.
class TransformSpec {
 public:
  static TransformSpec classic() noexcept { return TransformSpec(Family::Classic, 1); }
  static TransformSpec row_first(std::uint32_t i) { return TransformSpec(Family::RowFirst, i); }
  static TransformSpec col_first(std::uint32_t i) { return TransformSpec(Family::ColFirst, i); }

  /// Throws std::invalid_argument when i == 0 for the parametric families.
  TransformSpec(Family family, std::uint32_t i);

  Family family() const noexcept { return family_; }
  std::uint32_t parameter() const noexcept { return i_; }

  friend bool operator==(const TransformSpec&, const TransformSpec&) = default;

 private:
  Family family_;
  std::uint32_t i_;
};

/// [a b; c d] acting as x' = a*x + b*y, y' = c*x + d*y (mod N).
struct ArnoldMatrix {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  std::int64_t det() const noexcept { return a * d - b * c; }
  friend bool operator==(const ArnoldMatrix&, const ArnoldMatrix&) = default;
};

ArnoldMatrix matrix_for(const TransformSpec& spec) noexcept;

namespace modmat {

ArnoldMatrix reduce(const ArnoldMatrix& m, std::uint64_t n) noexcept;
ArnoldMatrix mul(const ArnoldMatrix& lhs, const ArnoldMatrix& rhs, std::uint64_t n) noexcept;
ArnoldMatrix pow(ArnoldMatrix m, std::uint64_t e, std::uint64_t n) noexcept;
/// Inverse mod n of a unimodular matrix: det * [d -b; -c a].
ArnoldMatrix inverse(const ArnoldMatrix& m, std::uint64_t n);
bool is_identity(const ArnoldMatrix& m, std::uint64_t n) noexcept;

}  // namespace modmat

/// Destination index (row-major) for every source cell under `m` mod side.
std::vector<std::uint32_t> scatter_table(const ArnoldMatrix& m, std::size_t side);

/// Moves the value at (x, y) to (m * (x, y)^T mod N) for every cell.
template <class Tag>
SquareGrid<Tag> apply_matrix(const SquareGrid<Tag>& grid, const ArnoldMatrix& m);

template <class Tag>
SquareGrid<Tag> apply_once(const SquareGrid<Tag>& grid, const TransformSpec& spec) {
  return apply_matrix(grid, matrix_for(spec));
}

/// t forward iterations. t is reduced modulo the period first, then the
/// composite map M^t is applied in a single pass.
template <class Tag>
SquareGrid<Tag> scramble(const SquareGrid<Tag>& grid, const TransformSpec& spec, std::uint64_t t);

/// Exact inverse of scramble(grid, spec, t), using the inverse matrix mod N.
template <class Tag>
SquareGrid<Tag> unscramble(const SquareGrid<Tag>& grid, const TransformSpec& spec, std::uint64_t t);

/// Smallest p >= 1 with M^p == I (mod n), by repeated multiplication.
std::uint64_t period(const ArnoldMatrix& m, std::uint64_t n);
std::uint64_t period(const TransformSpec& spec, std::uint64_t n);

struct PeriodRow {
  std::uint32_t i;
  std::uint64_t period;
  friend bool operator==(const PeriodRow&, const PeriodRow&) = default;
};

/// Periods of family(i) for i in [lo, hi] at side n.
std::vector<PeriodRow> period_sweep(Family family, std::uint32_t lo, std::uint32_t hi, std::uint64_t n);

extern template GrayImage apply_matrix(const GrayImage&, const ArnoldMatrix&);
extern template BinaryImage apply_matrix(const BinaryImage&, const ArnoldMatrix&);
extern template GrayImage scramble(const GrayImage&, const TransformSpec&, std::uint64_t);
extern template BinaryImage scramble(const BinaryImage&, const TransformSpec&, std::uint64_t);
extern template GrayImage unscramble(const GrayImage&, const TransformSpec&, std::uint64_t);
extern template BinaryImage unscramble(const BinaryImage&, const TransformSpec&, std::uint64_t);

}  // namespace catstego
