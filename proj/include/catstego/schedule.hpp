#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "catstego/arnold.hpp"
#include "catstego/grid.hpp"

namespace catstego {

/// One scrambling level: a transform and its iteration count. The stage
/// period is a function of (spec, N) and is recomputed on demand.
struct Stage {
  TransformSpec spec;
  std::uint64_t iterations = 0;

  friend bool operator==(const Stage&, const Stage&) = default;
};

/// The secret key: the stages plus the order in which they are applied.
/// order[k] is the index of the stage applied k-th.
class ScrambleSchedule {
 public:
  /// Throws std::invalid_argument for side 0, an empty stage list, or an
  /// order that is not a permutation of [0, stages.size()).
  ScrambleSchedule(std::size_t side, std::vector<Stage> stages, std::vector<std::size_t> order);

  /// Stages applied in list order.
  ScrambleSchedule(std::size_t side, std::vector<Stage> stages);

  std::size_t side() const noexcept { return side_; }
  const std::vector<Stage>& stages() const noexcept { return stages_; }
  const std::vector<std::size_t>& order() const noexcept { return order_; }

  /// Same stages replayed under a different order.
  ScrambleSchedule with_order(std::vector<std::size_t> order) const;

  friend bool operator==(const ScrambleSchedule&, const ScrambleSchedule&) = default;

 private:
  std::size_t side_;
  std::vector<Stage> stages_;
  std::vector<std::size_t> order_;
};

/// Applies the stages in `order` sequence.
template <class Tag>
SquareGrid<Tag> schedule_scramble(const SquareGrid<Tag>& msg, const ScrambleSchedule& sched);

/// Inverts each stage, walking `order` backwards.
template <class Tag>
SquareGrid<Tag> schedule_unscramble(const SquareGrid<Tag>& scrambled, const ScrambleSchedule& sched);

/// The single matrix (mod side) whose scatter equals schedule_scramble.
ArnoldMatrix composite_matrix(const ScrambleSchedule& sched);

/// Number of positions v in the N x N torus with x v == y v (mod n).
/// Extracting with a schedule whose composite is y from an embedding made
/// with composite x reproduces the message at exactly these positions.
std::uint64_t coinciding_positions(const ArnoldMatrix& x, const ArnoldMatrix& y, std::uint64_t n);

/// Largest fraction of positions on which any other application order of
/// the same stages agrees with `sched`. Orders are enumerated exhaustively,
/// so this is limited to at most 8 stages.
double max_order_collision(const ScrambleSchedule& sched);

extern template GrayImage schedule_scramble(const GrayImage&, const ScrambleSchedule&);
extern template BinaryImage schedule_scramble(const BinaryImage&, const ScrambleSchedule&);
extern template GrayImage schedule_unscramble(const GrayImage&, const ScrambleSchedule&);
extern template BinaryImage schedule_unscramble(const BinaryImage&, const ScrambleSchedule&);

// ---------------------------------------------------------------------------
// Key files
//
//   N <side>
//   M <stage count>
//   STAGE <CLASSIC|ROWFIRST|COLFIRST> <i> <t>     (M lines)
//   ORDER <permutation of 0..M-1>
//   PLANES <bit-plane indices, 0 = LSB>
//
// '#' starts a comment; blank lines are skipped on read.
// ---------------------------------------------------------------------------

struct KeyFile {
  ScrambleSchedule schedule;
  std::vector<std::uint8_t> planes;

  friend bool operator==(const KeyFile&, const KeyFile&) = default;
};

class KeyParseError : public std::runtime_error {
 public:
  KeyParseError(std::size_t line, const std::string& msg)
      : std::runtime_error("key line " + std::to_string(line) + ": " + msg), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

std::string serialize_key(const KeyFile& key);

/// Throws KeyParseError naming the offending line.
KeyFile parse_key(std::string_view text);

}  // namespace catstego
