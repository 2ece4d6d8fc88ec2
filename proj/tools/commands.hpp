#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "catstego/arnold.hpp"
#include "catstego/schedule.hpp"

namespace catstego::cli {

using std::filesystem::path;

struct EmbedArgs {
  path cover;
  std::vector<path> messages;
  /// Raw bytes packed into one extra message after `messages`.
  std::optional<path> pack;
  path key;
  path out;
};

struct ExtractArgs {
  path stego;
  path key;
  std::vector<path> outs;
  /// Decodes the last key plane as a packed payload into this file.
  std::optional<path> unpack;
  bool raw = false;
};

struct ScrambleArgs {
  path in;
  path key;
  path out;
};

struct SweepArgs {
  Family family = Family::RowFirst;
  std::uint32_t from = 1;
  std::uint32_t to = 20;
  std::uint64_t side = 128;
  std::optional<path> csv;
};

struct KeygenArgs {
  std::uint64_t side = 128;
  std::uint32_t stages = 2;
  std::uint64_t seed = 0;
  std::vector<std::uint8_t> planes{0};
  std::uint32_t max_parameter = 20;
  // Upper bound on max_order_collision for keys with 2..8 stages; 1 disables.
  double max_order_collision = 1.0 / 16;
  std::optional<path> out;
};

// Each command returns the process exit status. Diagnostics go to `err`.
int cmd_embed(const EmbedArgs& a, std::ostream& out, std::ostream& err);
int cmd_extract(const ExtractArgs& a, std::ostream& out, std::ostream& err);
int cmd_scramble(const ScrambleArgs& a, bool inverse, std::ostream& out, std::ostream& err);
int cmd_period(Family family, std::uint32_t i, std::uint64_t side, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err);
int cmd_planes(const path& image, const path& out_dir, std::ostream& out, std::ostream& err);
int cmd_metrics(const path& a, const path& b, std::ostream& out, std::ostream& err);
int cmd_keygen(const KeygenArgs& a, std::ostream& out, std::ostream& err);

/// Deterministic random key. Stages draw distinct RowFirst/ColFirst
/// members with i in [1, max_parameter] and t in [1, period - 1]; draws
/// whose stage order barely matters are discarded and redrawn.
KeyFile generate_key(const KeygenArgs& a);

std::string sweep_csv(const std::vector<PeriodRow>& rows);

}  // namespace catstego::cli
