#pragma once

// Test-only helpers: seeded fixtures and brute-force oracles that do not
// share code with the library's transform path.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "catstego/arnold.hpp"
#include "catstego/grid.hpp"
#include "catstego/schedule.hpp"

namespace catstego::testing {

using Grid3 = std::array<std::array<int, 3>, 3>;

// I and the printed orbits of I under Classic ([2,1;1,1]), under [3,4;1,1],
// and of BI2 under Classic.
inline const Grid3 kI{{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}};
inline const std::array<Grid3, 4> kAI{{
    {{{1, 9, 5}, {6, 2, 7}, {8, 4, 3}}},
    {{{1, 3, 2}, {7, 9, 8}, {4, 6, 5}}},
    {{{1, 5, 9}, {8, 3, 4}, {6, 7, 2}}},
    {{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}},
}};
inline const std::array<Grid3, 8> kBI{{
    {{{1, 4, 7}, {8, 2, 5}, {6, 9, 3}}},
    {{{1, 8, 6}, {9, 4, 2}, {5, 3, 7}}},
    {{{1, 9, 5}, {3, 8, 4}, {2, 7, 6}}},
    {{{1, 3, 2}, {7, 9, 8}, {4, 6, 5}}},
    {{{1, 7, 4}, {6, 3, 9}, {8, 5, 2}}},
    {{{1, 6, 8}, {5, 7, 3}, {9, 2, 4}}},
    {{{1, 5, 9}, {2, 6, 7}, {3, 4, 8}}},
    {{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}},
}};
inline const std::array<Grid3, 4> kCI{{
    {{{1, 7, 4}, {2, 8, 5}, {3, 9, 6}}},
    {{{1, 6, 8}, {5, 7, 3}, {9, 2, 4}}},
    {{{1, 4, 7}, {3, 6, 9}, {2, 5, 8}}},
    {{{1, 8, 6}, {9, 4, 2}, {5, 3, 7}}},
}};

inline GrayImage to_grid(const Grid3& g) {
  std::vector<std::uint8_t> cells;
  for (const auto& row : g)
    for (int v : row) cells.push_back(static_cast<std::uint8_t>(v));
  return GrayImage(3, std::move(cells));
}

/// Naive scatter: value at (x, y) goes to ((a x + b y) mod n, (c x + d y) mod n).
inline std::vector<std::uint32_t> oracle_scatter(const std::vector<std::uint32_t>& g, std::int64_t n,
                                                 const ArnoldMatrix& m) {
  auto mod = [n](std::int64_t v) { return ((v % n) + n) % n; };
  std::vector<std::uint32_t> out(g.size());
  for (std::int64_t x = 0; x < n; ++x)
    for (std::int64_t y = 0; y < n; ++y)
      out[mod(m.a * x + m.b * y) * n + mod(m.c * x + m.d * y)] = g[x * n + y];
  return out;
}

/// Period found by iterating a labelled grid until it returns to the start.
inline std::uint64_t orbit_period(std::int64_t n, const ArnoldMatrix& m) {
  std::vector<std::uint32_t> start(static_cast<std::size_t>(n * n));
  for (std::size_t k = 0; k < start.size(); ++k) start[k] = static_cast<std::uint32_t>(k);
  auto cur = oracle_scatter(start, n, m);
  std::uint64_t p = 1;
  while (cur != start) {
    cur = oracle_scatter(cur, n, m);
    ++p;
  }
  return p;
}

inline GrayImage random_gray(std::size_t side, std::mt19937_64& rng) {
  std::vector<std::uint8_t> cells(side * side);
  for (auto& c : cells) c = static_cast<std::uint8_t>(rng() & 0xff);
  return GrayImage(side, std::move(cells));
}

inline BinaryImage random_bits(std::size_t side, std::mt19937_64& rng) {
  std::vector<std::uint8_t> cells(side * side);
  for (auto& c : cells) c = static_cast<std::uint8_t>(rng() & 1);
  return BinaryImage(side, std::move(cells));
}

/// Photograph-like cover: a few smooth low-frequency components, some hard
/// edged shapes, and mild sensor noise.
inline GrayImage natural_gray(std::size_t side, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::normal_distribution<double> noise(0.0, 3.0);
  struct Wave {
    double fx, fy, phase, amp;
  };
  std::vector<Wave> waves;
  for (int k = 0; k < 5; ++k) waves.push_back({u(rng) * 4.0, u(rng) * 4.0, u(rng) * 6.283, 15.0 + 25.0 * u(rng)});
  struct Disk {
    double cx, cy, r, delta;
  };
  std::vector<Disk> disks;
  for (int k = 0; k < 4; ++k) disks.push_back({u(rng), u(rng), 0.08 + 0.2 * u(rng), -50.0 + 100.0 * u(rng)});

  const double n = static_cast<double>(side);
  std::vector<std::uint8_t> cells(side * side);
  for (std::size_t x = 0; x < side; ++x) {
    for (std::size_t y = 0; y < side; ++y) {
      const double fx = x / n, fy = y / n;
      double v = 110.0 + 40.0 * fx - 20.0 * fy;
      for (const auto& w : waves) v += w.amp * std::sin(6.283 * (w.fx * fx + w.fy * fy) + w.phase);
      for (const auto& d : disks) {
        if ((fx - d.cx) * (fx - d.cx) + (fy - d.cy) * (fy - d.cy) < d.r * d.r) v += d.delta;
      }
      v += noise(rng);
      cells[x * side + y] = static_cast<std::uint8_t>(std::clamp(std::lround(v), 0l, 255l));
    }
  }
  return GrayImage(side, std::move(cells));
}

/// Logo-like binary message: a natural image thresholded at its median.
inline BinaryImage natural_message(std::size_t side, std::uint64_t seed) {
  const GrayImage g = natural_gray(side, seed ^ 0x9e3779b97f4a7c15ull);
  std::vector<std::uint8_t> sorted(g.cells().begin(), g.cells().end());
  std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());
  const std::uint8_t median = sorted[sorted.size() / 2];
  std::vector<std::uint8_t> bits(g.area());
  for (std::size_t k = 0; k < bits.size(); ++k) bits[k] = g.cells()[k] > median;
  return BinaryImage(side, std::move(bits));
}

inline TransformSpec random_spec(std::mt19937_64& rng, std::uint32_t max_i = 20) {
  const auto i = static_cast<std::uint32_t>(1 + rng() % max_i);
  switch (rng() % 3) {
    case 0:
      return TransformSpec::classic();
    case 1:
      return TransformSpec::row_first(i);
    default:
      return TransformSpec::col_first(i);
  }
}

inline ScrambleSchedule random_schedule(std::size_t side, std::size_t m, std::mt19937_64& rng) {
  std::vector<Stage> stages;
  for (std::size_t k = 0; k < m; ++k) stages.push_back({random_spec(rng), rng() % 400});
  std::vector<std::size_t> order(m);
  for (std::size_t k = 0; k < m; ++k) order[k] = k;
  std::shuffle(order.begin(), order.end(), rng);
  return ScrambleSchedule(side, std::move(stages), std::move(order));
}

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() / ("catstego_" + tag + "_" + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const noexcept { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

}  // namespace catstego::testing
