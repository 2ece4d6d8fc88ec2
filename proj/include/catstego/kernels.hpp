#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace catstego::kernels {

/// Byte-wise inner loops shared by the bit-plane codec and the metrics.
/// Every variant must produce results identical to the scalar table.
struct KernelTable {
  std::string_view name;
  /// dst[k] = (src[k] >> plane) & 1
  void (*extract_bit)(const std::uint8_t* src, std::uint8_t* dst, std::size_t n, unsigned plane);
  /// bit `plane` of dst[k] := bits[k] & 1, other bits untouched
  void (*insert_bit)(std::uint8_t* dst, const std::uint8_t* bits, std::size_t n, unsigned plane);
  /// sum of (a[k] - b[k])^2
  std::uint64_t (*sum_squared_diff)(const std::uint8_t* a, const std::uint8_t* b, std::size_t n);
  /// number of k with a[k] == b[k]
  std::uint64_t (*count_equal)(const std::uint8_t* a, const std::uint8_t* b, std::size_t n);
  /// popcount of a[k] ^ b[k], summed
  std::uint64_t (*count_differing_bits)(const std::uint8_t* a, const std::uint8_t* b, std::size_t n);
};

const KernelTable& scalar();

/// nullptr when the variant was not compiled in or the CPU lacks it.
const KernelTable* avx2();
const KernelTable* neon();

/// Every variant usable on this machine, scalar first.
std::vector<const KernelTable*> available();

/// Best available variant. Setting CATSTEGO_KERNELS=scalar in the
/// environment pins the scalar reference.
const KernelTable& active();

}  // namespace catstego::kernels
