// AArch64 only; Advanced SIMD is part of the base ISA there.
#include <arm_neon.h>

#include "kernels/variants.hpp"

namespace catstego::kernels::detail {

namespace {

constexpr std::size_t kLanes = 16;

void extract_bit(const std::uint8_t* src, std::uint8_t* dst, std::size_t n, unsigned plane) {
  const int8x16_t shift = vdupq_n_s8(static_cast<std::int8_t>(-static_cast<int>(plane)));
  const uint8x16_t one = vdupq_n_u8(1);
  std::size_t k = 0;
  for (; k + kLanes <= n; k += kLanes) {
    vst1q_u8(dst + k, vandq_u8(vshlq_u8(vld1q_u8(src + k), shift), one));
  }
  scalar_extract_bit(src + k, dst + k, n - k, plane);
}

void insert_bit(std::uint8_t* dst, const std::uint8_t* bits, std::size_t n, unsigned plane) {
  const int8x16_t shift = vdupq_n_s8(static_cast<std::int8_t>(plane));
  const uint8x16_t one = vdupq_n_u8(1);
  const uint8x16_t keep = vdupq_n_u8(static_cast<std::uint8_t>(~(1u << plane)));
  std::size_t k = 0;
  for (; k + kLanes <= n; k += kLanes) {
    const uint8x16_t b = vshlq_u8(vandq_u8(vld1q_u8(bits + k), one), shift);
    vst1q_u8(dst + k, vorrq_u8(vandq_u8(vld1q_u8(dst + k), keep), b));
  }
  scalar_insert_bit(dst + k, bits + k, n - k, plane);
}

std::uint64_t sum_squared_diff(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
  std::uint64_t total = 0;
  std::size_t k = 0;
  constexpr std::size_t kFlushEvery = 2048;
  while (k + kLanes <= n) {
    uint32x4_t acc = vdupq_n_u32(0);
    for (std::size_t step = 0; step < kFlushEvery && k + kLanes <= n; ++step, k += kLanes) {
      const uint8x16_t d = vabdq_u8(vld1q_u8(a + k), vld1q_u8(b + k));
      acc = vpadalq_u16(acc, vmull_u8(vget_low_u8(d), vget_low_u8(d)));
      acc = vpadalq_u16(acc, vmull_high_u8(d, d));
    }
    total += vaddlvq_u32(acc);
  }
  return total + scalar_sum_squared_diff(a + k, b + k, n - k);
}

std::uint64_t count_equal(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
  std::uint64_t total = 0;
  std::size_t k = 0;
  for (; k + kLanes <= n; k += kLanes) {
    const uint8x16_t eq = vshrq_n_u8(vceqq_u8(vld1q_u8(a + k), vld1q_u8(b + k)), 7);
    total += vaddlvq_u8(eq);
  }
  return total + scalar_count_equal(a + k, b + k, n - k);
}

std::uint64_t count_differing_bits(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
  std::uint64_t total = 0;
  std::size_t k = 0;
  for (; k + kLanes <= n; k += kLanes) {
    total += vaddlvq_u8(vcntq_u8(veorq_u8(vld1q_u8(a + k), vld1q_u8(b + k))));
  }
  return total + scalar_count_differing_bits(a + k, b + k, n - k);
}

}  // namespace

const KernelTable& neon_table() {
  static const KernelTable table{"neon", extract_bit, insert_bit, sum_squared_diff, count_equal,
                                 count_differing_bits};
  return table;
}

}  // namespace catstego::kernels::detail
