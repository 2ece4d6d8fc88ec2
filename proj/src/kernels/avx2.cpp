// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include "kernels/variants.hpp"

namespace catstego::kernels::detail {

namespace {

constexpr std::size_t kLanes = 32;

void extract_bit(const std::uint8_t* src, std::uint8_t* dst, std::size_t n, unsigned plane) {
  const __m256i one = _mm256_set1_epi8(1);
  const __m128i shift = _mm_cvtsi32_si128(static_cast<int>(plane));
  std::size_t k = 0;
  for (; k + kLanes <= n; k += kLanes) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + k));
    // 16-bit shift is safe: bit 0 of each byte after the shift is bit `plane` of that byte.
    const __m256i bits = _mm256_and_si256(_mm256_srl_epi16(v, shift), one);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + k), bits);
  }
  scalar_extract_bit(src + k, dst + k, n - k, plane);
}

void insert_bit(std::uint8_t* dst, const std::uint8_t* bits, std::size_t n, unsigned plane) {
  const __m256i one = _mm256_set1_epi8(1);
  const __m256i keep = _mm256_set1_epi8(static_cast<char>(~(1u << plane)));
  const __m128i shift = _mm_cvtsi32_si128(static_cast<int>(plane));
  std::size_t k = 0;
  for (; k + kLanes <= n; k += kLanes) {
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + k));
    const __m256i b = _mm256_and_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(bits + k)), one);
    const __m256i out = _mm256_or_si256(_mm256_and_si256(d, keep), _mm256_sll_epi16(b, shift));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + k), out);
  }
  scalar_insert_bit(dst + k, bits + k, n - k, plane);
}

std::uint64_t hsum_epi64(__m256i v) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

std::uint64_t sum_squared_diff(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
  const __m256i zero = _mm256_setzero_si256();
  __m256i total = zero;
  std::size_t k = 0;
  // Each 32-bit lane gains at most 4 * 255^2 per step; flush well before overflow.
  constexpr std::size_t kFlushEvery = 2048;
  while (k + kLanes <= n) {
    __m256i acc32 = zero;
    for (std::size_t step = 0; step < kFlushEvery && k + kLanes <= n; ++step, k += kLanes) {
      const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + k));
      const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + k));
      const __m256i diff = _mm256_sub_epi8(_mm256_max_epu8(va, vb), _mm256_min_epu8(va, vb));
      const __m256i lo = _mm256_unpacklo_epi8(diff, zero);
      const __m256i hi = _mm256_unpackhi_epi8(diff, zero);
      acc32 = _mm256_add_epi32(acc32, _mm256_madd_epi16(lo, lo));
      acc32 = _mm256_add_epi32(acc32, _mm256_madd_epi16(hi, hi));
    }
    total = _mm256_add_epi64(total, _mm256_unpacklo_epi32(acc32, zero));
    total = _mm256_add_epi64(total, _mm256_unpackhi_epi32(acc32, zero));
  }
  return hsum_epi64(total) + scalar_sum_squared_diff(a + k, b + k, n - k);
}

std::uint64_t count_equal(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
  std::uint64_t acc = 0;
  std::size_t k = 0;
  for (; k + kLanes <= n; k += kLanes) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + k));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + k));
    const auto mask = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(va, vb)));
    acc += static_cast<std::uint64_t>(_mm_popcnt_u32(mask));
  }
  return acc + scalar_count_equal(a + k, b + k, n - k);
}

// Nibble lookup popcount, summed per 64-bit lane with SAD.
std::uint64_t count_differing_bits(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i zero = _mm256_setzero_si256();
  __m256i total = zero;
  std::size_t k = 0;
  for (; k + kLanes <= n; k += kLanes) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + k));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + k));
    const __m256i x = _mm256_xor_si256(va, vb);
    const __m256i lo = _mm256_shuffle_epi8(lut, _mm256_and_si256(x, low_mask));
    const __m256i hi = _mm256_shuffle_epi8(lut, _mm256_and_si256(_mm256_srli_epi16(x, 4), low_mask));
    total = _mm256_add_epi64(total, _mm256_sad_epu8(_mm256_add_epi8(lo, hi), zero));
  }
  return hsum_epi64(total) + scalar_count_differing_bits(a + k, b + k, n - k);
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{"avx2", extract_bit, insert_bit, sum_squared_diff, count_equal,
                                 count_differing_bits};
  return table;
}

}  // namespace catstego::kernels::detail
