#include <bit>

#include "catstego/kernels.hpp"
#include "kernels/variants.hpp"

namespace catstego::kernels {

namespace {

void extract_bit(const std::uint8_t* src, std::uint8_t* dst, std::size_t n, unsigned plane) {
  for (std::size_t k = 0; k < n; ++k) dst[k] = (src[k] >> plane) & 1u;
}

void insert_bit(std::uint8_t* dst, const std::uint8_t* bits, std::size_t n, unsigned plane) {
  const auto keep = static_cast<std::uint8_t>(~(1u << plane));
  for (std::size_t k = 0; k < n; ++k) {
    dst[k] = static_cast<std::uint8_t>((dst[k] & keep) | ((bits[k] & 1u) << plane));
  }
}

std::uint64_t sum_squared_diff(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
  std::uint64_t acc = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const int d = int{a[k]} - int{b[k]};
    acc += static_cast<std::uint64_t>(d * d);
  }
  return acc;
}

std::uint64_t count_equal(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
  std::uint64_t acc = 0;
  for (std::size_t k = 0; k < n; ++k) acc += a[k] == b[k];
  return acc;
}

std::uint64_t count_differing_bits(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
  std::uint64_t acc = 0;
  for (std::size_t k = 0; k < n; ++k) acc += std::popcount(static_cast<unsigned>(a[k] ^ b[k]));
  return acc;
}

}  // namespace

const KernelTable& scalar() {
  static const KernelTable table{"scalar", extract_bit, insert_bit, sum_squared_diff, count_equal,
                                 count_differing_bits};
  return table;
}

namespace detail {
// Tails of the vector variants run through the scalar code.
void scalar_extract_bit(const std::uint8_t* s, std::uint8_t* d, std::size_t n, unsigned p) { extract_bit(s, d, n, p); }
void scalar_insert_bit(std::uint8_t* d, const std::uint8_t* b, std::size_t n, unsigned p) { insert_bit(d, b, n, p); }
std::uint64_t scalar_sum_squared_diff(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
  return sum_squared_diff(a, b, n);
}
std::uint64_t scalar_count_equal(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
  return count_equal(a, b, n);
}
std::uint64_t scalar_count_differing_bits(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
  return count_differing_bits(a, b, n);
}
}  // namespace detail

}  // namespace catstego::kernels
