#pragma once

#include <cstddef>
#include <cstdint>

#include "catstego/kernels.hpp"

namespace catstego::kernels::detail {

void scalar_extract_bit(const std::uint8_t* src, std::uint8_t* dst, std::size_t n, unsigned plane);
void scalar_insert_bit(std::uint8_t* dst, const std::uint8_t* bits, std::size_t n, unsigned plane);
std::uint64_t scalar_sum_squared_diff(const std::uint8_t* a, const std::uint8_t* b, std::size_t n);
std::uint64_t scalar_count_equal(const std::uint8_t* a, const std::uint8_t* b, std::size_t n);
std::uint64_t scalar_count_differing_bits(const std::uint8_t* a, const std::uint8_t* b, std::size_t n);

#if defined(CATSTEGO_HAVE_AVX2)
const KernelTable& avx2_table();
#endif
#if defined(CATSTEGO_HAVE_NEON)
const KernelTable& neon_table();
#endif

}  // namespace catstego::kernels::detail
