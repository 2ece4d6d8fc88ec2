#include <cstdlib>
#include <string_view>

#include "catstego/kernels.hpp"
#include "kernels/variants.hpp"

namespace catstego::kernels {

const KernelTable* avx2() {
#if defined(CATSTEGO_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
  return supported ? &detail::avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable* neon() {
#if defined(CATSTEGO_HAVE_NEON)
  return &detail::neon_table();
#else
  return nullptr;
#endif
}

std::vector<const KernelTable*> available() {
  std::vector<const KernelTable*> out{&scalar()};
  if (const auto* t = avx2()) out.push_back(t);
  if (const auto* t = neon()) out.push_back(t);
  return out;
}

const KernelTable& active() {
  static const KernelTable& chosen = [] () -> const KernelTable& {
    if (const char* env = std::getenv("CATSTEGO_KERNELS"); env && std::string_view(env) == "scalar") {
      return scalar();
    }
    if (const auto* t = avx2()) return *t;
    if (const auto* t = neon()) return *t;
    return scalar();
  }();
  return chosen;
}

}  // namespace catstego::kernels
