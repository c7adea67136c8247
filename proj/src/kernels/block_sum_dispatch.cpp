#include "steiner/kernels/block_sum.hpp"

#include <cstdlib>
#include <cstring>

namespace steiner::kernels {

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::avx2:
      return "avx2";
    case Isa::scalar:
      break;
  }
  return "scalar";
}

Isa detected_isa() noexcept {
#if defined(__x86_64__) || defined(_M_X64)
  static const Isa isa = __builtin_cpu_supports("avx2") ? Isa::avx2 : Isa::scalar;
  return isa;
#else
  return Isa::scalar;
#endif
}

bool isa_available(Isa isa) noexcept { return isa == Isa::scalar || detected_isa() == isa; }

Isa active_isa() noexcept {
  static const Isa isa = [] {
    const char* env = std::getenv("STEINER_BALANCE_ISA");
    if (env && std::strcmp(env, "scalar") == 0) return Isa::scalar;
    return detected_isa();
  }();
  return isa;
}

void block_sums(Isa isa, const BlockColumns& blocks, std::span<const std::int32_t> ranks,
                std::span<std::int32_t> out) noexcept {
#if defined(__x86_64__) || defined(_M_X64)
  if (isa == Isa::avx2 && isa_available(Isa::avx2)) return block_sums_avx2(blocks, ranks, out);
#endif
  (void)isa;
  block_sums_scalar(blocks, ranks, out);
}

SumRange sum_range(Isa isa, const BlockColumns& blocks, std::span<const std::int32_t> ranks) noexcept {
#if defined(__x86_64__) || defined(_M_X64)
  if (isa == Isa::avx2 && isa_available(Isa::avx2)) return sum_range_avx2(blocks, ranks);
#endif
  (void)isa;
  return sum_range_scalar(blocks, ranks);
}

}  // namespace steiner::kernels
