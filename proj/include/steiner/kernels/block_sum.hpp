#pragma once

// Block rank-sum kernels.
//
// Every search and metric path reduces to: for each block, gather the ranks
// of its k points and add them; then take min/max over blocks. The layout is
// structure-of-arrays (column j holds the j-th point of every block) so a
// vector lane processes one block.
//
// A scalar reference and an AVX2 variant are provided; the variant is picked
// at runtime from CPUID, and STEINER_BALANCE_ISA=scalar forces the reference.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace steiner {
class Design;
}

namespace steiner::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa) noexcept;

/// Best ISA supported by this CPU and build.
Isa detected_isa() noexcept;

/// detected_isa() unless overridden by STEINER_BALANCE_ISA.
Isa active_isa() noexcept;

bool isa_available(Isa isa) noexcept;

/// Column-major block storage: point(j, i) is the j-th point of block i.
class BlockColumns {
 public:
  BlockColumns() = default;
  BlockColumns(std::span<const std::vector<int>> blocks, int k);
  explicit BlockColumns(const Design& design);

  int k() const noexcept { return k_; }
  std::size_t block_count() const noexcept { return count_; }
  std::span<const std::int32_t> column(int j) const noexcept {
    return {data_.data() + static_cast<std::size_t>(j) * count_, count_};
  }

 private:
  int k_ = 0;
  std::size_t count_ = 0;
  std::vector<std::int32_t> data_;
};

struct SumRange {
  std::int32_t min = 0;
  std::int32_t max = 0;
  std::uint32_t argmin = 0;  // first block attaining min
  std::uint32_t argmax = 0;  // first block attaining max
};

void block_sums_scalar(const BlockColumns& blocks, std::span<const std::int32_t> ranks,
                       std::span<std::int32_t> out) noexcept;
SumRange sum_range_scalar(const BlockColumns& blocks, std::span<const std::int32_t> ranks) noexcept;

#if defined(__x86_64__) || defined(_M_X64)
void block_sums_avx2(const BlockColumns& blocks, std::span<const std::int32_t> ranks,
                     std::span<std::int32_t> out) noexcept;
SumRange sum_range_avx2(const BlockColumns& blocks, std::span<const std::int32_t> ranks) noexcept;
#endif

// Dispatching entry points. `out` must hold block_count() values; blocks must
// be nonempty for sum_range.
void block_sums(Isa isa, const BlockColumns& blocks, std::span<const std::int32_t> ranks,
                std::span<std::int32_t> out) noexcept;
SumRange sum_range(Isa isa, const BlockColumns& blocks, std::span<const std::int32_t> ranks) noexcept;

inline SumRange sum_range(const BlockColumns& blocks, std::span<const std::int32_t> ranks) noexcept {
  return sum_range(active_isa(), blocks, ranks);
}

}  // namespace steiner::kernels
