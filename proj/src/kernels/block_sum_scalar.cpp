#include "steiner/kernels/block_sum.hpp"

#include "steiner/design.hpp"

namespace steiner::kernels {

BlockColumns::BlockColumns(std::span<const std::vector<int>> blocks, int k)
    : k_(k), count_(blocks.size()), data_(static_cast<std::size_t>(k) * blocks.size()) {
  for (std::size_t i = 0; i < count_; ++i)
    for (int j = 0; j < k; ++j) data_[static_cast<std::size_t>(j) * count_ + i] = blocks[i][static_cast<std::size_t>(j)];
}

BlockColumns::BlockColumns(const Design& design) : BlockColumns(design.blocks(), design.k()) {}

void block_sums_scalar(const BlockColumns& blocks, std::span<const std::int32_t> ranks,
                       std::span<std::int32_t> out) noexcept {
  const std::size_t n = blocks.block_count();
  for (std::size_t i = 0; i < n; ++i) out[i] = 0;
  for (int j = 0; j < blocks.k(); ++j) {
    auto col = blocks.column(j);
    for (std::size_t i = 0; i < n; ++i) out[i] += ranks[static_cast<std::size_t>(col[i])];
  }
}

SumRange sum_range_scalar(const BlockColumns& blocks, std::span<const std::int32_t> ranks) noexcept {
  SumRange r;
  const std::size_t n = blocks.block_count();
  for (std::size_t i = 0; i < n; ++i) {
    std::int32_t s = 0;
    for (int j = 0; j < blocks.k(); ++j) s += ranks[static_cast<std::size_t>(blocks.column(j)[i])];
    if (i == 0 || s < r.min) {
      r.min = s;
      r.argmin = static_cast<std::uint32_t>(i);
    }
    if (i == 0 || s > r.max) {
      r.max = s;
      r.argmax = static_cast<std::uint32_t>(i);
    }
  }
  return r;
}

}  // namespace steiner::kernels
