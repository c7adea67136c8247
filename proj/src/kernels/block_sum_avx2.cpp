// Compiled with -mavx2; only reached when detected_isa() reports AVX2.
#include "steiner/kernels/block_sum.hpp"

#include <immintrin.h>

#include <limits>

namespace steiner::kernels {

namespace {

inline __m256i gather_sum8(const BlockColumns& blocks, const std::int32_t* ranks, std::size_t i) {
  __m256i acc = _mm256_setzero_si256();
  for (int j = 0; j < blocks.k(); ++j) {
    __m256i idx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(blocks.column(j).data() + i));
    acc = _mm256_add_epi32(acc, _mm256_i32gather_epi32(ranks, idx, 4));
  }
  return acc;
}

inline std::int32_t hmin(__m256i x) {
  __m128i m = _mm_min_epi32(_mm256_castsi256_si128(x), _mm256_extracti128_si256(x, 1));
  m = _mm_min_epi32(m, _mm_shuffle_epi32(m, _MM_SHUFFLE(1, 0, 3, 2)));
  m = _mm_min_epi32(m, _mm_shuffle_epi32(m, _MM_SHUFFLE(2, 3, 0, 1)));
  return _mm_cvtsi128_si32(m);
}

inline std::int32_t hmax(__m256i x) {
  __m128i m = _mm_max_epi32(_mm256_castsi256_si128(x), _mm256_extracti128_si256(x, 1));
  m = _mm_max_epi32(m, _mm_shuffle_epi32(m, _MM_SHUFFLE(1, 0, 3, 2)));
  m = _mm_max_epi32(m, _mm_shuffle_epi32(m, _MM_SHUFFLE(2, 3, 0, 1)));
  return _mm_cvtsi128_si32(m);
}

}  // namespace

void block_sums_avx2(const BlockColumns& blocks, std::span<const std::int32_t> ranks,
                     std::span<std::int32_t> out) noexcept {
  const std::size_t n = blocks.block_count();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8)
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i), gather_sum8(blocks, ranks.data(), i));
  for (; i < n; ++i) {
    std::int32_t s = 0;
    for (int j = 0; j < blocks.k(); ++j) s += ranks[static_cast<std::size_t>(blocks.column(j)[i])];
    out[i] = s;
  }
}

SumRange sum_range_avx2(const BlockColumns& blocks, std::span<const std::int32_t> ranks) noexcept {
  const std::size_t n = blocks.block_count();
  if (n < 8) return sum_range_scalar(blocks, ranks);

  // Pass 1: vector min/max over full lanes, scalar tail.
  __m256i vmin = _mm256_set1_epi32(std::numeric_limits<std::int32_t>::max());
  __m256i vmax = _mm256_set1_epi32(std::numeric_limits<std::int32_t>::min());
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i s = gather_sum8(blocks, ranks.data(), i);
    vmin = _mm256_min_epi32(vmin, s);
    vmax = _mm256_max_epi32(vmax, s);
  }
  const std::size_t full = i;
  std::int32_t mn = hmin(vmin), mx = hmax(vmax);
  for (; i < n; ++i) {
    std::int32_t s = 0;
    for (int j = 0; j < blocks.k(); ++j) s += ranks[static_cast<std::size_t>(blocks.column(j)[i])];
    mn = std::min(mn, s);
    mx = std::max(mx, s);
  }

  // Pass 2: first lane hitting each extreme, matching the scalar argmin/argmax.
  SumRange r{mn, mx, UINT32_MAX, UINT32_MAX};
  const __m256i tmin = _mm256_set1_epi32(mn), tmax = _mm256_set1_epi32(mx);
  for (i = 0; i < full && (r.argmin == UINT32_MAX || r.argmax == UINT32_MAX); i += 8) {
    __m256i s = gather_sum8(blocks, ranks.data(), i);
    if (r.argmin == UINT32_MAX) {
      int m = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(s, tmin)));
      if (m) r.argmin = static_cast<std::uint32_t>(i + static_cast<std::size_t>(__builtin_ctz(static_cast<unsigned>(m))));
    }
    if (r.argmax == UINT32_MAX) {
      int m = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(s, tmax)));
      if (m) r.argmax = static_cast<std::uint32_t>(i + static_cast<std::size_t>(__builtin_ctz(static_cast<unsigned>(m))));
    }
  }
  for (i = full; i < n && (r.argmin == UINT32_MAX || r.argmax == UINT32_MAX); ++i) {
    std::int32_t s = 0;
    for (int j = 0; j < blocks.k(); ++j) s += ranks[static_cast<std::size_t>(blocks.column(j)[i])];
    if (r.argmin == UINT32_MAX && s == mn) r.argmin = static_cast<std::uint32_t>(i);
    if (r.argmax == UINT32_MAX && s == mx) r.argmax = static_cast<std::uint32_t>(i);
  }
  return r;
}

}  // namespace steiner::kernels
