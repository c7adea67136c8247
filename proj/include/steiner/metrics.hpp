#pragma once

#include "steiner/design.hpp"
#include "steiner/rational.hpp"

#include <cstddef>
#include <optional>

namespace steiner {

/// Block-sum metrics of one labeled design.
struct MetricReport {
  long long min_sum = 0;
  long long max_sum = 0;
  long long diff_sum = 0;
  std::optional<Rational> ratio_sum;  // nullopt when min_sum == 0
  std::size_t argmin_block = 0;       // index into design.blocks()
  std::size_t argmax_block = 0;
};

/// Throws DesignError if the design has no blocks or the labeling size differs from v.
MetricReport metric_report(const Design& design, const Labeling& labeling);

long long block_sum(const Block& block, const Labeling& labeling);

/// Closed-form bounds valid for every labeling of every S(t,k,v).
/// Not meaningful for mere packings.
struct BoundSheet {
  int t = 0, k = 0, v = 0;
  long long minsum_upper = 0;   // floor(½(v(k−t+1)+k(t−2)))
  long long maxsum_lower = 0;   // ceil(½(v(k+t−1)−kt))
  long long diffsum_lower = 0;  // (v−k)(t−1)
  Rational ratiosum_lower;      // (v(k+t−1)−kt)/(v(k−t+1)+k(t−2))

  struct Refined {
    long long diffsum_lower = 0;
    Rational ratiosum_lower;
  };
  // Triple systems only (t=2, k=3).
  std::optional<Refined> sts_refined;
};

BoundSheet basic_bounds(int t, int k, int v);

/// Pair budget of a 2-(x,3,1) packing on {0..x-1} whose triples all sum to at most x-1.
Rational phi(int x);
/// floor(phi(x)/3): maximum number of such triples.
long long triple_bound(int x);

/// Lower bound on DiffSum over all labelings of any STS(v): v for v in {7,9},
/// v+1 from 13 on. Throws std::invalid_argument for inadmissible v.
long long sts_diffsum_lower(int v);

/// v ≡ 1,3 (mod 6).
bool is_sts_order(int v) noexcept;

}  // namespace steiner
