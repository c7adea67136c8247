#include "steiner/metrics.hpp"

#include "steiner/kernels/block_sum.hpp"

#include <stdexcept>

namespace steiner {

long long block_sum(const Block& block, const Labeling& labeling) {
  long long s = 0;
  for (Point p : block) s += labeling[p];
  return s;
}

MetricReport metric_report(const Design& design, const Labeling& labeling) {
  if (design.empty()) throw DesignError("metrics are undefined for a design without blocks");
  if (labeling.size() != design.v())
    throw DesignError("labeling has " + std::to_string(labeling.size()) + " ranks for a design on " +
                      std::to_string(design.v()) + " points");
  const kernels::BlockColumns cols(design);
  const auto range = kernels::sum_range(cols, labeling.ranks());
  MetricReport r;
  r.min_sum = range.min;
  r.max_sum = range.max;
  r.diff_sum = r.max_sum - r.min_sum;
  if (r.min_sum > 0) r.ratio_sum = make_rational(r.max_sum, r.min_sum);
  r.argmin_block = range.argmin;
  r.argmax_block = range.argmax;
  return r;
}

bool is_sts_order(int v) noexcept { return v > 0 && (v % 6 == 1 || v % 6 == 3); }

BoundSheet basic_bounds(int t, int k, int v) {
  if (!(0 < t && t < k && k <= v)) throw std::invalid_argument("basic_bounds needs 0 < t < k <= v");
  BoundSheet s;
  s.t = t;
  s.k = k;
  s.v = v;
  const long long lv = v, lk = k, lt = t;
  const long long min_twice = lv * (lk - lt + 1) + lk * (lt - 2);
  const long long max_twice = lv * (lk + lt - 1) - lk * lt;
  s.minsum_upper = floor_of(make_rational(min_twice, 2)).convert_to<long long>();
  s.maxsum_lower = ceil_of(make_rational(max_twice, 2)).convert_to<long long>();
  s.diffsum_lower = (lv - lk) * (lt - 1);
  s.ratiosum_lower = make_rational(max_twice, min_twice);
  if (t == 2 && k == 3) {
    BoundSheet::Refined r;
    if (is_sts_order(v) && v >= 13) {
      // DiffSum >= v+1 forces MaxSum/MinSum >= 1 + (v+1)/MinSum >= 2 + 1/v.
      r.diffsum_lower = v + 1;
      r.ratiosum_lower = make_rational(2LL * v + 1, v);
    } else {
      r.diffsum_lower = v;
      r.ratiosum_lower = 2;
    }
    s.sts_refined = r;
  }
  return s;
}

Rational phi(int x) {
  if (x < 3) throw std::invalid_argument("phi needs x >= 3");
  Rational r = make_rational(static_cast<long long>(x) * (x - 1), 4) - (x / 6);
  switch (x % 6) {
    case 2:
    case 3:
      r -= make_rational(1, 2);
      break;
    case 5:
      r -= 1;
      break;
    default:
      break;
  }
  return r;
}

long long triple_bound(int x) { return floor_of(phi(x) / 3).convert_to<long long>(); }

long long sts_diffsum_lower(int v) {
  if (!is_sts_order(v) || v < 7) throw std::invalid_argument("v=" + std::to_string(v) + " is not an STS order >= 7");
  return v <= 9 ? v : v + 1;
}

}  // namespace steiner
