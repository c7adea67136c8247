#include "steiner/independence.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <stdexcept>

namespace steiner {

namespace {

using Mask = std::uint64_t;

// For each point q, the masks of B \ {q} over blocks B containing q.
struct BitDesign {
  int v = 0;
  std::vector<std::vector<Mask>> rest;
  std::vector<Mask> blocks;

  explicit BitDesign(const Design& d) : v(d.v()), rest(static_cast<std::size_t>(d.v())) {
    for (const auto& b : d.blocks()) {
      Mask m = 0;
      for (Point p : b) m |= Mask{1} << p;
      blocks.push_back(m);
      for (Point p : b) rest[static_cast<std::size_t>(p)].push_back(m & ~(Mask{1} << p));
    }
  }

  bool addable(int q, Mask s) const {
    for (Mask m : rest[static_cast<std::size_t>(q)])
      if ((m & ~s) == 0) return false;
    return true;
  }

  bool independent(Mask s) const {
    for (Mask m : blocks)
      if ((m & s) == m) return false;
    return true;
  }
};

struct MisSearch {
  const BitDesign& bd;
  Mask best = 0;
  int best_size = -1;

  void expand(Mask s, Mask cand, int size) {
    if (size + std::popcount(cand) <= best_size) return;
    if (cand == 0) {
      best = s;
      best_size = size;
      return;
    }
    const int p = std::countr_zero(cand);
    const Mask bit = Mask{1} << p;
    const Mask with = s | bit;
    Mask next = 0;
    for (Mask c = cand & ~bit; c; c &= c - 1) {
      const int q = std::countr_zero(c);
      if (bd.addable(q, with)) next |= Mask{1} << q;
    }
    expand(with, next, size + 1);
    expand(s, cand & ~bit, size);
  }
};

// Maximum independent subset of `allowed`.
Mask mis_within(const BitDesign& bd, Mask allowed, int lower_bound = -1) {
  MisSearch ms{bd};
  ms.best_size = lower_bound;
  Mask cand = 0;
  for (Mask c = allowed; c; c &= c - 1) {
    const int q = std::countr_zero(c);
    if (bd.addable(q, 0)) cand |= Mask{1} << q;
  }
  ms.expand(0, cand, 0);
  return ms.best_size < 0 ? 0 : ms.best;
}

std::vector<Point> mask_points(Mask m) {
  std::vector<Point> out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

long long choose2(long long n) { return n * (n - 1) / 2; }

// Greedy maximal independent set on `order`, skipping points marked in `excluded`.
std::vector<Point> greedy_in_order(const Design& d, const std::vector<Point>& order, const std::vector<char>& excluded,
                                   std::size_t limit) {
  const int k = d.k();
  std::vector<std::vector<std::size_t>> incidence(static_cast<std::size_t>(d.v()));
  for (std::size_t i = 0; i < d.blocks().size(); ++i)
    for (Point p : d.blocks()[i]) incidence[static_cast<std::size_t>(p)].push_back(i);
  std::vector<int> inside(d.blocks().size(), 0);
  std::vector<Point> chosen;
  for (Point p : order) {
    if (chosen.size() >= limit) break;
    if (excluded[static_cast<std::size_t>(p)]) continue;
    bool ok = true;
    for (std::size_t bi : incidence[static_cast<std::size_t>(p)])
      if (inside[bi] == k - 1) {
        ok = false;
        break;
      }
    if (!ok) continue;
    chosen.push_back(p);
    for (std::size_t bi : incidence[static_cast<std::size_t>(p)]) ++inside[bi];
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace

std::vector<Point> max_independent_set(const Design& design) {
  if (design.v() > kExactIndependentSetCap)
    throw std::invalid_argument("exact independent set search is capped at v=" +
                                std::to_string(kExactIndependentSetCap) + "; use greedy_independent_set");
  const BitDesign bd(design);
  const Mask all = design.v() == 64 ? ~Mask{0} : (Mask{1} << design.v()) - 1;
  return mask_points(mis_within(bd, all));
}

std::vector<Point> greedy_independent_set(const Design& design, std::uint64_t seed) {
  std::vector<Point> order(static_cast<std::size_t>(design.v()));
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  return greedy_in_order(design, order, std::vector<char>(order.size(), 0), order.size());
}

Rational pair_clip_threshold(int t, int k, int v) {
  return make_rational(static_cast<long long>(v) * (k - t + 1), 2LL * k) + make_rational(k + t, 2) - 1;
}

IndependentPair make_independent_pair(const Design& design, std::vector<Point> a, std::vector<Point> b, bool exact) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<Point> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  if (!common.empty()) throw DesignError("independent sets overlap at point " + std::to_string(common.front()));
  if (!is_independent(design, a) || !is_independent(design, b)) throw DesignError("set contains a block");
  if (b.size() > a.size()) std::swap(a, b);
  IndependentPair p;
  p.gamma = static_cast<int>(a.size());
  p.delta = static_cast<int>(b.size());
  p.set_a = std::move(a);
  p.set_b = std::move(b);
  p.clip = pair_clip_threshold(design.t(), design.k(), design.v());
  p.gamma_clip = std::min(Rational(p.gamma), p.clip);
  p.delta_clip = std::min(Rational(p.delta), p.clip);
  p.exact = exact;
  return p;
}

IndependentPair independent_pair(const Design& design, std::uint64_t seed) {
  const int v = design.v(), k = design.k(), t = design.t();
  // Objective scaled by 2k so the clip threshold is an integer.
  const long long cap2k = static_cast<long long>(v) * (k - t + 1) + static_cast<long long>(k) * (k + t) - 2LL * k;
  auto score = [&](long long a, long long b) { return std::min(2LL * k * a, cap2k) + std::min(2LL * k * b, cap2k); };

  if (v <= kExactPairCap) {
    const BitDesign bd(design);
    const Mask all = (Mask{1} << v) - 1;
    long long best = -1;
    Mask best_a = 0, best_b = 0;
    for (Mask a = 0; a <= all; ++a) {
      if (!bd.independent(a)) continue;
      const int na = std::popcount(a);
      if (score(na, v - na) <= best) continue;
      const Mask b = mis_within(bd, all & ~a);
      const long long s = score(na, std::popcount(b));
      if (s > best) {
        best = s;
        best_a = a;
        best_b = b;
        if (best == 2 * cap2k) break;
      }
    }
    return make_independent_pair(design, mask_points(best_a), mask_points(best_b), true);
  }

  // Randomized greedy: take a random maximal set truncated at the clip size,
  // then the largest set found in what remains.
  const auto clip_size = static_cast<std::size_t>(ceil_of(pair_clip_threshold(t, k, v)).convert_to<long long>());
  std::mt19937_64 rng(seed);
  std::vector<Point> order(static_cast<std::size_t>(v));
  std::iota(order.begin(), order.end(), 0);
  long long best = -1;
  std::vector<Point> best_a, best_b;
  constexpr int kTrials = 256;
  for (int trial = 0; trial < kTrials; ++trial) {
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<char> excluded(static_cast<std::size_t>(v), 0);
    auto a = greedy_in_order(design, order, excluded, clip_size);
    for (Point p : a) excluded[static_cast<std::size_t>(p)] = 1;
    std::vector<Point> b;
    if (v <= kExactIndependentSetCap) {
      const BitDesign bd(design);
      Mask allowed = 0;
      for (int p = 0; p < v; ++p)
        if (!excluded[static_cast<std::size_t>(p)]) allowed |= Mask{1} << p;
      b = mask_points(mis_within(bd, allowed));
    } else {
      std::shuffle(order.begin(), order.end(), rng);
      b = greedy_in_order(design, order, excluded, order.size());
    }
    const long long s = score(static_cast<long long>(a.size()), static_cast<long long>(b.size()));
    if (s > best) {
      best = s;
      best_a = a;
      best_b = b;
    }
    if (best == 2 * cap2k) break;
  }
  return make_independent_pair(design, best_a, best_b, false);
}

IndependenceBounds indep_bounds(const Design& design, int alpha, const IndependentPair* pair) {
  const long long v = design.v(), k = design.k(), t = design.t();
  IndependenceBounds b;
  b.alpha = alpha;
  b.minsum_upper = k * alpha - choose2(k);
  b.maxsum_lower = k * (v - 1 - alpha) + choose2(k);
  b.diffsum_lower = k * (v + k - 2 - 2LL * alpha);
  b.single_set_threshold = make_rational(v * (k - t + 1), 2 * k) + make_rational(k + t - 3, 2);
  b.single_set_met = Rational(alpha) >= b.single_set_threshold;
  // Solving k(v+k-2-2c) = (v-k)(t-1) for c; this is v/3+1 for triple systems,
  // half a point below the clip threshold.
  b.pair_threshold = make_rational(v * (k - t + 1), 2 * k) + make_rational(k + t - 3, 2);
  if (pair) {
    b.pair_diffsum_lower = Rational(k) * (Rational(v + k - 2) - pair->gamma_clip - pair->delta_clip);
    b.pair_met = Rational(pair->gamma) >= b.pair_threshold && Rational(pair->delta) >= b.pair_threshold;
  }
  return b;
}

Labeling labeling_from_pair(const Design& design, const std::vector<Point>& a, const std::vector<Point>& b) {
  const int v = design.v();
  std::vector<int> group(static_cast<std::size_t>(v), 1);
  for (Point p : a) {
    if (p < 0 || p >= v) throw DesignError("point " + std::to_string(p) + " out of range");
    group[static_cast<std::size_t>(p)] = 0;
  }
  for (Point p : b) {
    if (p < 0 || p >= v) throw DesignError("point " + std::to_string(p) + " out of range");
    if (group[static_cast<std::size_t>(p)] == 0) throw DesignError("sets overlap at point " + std::to_string(p));
    group[static_cast<std::size_t>(p)] = 2;
  }
  const int na = static_cast<int>(std::count(group.begin(), group.end(), 0));
  const int nb = static_cast<int>(std::count(group.begin(), group.end(), 2));
  int next[3] = {0, na, v - nb};
  std::vector<int> ranks(static_cast<std::size_t>(v));
  for (int p = 0; p < v; ++p) ranks[static_cast<std::size_t>(p)] = next[group[static_cast<std::size_t>(p)]]++;
  return Labeling(std::move(ranks));
}

PairLabelingBounds pair_labeling_bounds(int k, int v, int alpha, int beta) {
  // Smallest sum a block can reach when the bottom `n` ranks hold an independent
  // set: at most min(k-1, n) of its points carry those ranks.
  auto floor_sum = [k](long long n) {
    long long best = -1;
    for (long long j = 0; j <= std::min<long long>(k - 1, n); ++j) {
      const long long s = choose2(j) + (k - j) * n + choose2(k - j);
      if (best < 0 || s < best) best = s;
    }
    return best;
  };
  PairLabelingBounds out;
  out.minsum_lower = floor_sum(alpha);
  out.maxsum_upper = static_cast<long long>(k) * (v - 1) - floor_sum(beta);
  out.diffsum_upper = out.maxsum_upper - out.minsum_lower;
  return out;
}

}  // namespace steiner
