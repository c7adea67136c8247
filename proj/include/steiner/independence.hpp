#pragma once

#include "steiner/design.hpp"
#include "steiner/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace steiner {

/// Largest v for which max_independent_set runs its exact branch and bound.
inline constexpr int kExactIndependentSetCap = 30;
/// Largest v for which independent_pair certifies optimality.
inline constexpr int kExactPairCap = 15;

/// Two disjoint independent sets, the larger one first.
struct IndependentPair {
  std::vector<Point> set_a;
  std::vector<Point> set_b;
  int gamma = 0;  // |set_a|
  int delta = 0;  // |set_b| <= gamma
  Rational clip;  // v(k−t+1)/(2k) + (k+t)/2 − 1
  Rational gamma_clip;
  Rational delta_clip;
  bool exact = false;  // optimality of gamma_clip + delta_clip certified
};

/// Maximum independent set by branch and bound. Throws std::invalid_argument
/// when v exceeds kExactIndependentSetCap.
std::vector<Point> max_independent_set(const Design& design);

/// Random-order greedy maximal independent set (deterministic in seed). For a
/// partial triple system the result has at least floor(sqrt(2v)) points.
std::vector<Point> greedy_independent_set(const Design& design, std::uint64_t seed);

Rational pair_clip_threshold(int t, int k, int v);

/// Builds an IndependentPair from two sets, ordering them and computing the
/// clipped sizes. Throws DesignError if the sets overlap or are not independent.
IndependentPair make_independent_pair(const Design& design, std::vector<Point> a, std::vector<Point> b,
                                      bool exact = false);

/// Pair maximising gamma_clip + delta_clip: exact for v <= kExactPairCap,
/// otherwise a seeded randomized greedy search flagged exact = false.
IndependentPair independent_pair(const Design& design, std::uint64_t seed = 0);

struct IndependenceBounds {
  int alpha = 0;
  long long minsum_upper = 0;   // kα − C(k,2)
  long long maxsum_lower = 0;   // k(v−1−α) + C(k,2)
  long long diffsum_lower = 0;  // k(v+k−2−2α)
  std::optional<Rational> pair_diffsum_lower;  // k(v+k−2−γ′−δ′)
  Rational single_set_threshold;               // α needed for the MinSum bound of a Steiner system
  bool single_set_met = false;
  Rational pair_threshold;                     // each of γ, δ needed for the DiffSum bound: v(k−t+1)/(2k) + (k+t−3)/2
  std::optional<bool> pair_met;
};

/// `alpha` must be α(D) or an upper bound on it.
IndependenceBounds indep_bounds(const Design& design, int alpha, const IndependentPair* pair = nullptr);

/// Ranks 0..|a|-1 to `a`, the top |b| ranks to `b`, the rest in between; each
/// group is filled in ascending point order. Throws DesignError on overlap.
Labeling labeling_from_pair(const Design& design, const std::vector<Point>& a, const std::vector<Point>& b);

/// Bounds every labeling_from_pair output satisfies, for independent sets of
/// sizes alpha (bottom ranks) and beta (top ranks) in a packing with block size k.
struct PairLabelingBounds {
  long long minsum_lower = 0;
  long long maxsum_upper = 0;
  long long diffsum_upper = 0;
};
PairLabelingBounds pair_labeling_bounds(int k, int v, int alpha, int beta);

}  // namespace steiner
