#include "steiner/search.hpp"

#include "steiner/independence.hpp"
#include "steiner/kernels/block_sum.hpp"
#include "steiner/parallel.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <future>
#include <numeric>
#include <random>
#include <stdexcept>

namespace steiner {

std::string_view objective_name(Objective o) noexcept {
  switch (o) {
    case Objective::max_minsum:
      return "max-minsum";
    case Objective::min_ratiosum:
      return "min-ratiosum";
    case Objective::min_diffsum:
      break;
  }
  return "min-diffsum";
}

std::optional<Objective> parse_objective(std::string_view name) noexcept {
  if (name == "max-minsum") return Objective::max_minsum;
  if (name == "min-diffsum") return Objective::min_diffsum;
  if (name == "min-ratiosum") return Objective::min_ratiosum;
  return std::nullopt;
}

std::string_view optimality_name(Optimality o) noexcept { return o == Optimality::exact ? "exact" : "heuristic"; }

std::optional<Rational> objective_value(Objective o, const MetricReport& r) {
  switch (o) {
    case Objective::max_minsum:
      return Rational(r.min_sum);
    case Objective::min_diffsum:
      return Rational(r.diff_sum);
    case Objective::min_ratiosum:
      return r.ratio_sum;
  }
  return std::nullopt;
}

namespace {

// Strict improvement of (min_a, max_a) over (min_b, max_b). A zero minimum
// makes the ratio undefined, which ranks below every defined ratio.
bool better_range(Objective o, long long min_a, long long max_a, long long min_b, long long max_b) {
  switch (o) {
    case Objective::max_minsum:
      return min_a > min_b;
    case Objective::min_diffsum:
      return max_a - min_a < max_b - min_b;
    case Objective::min_ratiosum:
      if (min_a <= 0) return false;
      if (min_b <= 0) return true;
      return max_a * min_b < max_b * min_a;
  }
  return false;
}

void require_nonempty(const Design& design) {
  if (design.empty()) throw std::invalid_argument("labeling search needs a design with at least one block");
}

SearchResult finish(const Design& design, Labeling labeling, Objective objective, Optimality optimality,
                    std::string method, std::uint64_t seed, std::uint64_t iterations) {
  SearchResult r;
  r.report = metric_report(design, labeling);
  r.labeling = std::move(labeling);
  r.objective = objective;
  r.optimality = optimality;
  if (optimality == Optimality::exact) r.certificate = objective_value(objective, r.report);
  r.method = std::move(method);
  r.rng_seed = seed;
  r.iterations = iterations;
  return r;
}

long long choose2(long long n) { return n * (n - 1) / 2; }

// Provable limits on the objective for this design, used to stop early and to
// cross-check exact results.
struct StaticLimits {
  std::optional<long long> minsum_upper;
  std::optional<long long> diffsum_lower;
  std::optional<Rational> ratiosum_lower;
};

StaticLimits static_limits(const Design& design) {
  StaticLimits s;
  const int v = design.v(), t = design.t(), k = design.k();
  if (v <= kExactIndependentSetCap) {
    const int alpha = static_cast<int>(max_independent_set(design).size());
    const auto ib = indep_bounds(design, alpha);
    s.minsum_upper = ib.minsum_upper;
    s.diffsum_lower = std::max<long long>(0, ib.diffsum_lower);
  }
  if (0 < t && t < k && k <= v && validate(design).is_steiner) {
    const auto bs = basic_bounds(t, k, v);
    s.minsum_upper = s.minsum_upper ? std::min(*s.minsum_upper, bs.minsum_upper) : bs.minsum_upper;
    long long d = bs.diffsum_lower;
    Rational r = bs.ratiosum_lower;
    if (bs.sts_refined) {
      d = std::max(d, bs.sts_refined->diffsum_lower);
      r = std::max(r, bs.sts_refined->ratiosum_lower);
    }
    s.diffsum_lower = s.diffsum_lower ? std::max(*s.diffsum_lower, d) : d;
    s.ratiosum_lower = r;
  }
  return s;
}

bool reaches_limit(Objective o, const MetricReport& r, const StaticLimits& s) {
  switch (o) {
    case Objective::max_minsum:
      return s.minsum_upper && r.min_sum >= *s.minsum_upper;
    case Objective::min_diffsum:
      return s.diffsum_lower && r.diff_sum <= *s.diffsum_lower;
    case Objective::min_ratiosum:
      return s.ratiosum_lower && r.ratio_sum && *r.ratio_sum <= *s.ratiosum_lower;
  }
  return false;
}

void check_against_limits(Objective o, const MetricReport& r, const StaticLimits& s) {
  bool bad = false;
  switch (o) {
    case Objective::max_minsum:
      bad = s.minsum_upper && r.min_sum > *s.minsum_upper;
      break;
    case Objective::min_diffsum:
      bad = s.diffsum_lower && r.diff_sum < *s.diffsum_lower;
      break;
    case Objective::min_ratiosum:
      bad = s.ratiosum_lower && r.ratio_sum && *r.ratio_sum < *s.ratiosum_lower;
      break;
  }
  if (bad) throw std::logic_error("exact search result violates a proven bound");
}

struct Best {
  std::vector<std::int32_t> ranks;
  long long min = 0, max = 0;
  bool set = false;
};

// All permutations whose first rank is `first`, in lexicographic order.
Best exhaustive_slice(const kernels::BlockColumns& cols, int v, int first, Objective objective) {
  std::vector<std::int32_t> ranks(static_cast<std::size_t>(v));
  ranks[0] = first;
  for (int i = 1, r = 0; i < v; ++i, ++r) {
    if (r == first) ++r;
    ranks[static_cast<std::size_t>(i)] = r;
  }
  const auto isa = kernels::active_isa();
  Best best;
  do {
    const auto sr = kernels::sum_range(isa, cols, ranks);
    if (!best.set || better_range(objective, sr.min, sr.max, best.min, best.max)) {
      best.ranks = ranks;
      best.min = sr.min;
      best.max = sr.max;
      best.set = true;
    }
  } while (std::next_permutation(ranks.begin() + 1, ranks.end()));
  return best;
}

}  // namespace

bool better(Objective o, const MetricReport& a, const MetricReport& b) {
  return better_range(o, a.min_sum, a.max_sum, b.min_sum, b.max_sum);
}

SearchResult exhaustive_labeling(const Design& design, Objective objective) {
  require_nonempty(design);
  const int v = design.v();
  if (v > kExhaustiveCap)
    throw std::invalid_argument("exhaustive labeling is capped at v=" + std::to_string(kExhaustiveCap) + ", got v=" +
                                std::to_string(v));
  const kernels::BlockColumns cols(design);

  // One slice per value of the first rank; slices merge in order so ties keep
  // the lexicographically least labeling.
  std::vector<Best> slices(static_cast<std::size_t>(v));
  const std::size_t workers = std::min<std::size_t>(thread_cap(), static_cast<std::size_t>(v));
  if (workers <= 1) {
    for (int f = 0; f < v; ++f) slices[static_cast<std::size_t>(f)] = exhaustive_slice(cols, v, f, objective);
  } else {
    std::vector<std::future<void>> jobs;
    for (std::size_t w = 0; w < workers; ++w)
      jobs.push_back(std::async(std::launch::async, [&, w] {
        for (auto f = w; f < static_cast<std::size_t>(v); f += workers)
          slices[f] = exhaustive_slice(cols, v, static_cast<int>(f), objective);
      }));
    for (auto& j : jobs) j.get();
  }
  Best best;
  for (const auto& s : slices)
    if (!best.set || better_range(objective, s.min, s.max, best.min, best.max)) best = s;

  std::uint64_t count = 1;
  for (int i = 2; i <= v; ++i) count *= static_cast<std::uint64_t>(i);
  auto r = finish(design, Labeling(std::vector<int>(best.ranks.begin(), best.ranks.end())), objective,
                  Optimality::exact, "exhaustive", 0, count);
  check_against_limits(objective, r.report, static_limits(design));
  return r;
}

namespace {

// Depth-first search over rank assignments. Ranks are handed out from an
// interval [lo, hi] of unused ranks: low to high for max-minsum, and from both
// ends alternately for the two spread objectives, so both extremes of the
// block sums are pinned early.
class BranchAndBound {
 public:
  BranchAndBound(const Design& d, Objective o, std::uint64_t budget)
      : d_(d), o_(o), v_(d.v()), k_(d.k()), budget_(budget), rank_(static_cast<std::size_t>(v_), -1),
        psum_(d.block_count(), 0), free_(d.block_count(), d.k()), incidence_(static_cast<std::size_t>(v_)) {
    for (std::size_t i = 0; i < d.blocks().size(); ++i)
      for (Point p : d.blocks()[i]) incidence_[static_cast<std::size_t>(p)].push_back(i);
  }

  void set_incumbent(const Labeling& l, const MetricReport& r) {
    best_ranks_ = l.ranks();
    best_min_ = r.min_sum;
    best_max_ = r.max_sum;
  }

  void set_stop(const StaticLimits* limits) { limits_ = limits; }

  // Returns true if the search space was exhausted within budget.
  bool run() {
    dfs(0, v_ - 1, 0);
    return !out_of_budget_;
  }

  const std::vector<int>& best_ranks() const { return best_ranks_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool take_low(int depth) const { return o_ == Objective::max_minsum || depth % 2 == 0; }

  // Optimistic (min, max) over completions with ranks [lo, hi] still free.
  std::pair<long long, long long> bounds(int lo, int hi) const {
    long long min_ub = -1, max_lb = -1;
    for (std::size_t b = 0; b < psum_.size(); ++b) {
      const long long f = free_[b];
      const long long ub = psum_[b] + f * hi - choose2(f);
      const long long lb = psum_[b] + f * lo + choose2(f);
      if (min_ub < 0 || ub < min_ub) min_ub = ub;
      if (lb > max_lb) max_lb = lb;
    }
    return {min_ub, max_lb};
  }

  bool prunable(long long min_ub, long long max_lb) const {
    switch (o_) {
      case Objective::max_minsum:
        return min_ub <= best_min_;
      case Objective::min_diffsum:
        return max_lb - min_ub >= best_max_ - best_min_;
      case Objective::min_ratiosum:
        return min_ub > 0 && best_min_ > 0 && max_lb * best_min_ >= best_max_ * min_ub;
    }
    return false;
  }

  void assign(Point p, int r) {
    rank_[static_cast<std::size_t>(p)] = r;
    for (std::size_t b : incidence_[static_cast<std::size_t>(p)]) {
      psum_[b] += r;
      --free_[b];
    }
  }

  void unassign(Point p, int r) {
    rank_[static_cast<std::size_t>(p)] = -1;
    for (std::size_t b : incidence_[static_cast<std::size_t>(p)]) {
      psum_[b] -= r;
      ++free_[b];
    }
  }

  void dfs(int lo, int hi, int depth) {
    if (done_) return;
    if (lo > hi) {
      long long mn = psum_[0], mx = psum_[0];
      for (long long s : psum_) {
        mn = std::min(mn, s);
        mx = std::max(mx, s);
      }
      if (better_range(o_, mn, mx, best_min_, best_max_)) {
        best_min_ = mn;
        best_max_ = mx;
        best_ranks_ = rank_;
        if (limits_ && reached_limit()) done_ = true;
      }
      return;
    }
    const bool low = take_low(depth);
    const int r = low ? lo : hi;
    const int nlo = low ? lo + 1 : lo;
    const int nhi = low ? hi : hi - 1;

    // Most constrained first: points sharing the most blocks with ranked points.
    std::vector<std::pair<int, Point>> order;
    for (Point p = 0; p < v_; ++p) {
      if (rank_[static_cast<std::size_t>(p)] >= 0) continue;
      int touched = 0;
      for (std::size_t b : incidence_[static_cast<std::size_t>(p)])
        if (free_[b] < k_) ++touched;
      order.emplace_back(-touched, p);
    }
    std::sort(order.begin(), order.end());

    for (const auto& [neg, p] : order) {
      if (++nodes_ > budget_) {
        out_of_budget_ = done_ = true;
        return;
      }
      assign(p, r);
      const auto [min_ub, max_lb] = bounds(nlo, nhi);
      if (!prunable(min_ub, max_lb)) dfs(nlo, nhi, depth + 1);
      unassign(p, r);
      if (done_) return;
    }
  }

  bool reached_limit() const {
    MetricReport r;
    r.min_sum = best_min_;
    r.max_sum = best_max_;
    r.diff_sum = best_max_ - best_min_;
    if (best_min_ > 0) r.ratio_sum = make_rational(best_max_, best_min_);
    return reaches_limit(o_, r, *limits_);
  }

  const Design& d_;
  Objective o_;
  int v_, k_;
  std::uint64_t budget_;
  std::vector<int> rank_;
  std::vector<long long> psum_;
  std::vector<int> free_;
  std::vector<std::vector<std::size_t>> incidence_;
  std::vector<int> best_ranks_;
  long long best_min_ = 0, best_max_ = 0;
  const StaticLimits* limits_ = nullptr;
  std::uint64_t nodes_ = 0;
  bool done_ = false;
  bool out_of_budget_ = false;
};

}  // namespace

SearchResult bb_labeling(const Design& design, Objective objective, const BranchAndBoundOptions& options) {
  require_nonempty(design);
  if (design.v() > options.max_v)
    throw std::invalid_argument("branch and bound is capped at v=" + std::to_string(options.max_v) + ", got v=" +
                                std::to_string(design.v()));
  const auto limits = static_limits(design);

  AnnealOptions warm;
  warm.budget = options.warm_start_steps;
  const auto start = anneal_labeling(design, objective, warm);
  if (reaches_limit(objective, start.report, limits)) {
    auto r = finish(design, start.labeling, objective, Optimality::exact, "branch-and-bound", 0, 0);
    check_against_limits(objective, r.report, limits);
    return r;
  }

  BranchAndBound bb(design, objective, options.node_budget);
  bb.set_incumbent(start.labeling, start.report);
  bb.set_stop(&limits);
  const bool complete = bb.run();
  auto r = finish(design, Labeling(bb.best_ranks()), objective, complete ? Optimality::exact : Optimality::heuristic,
                  "branch-and-bound", 0, bb.nodes());
  if (complete) check_against_limits(objective, r.report, limits);
  return r;
}

Labeling default_initial_labeling(const Design& design, std::uint64_t seed) {
  const auto pair = independent_pair(design, seed);
  return labeling_from_pair(design, pair.set_a, pair.set_b);
}

SearchResult anneal_labeling(const Design& design, Objective objective, const AnnealOptions& options) {
  require_nonempty(design);
  const int v = design.v();
  Labeling init = options.initial ? *options.initial : default_initial_labeling(design, options.seed);
  if (init.size() != v) throw DesignError("initial labeling size differs from v");
  if (v < 2 || options.budget == 0)
    return finish(design, std::move(init), objective, Optimality::heuristic, "anneal", options.seed, 0);

  const kernels::BlockColumns cols(design);
  const auto isa = kernels::active_isa();
  std::vector<std::int32_t> ranks(init.ranks().begin(), init.ranks().end());

  // Lower is better. Ratios are scaled by v so one unit of cost is comparable
  // to one unit of block sum.
  auto cost = [&](const kernels::SumRange& s) -> double {
    switch (objective) {
      case Objective::max_minsum:
        return -static_cast<double>(s.min);
      case Objective::min_diffsum:
        return static_cast<double>(s.max - s.min);
      case Objective::min_ratiosum:
        return s.min > 0 ? static_cast<double>(v) * s.max / s.min : 1e300;
    }
    return 0;
  };

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> pick(0, v - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  auto cur = kernels::sum_range(isa, cols, ranks);
  double cur_cost = cost(cur);
  auto best = cur;
  std::vector<std::int32_t> best_ranks = ranks;
  double temperature = static_cast<double>(design.k()) * v;

  for (std::uint64_t step = 0; step < options.budget; ++step) {
    const int i = pick(rng);
    int j = pick(rng);
    while (j == i) j = pick(rng);
    std::swap(ranks[static_cast<std::size_t>(i)], ranks[static_cast<std::size_t>(j)]);
    const auto next = kernels::sum_range(isa, cols, ranks);
    const double next_cost = cost(next);
    const double delta = next_cost - cur_cost;
    bool accept;
    if (delta < 0) accept = true;
    else if (delta == 0) accept = unit(rng) < 0.5;
    else accept = temperature > 0 && unit(rng) < std::exp(-delta / temperature);
    if (accept) {
      cur = next;
      cur_cost = next_cost;
      if (better_range(objective, cur.min, cur.max, best.min, best.max)) {
        best = cur;
        best_ranks = ranks;
      }
    } else {
      std::swap(ranks[static_cast<std::size_t>(i)], ranks[static_cast<std::size_t>(j)]);
    }
    temperature *= options.cooling;
  }
  return finish(design, Labeling(std::vector<int>(best_ranks.begin(), best_ranks.end())), objective,
                Optimality::heuristic, "anneal", options.seed, options.budget);
}

namespace {

using Mask = std::uint64_t;

int select_bit(Mask m, std::uint64_t index) {
  for (; index > 0; --index) m &= m - 1;
  return std::countr_zero(m);
}

// Partial triple system on 0..v-1 with per-point masks of uncovered partners.
class TripleClimber {
 public:
  TripleClimber(int v, long long lo, long long hi) : v_(v), lo_(lo), hi_(hi) { reset(); }

  void reset() {
    third_.assign(static_cast<std::size_t>(v_) * static_cast<std::size_t>(v_), -1);
    const Mask all = (Mask{1} << v_) - 1;
    open_.assign(static_cast<std::size_t>(v_), 0);
    for (int x = 0; x < v_; ++x) open_[static_cast<std::size_t>(x)] = all & ~(Mask{1} << x);
    blocks_ = 0;
  }

  std::size_t blocks() const { return blocks_; }

  // Points z that may complete a triple with x and y inside the sum window.
  Mask window(int x, int y) const {
    const long long a = std::max<long long>(0, lo_ - x - y);
    const long long b = std::min<long long>(v_ - 1, hi_ - x - y);
    if (a > b) return 0;
    const Mask upto = b >= 63 ? ~Mask{0} : (Mask{1} << (b + 1)) - 1;
    const Mask below = (Mask{1} << a) - 1;
    return upto & ~below;
  }

  // One climbing step; returns false when the chosen point had no legal move.
  template <class Rng>
  bool step(Rng& rng) {
    Mask live = 0;
    for (int x = 0; x < v_; ++x)
      if (open_[static_cast<std::size_t>(x)]) live |= Mask{1} << x;
    if (!live) return false;
    const int x = select_bit(live, rng() % static_cast<std::uint64_t>(std::popcount(live)));
    const Mask ox = open_[static_cast<std::size_t>(x)];
    Mask ys = 0;
    for (Mask c = ox; c; c &= c - 1) {
      const int y = std::countr_zero(c);
      if (ox & ~(Mask{1} << y) & window(x, y)) ys |= Mask{1} << y;
    }
    if (!ys) return false;
    const int y = select_bit(ys, rng() % static_cast<std::uint64_t>(std::popcount(ys)));
    const Mask zs = ox & ~(Mask{1} << y) & window(x, y);
    const int z = select_bit(zs, rng() % static_cast<std::uint64_t>(std::popcount(zs)));
    const int w = third(y, z);
    if (w >= 0) remove(w, y, z);
    add(x, y, z);
    return true;
  }

  // Removes a uniformly random block.
  template <class Rng>
  void drop_random(Rng& rng) {
    if (blocks_ == 0) return;
    std::uint64_t target = rng() % blocks_;
    for (int x = 0; x < v_; ++x)
      for (int y = x + 1; y < v_; ++y) {
        const int z = third(x, y);
        if (z > y && target-- == 0) {
          remove(x, y, z);
          return;
        }
      }
  }

  std::vector<Block> block_list() const {
    std::vector<Block> out;
    for (int x = 0; x < v_; ++x)
      for (int y = x + 1; y < v_; ++y) {
        const int z = third(x, y);
        if (z > y) out.push_back({x, y, z});
      }
    return out;
  }

 private:
  int third(int x, int y) const { return third_[static_cast<std::size_t>(x) * v_ + y]; }
  void set_pair(int x, int y, int z) {
    third_[static_cast<std::size_t>(x) * v_ + y] = z;
    third_[static_cast<std::size_t>(y) * v_ + x] = z;
    const Mask fx = Mask{1} << x, fy = Mask{1} << y;
    if (z < 0) {
      open_[static_cast<std::size_t>(x)] |= fy;
      open_[static_cast<std::size_t>(y)] |= fx;
    } else {
      open_[static_cast<std::size_t>(x)] &= ~fy;
      open_[static_cast<std::size_t>(y)] &= ~fx;
    }
  }
  void add(int x, int y, int z) {
    set_pair(x, y, z);
    set_pair(x, z, y);
    set_pair(y, z, x);
    ++blocks_;
  }
  void remove(int x, int y, int z) {
    set_pair(x, y, -1);
    set_pair(x, z, -1);
    set_pair(y, z, -1);
    --blocks_;
  }

  int v_;
  long long lo_, hi_;
  std::vector<int> third_;
  std::vector<Mask> open_;
  std::size_t blocks_ = 0;
};

}  // namespace

namespace {

// Annealing over labelings of a fixed system toward a sum window. The cost is
// the total distance of block sums outside [lo, hi], plus one for each window
// end no block attains; zero means the targets are met exactly.
class WindowRelabel {
 public:
  WindowRelabel(const std::vector<Block>& blocks, int v, long long lo, long long hi)
      : blocks_(blocks), v_(v), lo_(lo), hi_(hi), incidence_(static_cast<std::size_t>(v)) {
    for (std::size_t i = 0; i < blocks.size(); ++i)
      for (Point p : blocks[i]) incidence_[static_cast<std::size_t>(p)].push_back(i);
  }

  template <class Rng>
  std::optional<std::vector<int>> run(Rng& rng, std::uint64_t steps, std::uint64_t& used) {
    std::vector<int> rank(static_cast<std::size_t>(v_));
    std::iota(rank.begin(), rank.end(), 0);
    std::shuffle(rank.begin(), rank.end(), rng);
    sums_.assign(blocks_.size(), 0);
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      for (Point p : blocks_[i]) sums_[i] += rank[static_cast<std::size_t>(p)];
    long long cur = cost();
    std::uniform_int_distribution<int> pick(0, v_ - 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double temperature = 3.0;
    const double cooling = std::pow(0.1 / 3.0, 1.0 / static_cast<double>(std::max<std::uint64_t>(steps, 1)));
    for (std::uint64_t s = 0; s < steps; ++s) {
      ++used;
      if (cur == 0) return rank;
      const int i = pick(rng);
      int j = pick(rng);
      while (j == i) j = pick(rng);
      swap_ranks(rank, i, j);
      const long long next = cost();
      if (next <= cur || unit(rng) < std::exp(static_cast<double>(cur - next) / temperature)) cur = next;
      else swap_ranks(rank, i, j);
      temperature *= cooling;
    }
    if (cur == 0) return rank;
    return std::nullopt;
  }

 private:
  void swap_ranks(std::vector<int>& rank, int i, int j) {
    const int d = rank[static_cast<std::size_t>(j)] - rank[static_cast<std::size_t>(i)];
    for (std::size_t b : incidence_[static_cast<std::size_t>(i)]) sums_[b] += d;
    for (std::size_t b : incidence_[static_cast<std::size_t>(j)]) sums_[b] -= d;
    std::swap(rank[static_cast<std::size_t>(i)], rank[static_cast<std::size_t>(j)]);
  }

  long long cost() const {
    long long c = 0;
    bool at_lo = false, at_hi = false;
    for (long long x : sums_) {
      if (x < lo_) c += lo_ - x;
      else if (x > hi_) c += x - hi_;
      at_lo |= x == lo_;
      at_hi |= x == hi_;
    }
    return c + !at_lo + !at_hi;
  }

  const std::vector<Block>& blocks_;
  int v_;
  long long lo_, hi_;
  std::vector<std::vector<std::size_t>> incidence_;
  std::vector<long long> sums_;
};

}  // namespace

std::optional<TableHit> table_search(int v, long long target_min, long long target_max, std::uint64_t seed,
                                     std::uint64_t budget, std::uint64_t* steps_used) {
  if (!is_sts_order(v) || v < 7 || v > 27)
    throw std::invalid_argument("table search needs v ≡ 1,3 (mod 6) with 7 <= v <= 27, got v=" + std::to_string(v));
  const std::size_t full = static_cast<std::size_t>(v) * (v - 1) / 6;
  std::mt19937_64 rng(seed);
  std::uint64_t steps = 0;

  auto make_hit = [&](const std::vector<Block>& blocks) {
    const auto design = Design::make(v, 2, 3, blocks);
    if (steps_used) *steps_used = steps;
    return TableHit{design, finish(design, Labeling::identity(v), Objective::min_diffsum, Optimality::heuristic,
                                   "table-search", seed, steps)};
  };
  auto exact = [&](const std::vector<Block>& blocks) {
    long long mn = -1, mx = -1;
    for (const auto& b : blocks) {
      const long long s = b[0] + b[1] + b[2];
      if (mn < 0 || s < mn) mn = s;
      mx = std::max(mx, s);
    }
    return mn == target_min && mx == target_max;
  };

  // Rounds alternate two walks. The first climbs only through triples whose
  // point sum lies in the window; a miss or a run of failed moves drops one
  // random block, so it becomes a triple-exchange walk over systems inside
  // the window. The second climbs an unrestricted system and anneals its
  // labeling toward the window, then renames points by rank.
  const std::uint64_t round = 20'000ULL * static_cast<std::uint64_t>(v);
  const std::uint64_t fail_limit = 20ULL * static_cast<std::uint64_t>(v);
  TripleClimber restricted(v, target_min, target_max);
  TripleClimber open(v, 0, 3LL * v);
  std::uint64_t fails = 0;

  while (steps < budget) {
    for (std::uint64_t i = 0; i < round && steps < budget; ++i) {
      ++steps;
      if (restricted.step(rng)) fails = 0;
      else ++fails;
      if (restricted.blocks() == full) {
        const auto blocks = restricted.block_list();
        if (exact(blocks)) return make_hit(blocks);
        restricted.drop_random(rng);
      } else if (fails > fail_limit) {
        restricted.drop_random(rng);
        fails = 0;
      }
    }

    open.reset();
    while (open.blocks() < full && steps < budget) {
      ++steps;
      open.step(rng);
    }
    if (open.blocks() < full) break;
    const auto blocks = open.block_list();
    WindowRelabel relabel(blocks, v, target_min, target_max);
    const auto ranks = relabel.run(rng, std::min(round, budget - steps), steps);
    if (ranks) {
      std::vector<Block> renamed;
      for (const auto& b : blocks) {
        Block r{(*ranks)[static_cast<std::size_t>(b[0])], (*ranks)[static_cast<std::size_t>(b[1])],
                (*ranks)[static_cast<std::size_t>(b[2])]};
        std::sort(r.begin(), r.end());
        renamed.push_back(std::move(r));
      }
      if (exact(renamed)) return make_hit(renamed);
    }
  }
  if (steps_used) *steps_used = steps;
  return std::nullopt;
}

std::vector<TableRow> table_rows() {
  std::vector<TableRow> rows;
  rows.push_back({7, 6, 13});
  rows.push_back({9, 9, 18});
  for (int v : {13, 15, 19, 21, 25, 27}) rows.push_back({v, v - 1, 2LL * v});
  for (int v : {7, 15, 19, 21, 27}) rows.push_back({v, v, 2LL * v + 1});
  for (int v : {13, 25}) rows.push_back({v, v, 2LL * v + 2});
  std::stable_sort(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) { return a.v < b.v; });
  return rows;
}

bool table_row_infeasible(const TableRow& row) {
  if (!is_sts_order(row.v) || row.v < 7) return true;
  const auto bs = basic_bounds(2, 3, row.v);
  return row.min_sum > bs.minsum_upper || row.max_sum < bs.maxsum_lower ||
         row.max_sum - row.min_sum < sts_diffsum_lower(row.v);
}

}  // namespace steiner
