#pragma once

#include "steiner/design.hpp"
#include "steiner/metrics.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace steiner {

enum class Objective { max_minsum, min_diffsum, min_ratiosum };
enum class Optimality { exact, heuristic };

std::string_view objective_name(Objective o) noexcept;
std::optional<Objective> parse_objective(std::string_view name) noexcept;
std::string_view optimality_name(Optimality o) noexcept;

/// Objective value of a report: MinSum, DiffSum or RatioSum (nullopt when undefined).
std::optional<Rational> objective_value(Objective o, const MetricReport& r);

/// True iff `a` is strictly better than `b` under `o`.
bool better(Objective o, const MetricReport& a, const MetricReport& b);

struct SearchResult {
  Labeling labeling;
  MetricReport report;
  Objective objective = Objective::min_diffsum;
  Optimality optimality = Optimality::heuristic;
  std::optional<Rational> certificate;  // proven optimum for exact results
  std::string method;
  std::uint64_t rng_seed = 0;
  std::uint64_t iterations = 0;
};

inline constexpr int kExhaustiveCap = 9;

/// Global optimum over all v! labelings, lexicographically least among ties.
/// Throws std::invalid_argument for v > kExhaustiveCap or an empty design.
SearchResult exhaustive_labeling(const Design& design, Objective objective);

struct BranchAndBoundOptions {
  int max_v = 13;
  std::uint64_t node_budget = 200'000'000;
  std::uint64_t warm_start_steps = 20'000;  // annealing steps for the first incumbent
};

/// Exact optimum by branch and bound. If the node budget runs out the best
/// labeling found is returned flagged heuristic.
SearchResult bb_labeling(const Design& design, Objective objective, const BranchAndBoundOptions& options = {});

struct AnnealOptions {
  std::uint64_t seed = 0;
  std::uint64_t budget = 1'000'000;  // steps
  std::optional<Labeling> initial;   // defaults to labeling_from_pair on independent_pair
  double cooling = 0.999;
};

/// Simulated annealing over rank swaps; returns the best labeling visited.
SearchResult anneal_labeling(const Design& design, Objective objective, const AnnealOptions& options);

/// Starting labeling anneal_labeling uses when none is given.
Labeling default_initial_labeling(const Design& design, std::uint64_t seed);

/// Hill-climbs over STS(v) on points 0..v-1 using only triples whose point sum
/// lies in [target_min, target_max]; a hit is a complete system whose identity
/// labeling has exactly those MinSum and MaxSum. `budget` counts climbing steps.
struct TableHit {
  Design design;
  SearchResult result;
};
std::optional<TableHit> table_search(int v, long long target_min, long long target_max, std::uint64_t seed,
                                     std::uint64_t budget, std::uint64_t* steps_used = nullptr);

/// Published (v, MinSum, MaxSum) targets for small triple systems.
struct TableRow {
  int v = 0;
  long long min_sum = 0;
  long long max_sum = 0;
};
std::vector<TableRow> table_rows();

/// True when no STS(v) labeling can reach the row: the window violates the
/// basic or refined DiffSum bounds, or the MinSum/MaxSum caps.
bool table_row_infeasible(const TableRow& row);

}  // namespace steiner
