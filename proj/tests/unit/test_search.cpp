#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "../oracles.hpp"
#include "steiner/constructions.hpp"
#include "steiner/independence.hpp"
#include "steiner/search.hpp"

#include <random>
#include <set>

using namespace steiner;

namespace {

constexpr Objective kAll[] = {Objective::max_minsum, Objective::min_diffsum, Objective::min_ratiosum};

Rational oracle_value(const oracle::LabelingOptima& o, Objective obj) {
  switch (obj) {
    case Objective::max_minsum: return o.best_min;
    case Objective::min_diffsum: return o.best_diff;
    case Objective::min_ratiosum: return make_rational(o.best_ratio.first, o.best_ratio.second);
  }
  return 0;
}

// First labeling in lexicographic rank order that attains `target`.
std::vector<int> first_optimal(const Design& d, Objective obj, const Rational& target) {
  std::vector<int> rank(static_cast<std::size_t>(d.v()));
  std::iota(rank.begin(), rank.end(), 0);
  do {
    const auto [mn, mx] = oracle::sum_range(d.blocks(), rank);
    Rational val = obj == Objective::max_minsum ? Rational(mn)
                   : obj == Objective::min_diffsum ? Rational(mx - mn)
                                                   : make_rational(mx, mn);
    if (val == target) return rank;
  } while (std::next_permutation(rank.begin(), rank.end()));
  return {};
}

Design random_ptp(int v, std::mt19937_64& rng) {
  std::vector<Block> all;
  for (int a = 0; a < v; ++a)
    for (int b = a + 1; b < v; ++b)
      for (int c = b + 1; c < v; ++c) all.push_back({a, b, c});
  std::shuffle(all.begin(), all.end(), rng);
  std::set<std::pair<int, int>> used;
  std::vector<Block> chosen;
  for (const auto& b : all) {
    if (used.count({b[0], b[1]}) || used.count({b[0], b[2]}) || used.count({b[1], b[2]})) continue;
    used.insert({b[0], b[1]});
    used.insert({b[0], b[2]});
    used.insert({b[1], b[2]});
    chosen.push_back(b);
  }
  return Design::make(v, 2, 3, chosen);
}

bool at_least_as_good(Objective o, const Rational& a, const Rational& b) {
  return o == Objective::max_minsum ? a >= b : a <= b;
}

}  // namespace

TEST_CASE("objective names") {
  for (auto o : kAll) CHECK(parse_objective(objective_name(o)) == o);
  CHECK(objective_name(Objective::max_minsum) == "max-minsum");
  CHECK_FALSE(parse_objective("min-maxsum"));
  CHECK(optimality_name(Optimality::exact) == "exact");
}

TEST_CASE("exhaustive search on the catalog systems") {
  const auto s9 = catalog("STS9").design;
  const auto d9 = exhaustive_labeling(s9, Objective::min_diffsum);
  CHECK(d9.report.diff_sum == 9);
  CHECK(d9.optimality == Optimality::exact);
  REQUIRE(d9.certificate);
  CHECK(*d9.certificate == 9);
  const auto r9 = exhaustive_labeling(s9, Objective::min_ratiosum);
  CHECK(*r9.report.ratio_sum == 2);

  const auto s7 = catalog("STS7").design;
  CHECK(exhaustive_labeling(s7, Objective::min_diffsum).report.diff_sum == 7);
  const auto m7 = exhaustive_labeling(s7, Objective::max_minsum);
  CHECK(m7.report.min_sum <= 7);
  CHECK(m7.report.min_sum == oracle::all_labelings(s7.blocks(), 7).best_min);
}

TEST_CASE("property: oracle chain on small designs") {
  std::mt19937_64 rng(2024);
  std::vector<Design> pool = {catalog("STS7").design, catalog("STS9").design, catalog("S348").design};
  for (int i = 0; i < 4; ++i) pool.push_back(random_ptp(7 + (i % 3), rng));
  for (const auto& d : pool) {
    const auto truth = oracle::all_labelings(d.blocks(), d.v());
    for (auto obj : kAll) {
      CAPTURE(objective_name(obj));
      const Rational want = oracle_value(truth, obj);
      const auto ex = exhaustive_labeling(d, obj);
      CHECK(*objective_value(obj, ex.report) == want);
      CHECK(ex.labeling.ranks() == first_optimal(d, obj, want));
      const auto bb = bb_labeling(d, obj);
      CHECK(bb.optimality == Optimality::exact);
      CHECK(*objective_value(obj, bb.report) == want);
      const auto an = anneal_labeling(d, obj, {.seed = 3, .budget = 20000});
      const auto init = metric_report(d, default_initial_labeling(d, 3));
      const Rational got = *objective_value(obj, an.report);
      CHECK(at_least_as_good(obj, want, got));
      CHECK(at_least_as_good(obj, got, *objective_value(obj, init)));
    }
  }
}

TEST_CASE("property: reports recompute from their labelings") {
  const auto d = sw_complete_general(13).design;
  for (auto obj : kAll) {
    const auto r = anneal_labeling(d, obj, {.seed = 9, .budget = 5000});
    const auto again = metric_report(d, r.labeling);
    CHECK(again.min_sum == r.report.min_sum);
    CHECK(again.max_sum == r.report.max_sum);
    CHECK(again.ratio_sum == r.report.ratio_sum);
    CHECK(r.rng_seed == 9);
    CHECK(r.method == "anneal");
  }
}

TEST_CASE("property: searches are deterministic") {
  const auto d = bose(15).design;
  for (auto obj : kAll) {
    const auto a = anneal_labeling(d, obj, {.seed = 42, .budget = 30000});
    const auto b = anneal_labeling(d, obj, {.seed = 42, .budget = 30000});
    CHECK(a.labeling == b.labeling);
    CHECK(a.iterations == b.iterations);
  }
  const auto s9 = catalog("STS9").design;
  CHECK(bb_labeling(s9, Objective::min_diffsum).labeling == bb_labeling(s9, Objective::min_diffsum).labeling);
  CHECK(exhaustive_labeling(s9, Objective::max_minsum).labeling ==
        exhaustive_labeling(s9, Objective::max_minsum).labeling);
}

TEST_CASE("zero budget returns the initialization") {
  const auto d = skolem(19).design;
  const auto r = anneal_labeling(d, Objective::min_diffsum, {.seed = 5, .budget = 0});
  CHECK(r.labeling == default_initial_labeling(d, 5));
  const auto p = independent_pair(d, 5);
  CHECK(r.labeling == labeling_from_pair(d, p.set_a, p.set_b));
  std::mt19937_64 rng(1);
  const Labeling mine(oracle::random_permutation(19, rng));
  CHECK(anneal_labeling(d, Objective::max_minsum, {.seed = 5, .budget = 0, .initial = mine}).labeling == mine);
}

TEST_CASE("annealing never ends worse than its start") {
  const auto b15 = bose(15).design;
  const auto r = anneal_labeling(b15, Objective::min_diffsum, {.seed = 1, .budget = 1'000'000});
  CHECK(r.report.diff_sum <= 23);
  const auto g13 = sw_complete_general(13).design;
  CHECK(anneal_labeling(g13, Objective::min_diffsum, {.seed = 0, .budget = 100000}).report.diff_sum <= 20);
}

TEST_CASE("branch and bound on a 13-point system") {
  const auto c = sw_complete_general(13);
  const auto r = bb_labeling(c.design, Objective::max_minsum);
  CHECK(r.optimality == Optimality::exact);
  CHECK(r.report.min_sum <= 13);
  CHECK(r.report.min_sum >= metric_report(c.design, c.labeling).min_sum);
  CHECK(r.report.min_sum <= 3LL * static_cast<long long>(max_independent_set(c.design).size()) - 3);
}

TEST_CASE("no labeling of the 13-point systems reaches DiffSum 13") {
  for (const auto& d : {sw_complete_general(13).design, skolem(13).design}) {
    const auto r = bb_labeling(d, Objective::min_diffsum);
    CHECK(r.optimality == Optimality::exact);
    CHECK(r.report.diff_sum >= 14);
  }
}

TEST_CASE("search input errors") {
  const auto empty = Design::make(7, 2, 3, {});
  CHECK_THROWS_AS(exhaustive_labeling(empty, Objective::min_diffsum), std::invalid_argument);
  CHECK_THROWS_AS(bb_labeling(empty, Objective::min_diffsum), std::invalid_argument);
  CHECK_THROWS_AS(anneal_labeling(empty, Objective::min_diffsum, {}), std::invalid_argument);
  CHECK_THROWS_AS(exhaustive_labeling(bose(15).design, Objective::min_diffsum), std::invalid_argument);
  CHECK_THROWS_AS(bb_labeling(bose(15).design, Objective::min_diffsum), std::invalid_argument);
  CHECK_THROWS_AS(table_search(11, 10, 22, 0, 10), std::invalid_argument);
  CHECK_THROWS_AS(table_search(33, 32, 66, 0, 10), std::invalid_argument);
}

TEST_CASE("table rows") {
  const auto rows = table_rows();
  CHECK(rows.front().v == 7);
  CHECK(std::is_sorted(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.v < b.v; }));
  for (const auto& r : rows) CHECK_FALSE(table_row_infeasible(r));
  CHECK(table_row_infeasible({13, 13, 26}));
  CHECK(table_row_infeasible({9, 10, 18}));
}

TEST_CASE("table search hits") {
  std::uint64_t steps = 0;
  const auto h9 = table_search(9, 9, 18, 0, 10'000'000, &steps);
  REQUIRE(h9);
  CHECK(validate(h9->design).is_steiner);
  CHECK(h9->result.report.min_sum == 9);
  CHECK(h9->result.report.max_sum == 18);
  CHECK(steps <= 10'000'000);

  const auto h13 = table_search(13, 12, 26, 0, 10'000'000);
  REQUIRE(h13);
  CHECK(validate(h13->design).is_steiner);
  const auto again = metric_report(h13->design, h13->result.labeling);
  CHECK(again.min_sum == 12);
  CHECK(again.max_sum == 26);
  CHECK(again.diff_sum == 14);

  const auto h13b = table_search(13, 12, 26, 0, 10'000'000);
  REQUIRE(h13b);
  CHECK(h13b->design == h13->design);

  CHECK_FALSE(table_search(13, 13, 26, 0, 20000));
}
