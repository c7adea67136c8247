#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "../oracles.hpp"
#include "steiner/constructions.hpp"
#include "steiner/independence.hpp"
#include "steiner/metrics.hpp"

#include <cmath>
#include <random>

using namespace steiner;

namespace {

std::uint64_t to_mask(const std::vector<Point>& s) {
  std::uint64_t m = 0;
  for (Point p : s) m |= std::uint64_t{1} << p;
  return m;
}

// Random maximal partial triple system on v points.
Design random_ptp(int v, std::mt19937_64& rng) {
  std::vector<Block> all;
  for (int a = 0; a < v; ++a)
    for (int b = a + 1; b < v; ++b)
      for (int c = b + 1; c < v; ++c) all.push_back({a, b, c});
  std::shuffle(all.begin(), all.end(), rng);
  std::vector<std::vector<char>> used(static_cast<std::size_t>(v), std::vector<char>(static_cast<std::size_t>(v), 0));
  std::vector<Block> chosen;
  for (const auto& b : all) {
    auto& x = used[static_cast<std::size_t>(b[0])][static_cast<std::size_t>(b[1])];
    auto& y = used[static_cast<std::size_t>(b[0])][static_cast<std::size_t>(b[2])];
    auto& z = used[static_cast<std::size_t>(b[1])][static_cast<std::size_t>(b[2])];
    if (x || y || z) continue;
    x = y = z = 1;
    chosen.push_back(b);
  }
  return Design::make(v, 2, 3, chosen);
}

}  // namespace

TEST_CASE("independence numbers of the catalog systems") {
  const auto s7 = catalog("STS7").design;
  const auto a7 = max_independent_set(s7);
  CHECK(is_independent(s7, a7));
  CHECK(static_cast<int>(a7.size()) == oracle::alpha(s7.blocks(), 7));
  // Every 5-set of the seven-point plane contains a line; some 4-set avoids all of them.
  CHECK(a7.size() == 4);

  const auto s9 = catalog("STS9").design;
  const auto a9 = max_independent_set(s9);
  CHECK(a9.size() == 4);
  CHECK(static_cast<int>(a9.size()) == oracle::alpha(s9.blocks(), 9));

  CHECK(max_independent_set(Design::make(6, 2, 3, {})).size() == 6);
  CHECK_THROWS_AS(max_independent_set(sw_complete_general(31).design), std::invalid_argument);
}

TEST_CASE("exact independent sets agree with brute force") {
  std::mt19937_64 rng(99);
  std::vector<Design> pool = {catalog("S348").design, bose(9).design, sum_class_packing({2, 11, 0}),
                              skolem(13).design, sw_complete_general(13).design, bose(15).design};
  for (int i = 0; i < 6; ++i) pool.push_back(random_ptp(8 + i, rng));
  for (const auto& d : pool) {
    const auto s = max_independent_set(d);
    CHECK(oracle::independent(d.blocks(), to_mask(s)));
    CHECK(static_cast<int>(s.size()) == oracle::alpha(d.blocks(), d.v()));
  }
}

TEST_CASE("greedy sets meet the square-root floor") {
  std::mt19937_64 rng(7);
  std::vector<Design> pool = {catalog("STS9").design, bose(15).design, Design::make(10, 2, 3, {}),
                              sum_class_packing({2, 13, 1}), sw_complete_general(43).design, skolem(31).design};
  for (int i = 0; i < 8; ++i) pool.push_back(random_ptp(7 + 2 * i, rng));
  for (const auto& d : pool) {
    const int floor_ = static_cast<int>(std::floor(std::sqrt(2.0 * d.v())));
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto s = greedy_independent_set(d, seed);
      CHECK(is_independent(d, s));
      CHECK(static_cast<int>(s.size()) >= floor_);
    }
    CHECK(greedy_independent_set(d, 3) == greedy_independent_set(d, 3));
  }
  CHECK(greedy_independent_set(Design::make(10, 2, 3, {}), 0).size() == 10);
}

TEST_CASE("clip threshold") {
  CHECK(pair_clip_threshold(2, 3, 15) == make_rational(13, 2));
  CHECK(pair_clip_threshold(2, 3, 13) == make_rational(35, 6));
  CHECK(pair_clip_threshold(2, 3, 9) == make_rational(9, 2));
}

TEST_CASE("exact pairs agree with brute force") {
  std::mt19937_64 rng(31);
  std::vector<Design> pool = {catalog("STS7").design, catalog("STS9").design, catalog("S348").design,
                              sum_class_packing({2, 11, 0}), skolem(13).design, sw_complete_general(13).design};
  for (int i = 0; i < 4; ++i) pool.push_back(random_ptp(8 + i, rng));
  for (const auto& d : pool) {
    const auto p = independent_pair(d);
    CHECK(p.exact);
    CHECK(p.gamma >= p.delta);
    CHECK(is_independent(d, p.set_a));
    CHECK(is_independent(d, p.set_b));
    CHECK((to_mask(p.set_a) & to_mask(p.set_b)) == 0);
    const Rational score = (p.gamma_clip + p.delta_clip) * 2 * d.k();
    CHECK(score == oracle::best_pair_score(d.blocks(), d.v(), d.t(), d.k()));
  }
}

TEST_CASE("Bose fifteen has a full pair") {
  const auto p = independent_pair(bose(15).design);
  CHECK(p.gamma == 6);
  CHECK(p.delta == 6);
  CHECK(p.gamma_clip + p.delta_clip == 12);
}

TEST_CASE("no triple system on 13 points has two disjoint independent 6-sets in these constructions") {
  for (const auto& d : {skolem(13).design, sw_complete_general(13).design}) {
    const auto p = independent_pair(d);
    CHECK(p.delta <= 5);
    CHECK(oracle::best_pair_score(d.blocks(), 13, 2, 3) < 2 * 3 * 12);
  }
}

TEST_CASE("heuristic pairs above the exact cap") {
  const auto d = bose(21).design;
  const auto p = independent_pair(d, 5);
  CHECK_FALSE(p.exact);
  CHECK(is_independent(d, p.set_a));
  CHECK(is_independent(d, p.set_b));
  CHECK((to_mask(p.set_a) & to_mask(p.set_b)) == 0);
  CHECK(independent_pair(d, 5).set_a == p.set_a);
}

TEST_CASE("pair construction rejects bad input") {
  const auto d = catalog("STS7").design;
  CHECK_THROWS_AS(make_independent_pair(d, {0, 1}, {1, 2}), DesignError);
  CHECK_THROWS_AS(make_independent_pair(d, {0, 1, 6}, {2}), DesignError);
  const auto p = make_independent_pair(d, {2}, {0, 1});
  CHECK(p.set_a == std::vector<Point>{0, 1});
  CHECK(p.gamma == 2);
}

TEST_CASE("independence bounds") {
  const auto s9 = catalog("STS9").design;
  const auto b9 = indep_bounds(s9, 4);
  CHECK(b9.minsum_upper == 9);
  CHECK(b9.maxsum_lower == 3 * (9 - 1 - 4) + 3);
  CHECK(b9.diffsum_lower == 3 * (9 + 1 - 8));

  const auto b7 = indep_bounds(catalog("STS7").design, 3);
  CHECK(b7.diffsum_lower == 6);

  const auto b15 = indep_bounds(bose(15).design, 6);
  CHECK(b15.single_set_threshold == 6);
  CHECK(b15.single_set_met);
  CHECK_FALSE(indep_bounds(bose(15).design, 5).single_set_met);

  const auto pair = independent_pair(bose(15).design);
  const auto bp = indep_bounds(bose(15).design, 7, &pair);
  REQUIRE(bp.pair_diffsum_lower);
  CHECK(*bp.pair_diffsum_lower == 3 * (15 + 1 - 12));
  CHECK(bp.pair_threshold == 6);
  CHECK(bp.pair_met == true);
}

TEST_CASE("labelings from a pair meet their bounds") {
  SUBCASE("Bose fifteen") {
    const auto s = bose(15);
    const auto l = labeling_from_pair(s.design, s.independent_a, s.independent_b);
    const auto r = metric_report(s.design, l);
    CHECK(r.min_sum >= 9);
    CHECK(r.max_sum <= 32);
    CHECK(r.diff_sum <= 23);
    const auto b = pair_labeling_bounds(3, 15, 6, 6);
    CHECK(r.min_sum >= b.minsum_lower);
    CHECK(r.max_sum <= b.maxsum_upper);
  }
  SUBCASE("empty sets degenerate to the identity") {
    const auto d = catalog("STS7").design;
    CHECK(labeling_from_pair(d, {}, {}) == Labeling::identity(7));
    CHECK(pair_labeling_bounds(3, 7, 0, 0).minsum_lower == 3);
  }
  SUBCASE("overlap") { CHECK_THROWS_AS(labeling_from_pair(catalog("STS7").design, {0, 1}, {1}), DesignError); }
}

TEST_CASE("property: pair labelings respect the floor bounds and the alpha ceiling") {
  std::mt19937_64 rng(12);
  std::vector<Design> pool = {catalog("STS7").design, catalog("STS9").design, bose(15).design, skolem(19).design,
                              sw_complete_general(25).design, sum_class_packing({2, 17, 0})};
  for (int i = 0; i < 6; ++i) pool.push_back(random_ptp(9 + i, rng));
  for (const auto& d : pool) {
    const auto p = independent_pair(d, 1);
    const auto l = labeling_from_pair(d, p.set_a, p.set_b);
    const auto r = metric_report(d, l);
    const auto b = pair_labeling_bounds(d.k(), d.v(), p.gamma, p.delta);
    CHECK(r.min_sum >= b.minsum_lower);
    CHECK(r.max_sum <= b.maxsum_upper);
    CHECK(r.diff_sum <= b.diffsum_upper);
    const int alpha = static_cast<int>(max_independent_set(d).size());
    CHECK(r.min_sum <= 3LL * alpha - 3);
    // The alpha ceiling holds for every labeling, not just this one.
    for (int j = 0; j < 20; ++j) {
      const Labeling any(oracle::random_permutation(d.v(), rng));
      CHECK(metric_report(d, any).min_sum <= 3LL * alpha - 3);
    }
  }
}

TEST_CASE("the literal pair-labeling floor alpha + C(k,2) can fail") {
  // Two points of the bottom set plus the first middle rank: sum 0 + 1 + alpha.
  const auto d = Design::make(7, 2, 3, {{0, 1, 2}});
  const auto l = labeling_from_pair(d, {0, 1}, {});
  CHECK(metric_report(d, l).min_sum == 3);
  CHECK(metric_report(d, l).min_sum < 2 + 3);
  CHECK(pair_labeling_bounds(3, 7, 2, 0).minsum_lower == 3);
}
