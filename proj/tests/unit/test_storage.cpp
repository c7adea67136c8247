#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "../oracles.hpp"
#include "steiner/constructions.hpp"
#include "steiner/independence.hpp"
#include "steiner/metrics.hpp"
#include "steiner/storage.hpp"

#include <random>

using namespace steiner;

namespace {

std::vector<Design> steiner_pool() {
  return {catalog("STS7").design, catalog("STS9").design, catalog("S348").design, bose(15).design,
          skolem(19).design,      sw_complete_general(25).design, sw_complete_special(25).design};
}

}  // namespace

TEST_CASE("profiles") {
  const auto z = AccessProfile::zipf(4, 1.0);
  CHECK(z.weights == std::vector<Rational>{1, make_rational(1, 2), make_rational(1, 3), make_rational(1, 4)});
  const auto z2 = AccessProfile::zipf(3, 2.0);
  CHECK(z2.weights[2] == make_rational(1, 9));
  const auto zh = AccessProfile::zipf(3, 0.5);
  CHECK(abs(to_double(zh.weights[1]) - 1.0 / std::sqrt(2.0)) < 1e-9);
  CHECK(AccessProfile::uniform(3).weights == std::vector<Rational>{1, 1, 1});
  CHECK(AccessProfile::linear(3).weights == std::vector<Rational>{2, 1, 0});
  CHECK_THROWS_AS(AccessProfile::custom({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(AccessProfile::custom({1, -1}), std::invalid_argument);
  CHECK(parse_profile_spec("zipf:1", 5).kind == ProfileKind::zipf);
  CHECK(parse_profile_spec("linear", 5).weights.size() == 5);
  CHECK_THROWS_AS(parse_profile_spec("pareto", 5), std::invalid_argument);
  CHECK_THROWS_AS(parse_profile_spec("zipf:x", 5), std::invalid_argument);
}

TEST_CASE("uniform loads are equal on Steiner systems") {
  for (const auto& d : steiner_pool()) {
    const auto rep = access_load(d, Labeling::identity(d.v()), AccessProfile::uniform(d.v()));
    CHECK(rep.spread == 0);
    CHECK(rep.max == d.k());
    CHECK(rep.variance == 0);
    CHECK(rep.coefficient_of_variation == 0.0);
  }
}

TEST_CASE("linear spread equals DiffSum") {
  const auto s9 = catalog("STS9");
  const auto rep = access_load(s9.design, s9.labeling, AccessProfile::linear(9));
  CHECK(rep.spread == 9);
  std::mt19937_64 rng(1);
  for (const auto& d : steiner_pool()) {
    for (int i = 0; i < 5; ++i) {
      const Labeling l(oracle::random_permutation(d.v(), rng));
      const auto lr = access_load(d, l, AccessProfile::linear(d.v()));
      CHECK(lr.spread == metric_report(d, l).diff_sum);
      CHECK(lr.spread == metric_report(d, reverse(l)).diff_sum);
      CHECK(lr.max == static_cast<long long>(d.k()) * (d.v() - 1) - metric_report(d, l).min_sum);
    }
  }
}

TEST_CASE("property: load conservation") {
  std::mt19937_64 rng(2);
  std::vector<Design> pool = steiner_pool();
  pool.push_back(sum_class_packing({2, 11, 0}));
  pool.push_back(fourpack(20));
  for (const auto& d : pool) {
    const Labeling l(oracle::random_permutation(d.v(), rng));
    const auto prof = AccessProfile::zipf(d.v(), 1.0);
    const auto rep = access_load(d, l, prof);
    Rational total = 0;
    for (const auto& x : rep.per_node_load) total += x;
    const auto rec = recovery_uniformity(d);
    Rational expect = 0;
    for (int p = 0; p < d.v(); ++p)
      expect += rec.stripes[static_cast<std::size_t>(p)] * prof.weights[static_cast<std::size_t>(l[p])];
    CHECK(total == expect);
    CHECK(rep.spread == rep.max - rep.min);
    CHECK(rep.mean * static_cast<long long>(d.block_count()) == total);
  }
}

TEST_CASE("pair labeling spreads Zipf load no worse than the identity on Bose fifteen") {
  const auto s = bose(15);
  const auto pair = independent_pair(s.design);
  const auto lp = labeling_from_pair(s.design, pair.set_a, pair.set_b);
  const auto prof = AccessProfile::zipf(15, 1.0);
  const auto cp = access_load(s.design, lp, prof).coefficient_of_variation;
  const auto ci = access_load(s.design, Labeling::identity(15), prof).coefficient_of_variation;
  CHECK(cp <= ci);
}

TEST_CASE("FRC rate") {
  const auto s7 = catalog("STS7").design;
  CHECK(frc_rate(s7, 2) == 5);
  CHECK(frc_rate(s7, 1) == 3);
  const auto s9 = catalog("STS9").design;
  CHECK(frc_rate(s9, 3) == oracle::frc_rate(s9.blocks(), 3));
  std::vector<Design> pool = {s7, s9, catalog("S348").design, bose(15).design, sum_class_packing({2, 11, 3})};
  for (const auto& d : pool)
    for (int r = 1; r <= 4; ++r) {
      const int f = frc_rate(d, r);
      CHECK(f == oracle::frc_rate(d.blocks(), r));
      CHECK(f >= d.k());
      CHECK(f <= std::min(d.v(), d.k() * r));
    }
  CHECK_THROWS_AS(frc_rate(sw_complete_general(61).design, 4), std::invalid_argument);
  CHECK_THROWS_AS(frc_rate(s7, 0), std::invalid_argument);
  CHECK_THROWS_AS(frc_rate(s7, 8), std::invalid_argument);
}

TEST_CASE("recovery uniformity") {
  for (const auto& d : steiner_pool()) {
    const auto r = recovery_uniformity(d);
    CHECK(r.uniform);
    REQUIRE(r.c);
    CHECK(*r.c == static_cast<int>(*steiner_replication(d.v(), d.t(), d.k())));
    if (d.t() == 2) CHECK(*r.c == (d.v() - 1) / 2);
  }
  const auto s8 = recovery_uniformity(catalog("S348").design);
  CHECK(s8.c == 7);
  const auto sc = sum_class_packing({2, 11, 0});
  const auto rc = recovery_uniformity(sc);
  for (int p = 0; p < 11; ++p) {
    int n = 0;
    for (const auto& b : sc.blocks()) n += std::count(b.begin(), b.end(), p) > 0;
    CHECK(rc.stripes[static_cast<std::size_t>(p)] == n);
  }
  CHECK(rc.uniform == (rc.c.has_value()));
}

TEST_CASE("load errors") {
  CHECK_THROWS_AS(access_load(Design::make(7, 2, 3, {}), Labeling::identity(7), AccessProfile::uniform(7)),
                  DesignError);
  CHECK_THROWS_AS(access_load(catalog("STS7").design, Labeling::identity(7), AccessProfile::uniform(6)), DesignError);
}
