#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "../oracles.hpp"
#include "steiner/constructions.hpp"
#include "steiner/design.hpp"

#include <random>

using namespace steiner;

namespace {

const std::vector<Block> kFano = {{0, 1, 6}, {0, 2, 4}, {0, 3, 5}, {1, 2, 3}, {1, 4, 5}, {2, 5, 6}, {3, 4, 6}};

}  // namespace

TEST_CASE("validate recognises the seven-point triple system") {
  const auto d = Design::make(7, 2, 3, kFano);
  const auto s = validate(d);
  CHECK(s.is_packing);
  CHECK(s.is_steiner);
  CHECK(s.uncovered_t_subsets == 0);
  CHECK(s.block_count == 7);
  CHECK(s.replication == std::vector<int>(7, 3));
  CHECK_FALSE(s.repeated_t_subset);
}

TEST_CASE("validate reports a pair covered twice") {
  const auto d = Design::make(4, 2, 3, {{0, 1, 2}, {0, 1, 3}});
  const auto s = validate(d);
  CHECK_FALSE(s.is_packing);
  CHECK_FALSE(s.is_steiner);
  REQUIRE(s.repeated_t_subset);
  CHECK(*s.repeated_t_subset == std::vector<Point>{0, 1});
  REQUIRE(s.conflicting_blocks);
  CHECK(s.conflicting_blocks->first == 0);
  CHECK(s.conflicting_blocks->second == 1);
}

TEST_CASE("sum-class zero on Z_11 is a partial triple system with 15 blocks") {
  const auto d = sum_class_packing({2, 11, 0});
  const auto s = validate(d);
  const auto o = oracle::coverage(d.blocks(), 11, 2);
  CHECK(s.is_packing == o.packing);
  CHECK(s.is_steiner == o.steiner);
  CHECK(s.uncovered_t_subsets == o.uncovered);
  CHECK(s.is_packing);
  CHECK_FALSE(s.is_steiner);
  CHECK(s.block_count == 15);
}

TEST_CASE("structural errors are rejected at construction") {
  CHECK_THROWS_AS(Design::make(7, 2, 3, {{0, 1}}), DesignError);
  CHECK_THROWS_AS(Design::make(7, 2, 3, {{0, 1, 7}}), DesignError);
  CHECK_THROWS_AS(Design::make(7, 2, 3, {{0, 1, 1}}), DesignError);
  CHECK_THROWS_AS(Design::make(7, 2, 3, {{0, 1, 2}, {2, 1, 0}}), DesignError);
  CHECK_THROWS_AS(Design::make(7, 3, 3, {}), DesignError);
  CHECK_THROWS_WITH_AS(Design::make(7, 2, 3, {{0, 1, 9}}), doctest::Contains("{0,1,9}"), DesignError);
}

TEST_CASE("blocks are stored canonically") {
  const auto d = Design::make(7, 2, 3, {{6, 4, 3}, {3, 2, 1}, {6, 1, 0}});
  CHECK(d.blocks() == std::vector<Block>{{0, 1, 6}, {1, 2, 3}, {3, 4, 6}});
}

TEST_CASE("reverse maps rank r to v-1-r") {
  CHECK(reverse(Labeling::identity(7)).ranks() == std::vector<int>{6, 5, 4, 3, 2, 1, 0});
  CHECK(reverse(Labeling::identity(9)).ranks() == std::vector<int>{8, 7, 6, 5, 4, 3, 2, 1, 0});
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const Labeling l(oracle::random_permutation(11, rng));
    CHECK(reverse(reverse(l)) == l);
  }
}

TEST_CASE("labelings must be permutations") {
  CHECK_THROWS_AS(Labeling(std::vector<int>{0, 0, 1}), DesignError);
  CHECK_THROWS_AS(Labeling(std::vector<int>{0, 3, 1}), DesignError);
  CHECK_NOTHROW(Labeling(std::vector<int>{2, 0, 1}));
}

TEST_CASE("design file round trip") {
  const std::string text = "7 2 3 7\n0 1 6\n0 2 4\n0 3 5\n1 2 3\n1 4 5\n2 5 6\n3 4 6\n";
  const auto d = read_design(text);
  CHECK(d == Design::make(7, 2, 3, kFano));
  CHECK(write_design(d) == text);
  CHECK(read_design(write_design(d)) == d);
}

TEST_CASE("non-canonical files are canonicalised") {
  const auto d = read_design("# comment\n\n7 2 3 3\n6 1 0\n3 2 1\n4 6 3\n");
  CHECK(write_design(d) == "7 2 3 3\n0 1 6\n1 2 3\n3 4 6\n");
}

TEST_CASE("construction comments survive a round trip") {
  const auto d = Design::make(7, 2, 3, kFano);
  const auto text = write_design(d, "catalog entry=STS7");
  const auto f = read_design_file(text);
  REQUIRE(f.construction);
  CHECK(*f.construction == "catalog entry=STS7");
  CHECK(f.design == d);
}

TEST_CASE("parse errors carry line numbers") {
  SUBCASE("block count short of header") {
    std::string text = "7 2 3 8\n0 1 6\n0 2 4\n0 3 5\n1 2 3\n1 4 5\n2 5 6\n3 4 6\n";
    CHECK_THROWS_AS(read_design(text), ParseError);
  }
  SUBCASE("wrong block size") {
    try {
      read_design("7 2 3 2\n0 1 6\n0 2\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
  }
  SUBCASE("point out of range") {
    try {
      read_design("# header follows\n7 2 3 1\n0 1 7\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
  }
  SUBCASE("garbage token") { CHECK_THROWS_AS(read_design("7 2 3 1\n0 x 2\n"), ParseError); }
  SUBCASE("missing header") { CHECK_THROWS_AS(read_design("# nothing\n"), ParseError); }
  SUBCASE("labeling not a permutation") { CHECK_THROWS_AS(read_labeling("0 1 1\n"), ParseError); }
}

TEST_CASE("labeling file round trip") {
  const Labeling l(std::vector<int>{3, 0, 2, 1});
  CHECK(read_labeling(write_labeling(l)) == l);
}

TEST_CASE("property: is_steiner iff full block count and nothing uncovered") {
  std::mt19937_64 rng(11);
  std::vector<Design> pool = {catalog("STS7").design, catalog("STS9").design, catalog("S348").design};
  // Corrupt one point of one block at random.
  for (int round = 0; round < 60; ++round) {
    const auto& base = pool[static_cast<std::size_t>(round % 3)];
    auto blocks = base.blocks();
    auto& b = blocks[rng() % blocks.size()];
    const int pos = static_cast<int>(rng() % b.size());
    const int np = static_cast<int>(rng() % static_cast<std::uint64_t>(base.v()));
    if (std::find(b.begin(), b.end(), np) != b.end()) continue;
    b[static_cast<std::size_t>(pos)] = np;
    std::sort(b.begin(), b.end());
    Design d;
    try {
      d = Design::make(base.v(), base.t(), base.k(), blocks);
    } catch (const DesignError&) {
      continue;  // duplicated block
    }
    const auto s = validate(d);
    const auto o = oracle::coverage(d.blocks(), d.v(), d.t());
    CHECK(s.is_packing == o.packing);
    CHECK(s.is_steiner == o.steiner);
    CHECK(s.uncovered_t_subsets == o.uncovered);
    const bool full = steiner_block_count(d.v(), d.t(), d.k()) == d.block_count();
    CHECK(s.is_steiner == (full && s.uncovered_t_subsets == 0));
  }
  for (const auto& d : pool) {
    const auto s = validate(d);
    CHECK(s.is_steiner);
    const auto r = steiner_replication(d.v(), d.t(), d.k());
    REQUIRE(r);
    for (int x : s.replication) CHECK(x == static_cast<int>(*r));
  }
}

TEST_CASE("Steiner counts") {
  CHECK(steiner_block_count(7, 2, 3) == 7u);
  CHECK(steiner_block_count(8, 3, 4) == 14u);
  CHECK_FALSE(steiner_block_count(8, 2, 3));
  CHECK(steiner_replication(9, 2, 3) == 4u);
  CHECK(steiner_replication(8, 3, 4) == 7u);
}

TEST_CASE("is_independent") {
  const auto d = Design::make(7, 2, 3, kFano);
  const std::vector<Point> line{0, 1, 6};
  const std::vector<Point> oval{0, 1, 2};
  CHECK_FALSE(is_independent(d, line));
  CHECK(is_independent(d, oval));
}
