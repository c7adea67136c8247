#include "steiner/constructions.hpp"

#include "steiner/metrics.hpp"
#include "steiner/rational.hpp"

#include <algorithm>
#include <numeric>

namespace steiner {

namespace {

int mod(long long a, int m) {
  long long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

std::vector<Block> digits_to_blocks(std::initializer_list<const char*> rows) {
  std::vector<Block> out;
  for (const char* row : rows) {
    Block b;
    for (const char* c = row; *c; ++c) b.push_back(*c - '0');
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace

std::vector<Block> sum_class_blocks(int t, int v, int residue) {
  std::vector<Block> out;
  if (t < 1 || v < t + 1) return out;
  // Enumerate t-subsets; the residue fixes the remaining element, which is
  // kept only when it exceeds the subset's maximum so each block appears once.
  std::vector<int> idx(static_cast<std::size_t>(t));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    long long s = std::accumulate(idx.begin(), idx.end(), 0LL);
    const int last = mod(residue - s, v);
    if (last > idx.back()) {
      Block b(idx.begin(), idx.end());
      b.push_back(last);
      out.push_back(std::move(b));
    }
    int i = t - 1;
    while (i >= 0 && idx[i] == v - t + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

Design sum_class_packing(const SumClassParams& p) {
  const int t = p.t, v = p.v;
  if (t < 1) throw ConstructionError("sum-class packing needs t >= 1");
  if (std::gcd(v, t + 1) != 1)
    throw ConstructionError("sum-class packing needs gcd(v, t+1) = 1; got v=" + std::to_string(v) +
                            ", t=" + std::to_string(t));
  const long long min_v = binomial_u64(t + 2, 2) + binomial_u64(t + 1, 2);
  if (v <= min_v)
    throw ConstructionError("sum-class packing needs v > C(t+2,2) + C(t+1,2) = " + std::to_string(min_v));
  const long long lowest = 1 - static_cast<long long>(binomial_u64(t + 2, 2));
  if (p.sigma < lowest || p.sigma >= v)
    throw ConstructionError("sigma must lie in [" + std::to_string(lowest) + ", " + std::to_string(v - 1) + "]");
  const int residue = p.sigma < 0 ? v + p.sigma : p.sigma;
  return Design::make(v, t, t + 1, sum_class_blocks(t, v, residue));
}

Design fourpack(int v) {
  if (v % 2 != 0 || v <= 18) throw ConstructionError("fourpack needs v even and v > 18, got " + std::to_string(v));
  const int s = v / 2;
  std::vector<Block> blocks;
  for (int a = 0; a < s; ++a)
    for (int b = a + 1; b < s; ++b)
      for (int c = b + 1; c < s; ++c) {
        const int d1 = mod(2 - a - b - c, s);
        blocks.push_back({a, b, c, s + d1});
        const int d2 = mod(s - 6 - a - b - c, s);
        blocks.push_back({s + a, s + b, s + c, d2});
      }
  return Design::make(v, 3, 4, std::move(blocks));
}

Completion sw_complete_special(int v) {
  if (!is_sts_order(v)) throw ConstructionError("v=" + std::to_string(v) + " is not ≡ 1,3 (mod 6)");
  if (!swc_condition(v))
    throw ConstructionError("v=" + std::to_string(v) +
                            ": -2 lacks singly even order modulo some prime divisor of v-2; use sw-general");
  const int n = v - 2;
  const int half = (v - 3) / 2;
  auto phi = [&](int x) { return x <= half ? x : x + 2; };

  Completion out;
  out.factors = split_two_factors(neg2_cycles(n));
  for (const auto& b : sum_class_blocks(2, n, 0)) out.typed_blocks.push_back({{phi(b[0]), phi(b[1]), phi(b[2])}, 1});
  for (int i = 1; i <= 2; ++i) {
    const int extra = (v - 3 + 2 * i) / 2;
    for (const auto& [x, y] : out.factors.factors[static_cast<std::size_t>(i - 1)])
      out.typed_blocks.push_back({{extra, phi(x), phi(y)}, 2});
  }
  out.typed_blocks.push_back({{0, (v - 1) / 2, (v + 1) / 2}, 3});

  std::vector<Block> blocks;
  for (auto& tb : out.typed_blocks) {
    std::sort(tb.points.begin(), tb.points.end());
    blocks.push_back(tb.points);
  }
  out.design = Design::make(v, 2, 3, std::move(blocks));
  out.labeling = Labeling::identity(v);
  return out;
}

Completion sw_complete_general(int v) {
  if (!is_sts_order(v) || v < 7)
    throw ConstructionError("v=" + std::to_string(v) + " is not ≡ 1,3 (mod 6) with v >= 7");
  const int n = v - 2;
  const int half = (v - 3) / 2;
  auto psi = [&](int x) { return x <= half ? x - 1 : x + 2; };

  std::vector<Edge> graph;
  for (int x = 1; x < n; ++x) {
    const int y = mod(-2LL * x, n);
    if (x < y) graph.emplace_back(x, y);
    else graph.emplace_back(y, x);
  }
  std::sort(graph.begin(), graph.end());
  graph.erase(std::unique(graph.begin(), graph.end()), graph.end());
  for (int x = 1; x <= half; ++x) graph.emplace_back(x, n - x);

  Completion out;
  out.factors = cubic_one_factorization(graph);
  for (const auto& b : sum_class_blocks(2, n, 0)) {
    if (b[0] == 0) continue;  // triples {0, x, n-x} are dropped with point 0
    out.typed_blocks.push_back({{psi(b[0]), psi(b[1]), psi(b[2])}, 1});
  }
  for (int i = 1; i <= 3; ++i) {
    const int extra = (v - 5 + 2 * i) / 2;
    for (const auto& [x, y] : out.factors.factors[static_cast<std::size_t>(i - 1)])
      out.typed_blocks.push_back({{extra, psi(x), psi(y)}, 2});
  }
  out.typed_blocks.push_back({{(v - 3) / 2, (v - 1) / 2, (v + 1) / 2}, 3});

  std::vector<Block> blocks;
  for (auto& tb : out.typed_blocks) {
    std::sort(tb.points.begin(), tb.points.end());
    blocks.push_back(tb.points);
  }
  out.design = Design::make(v, 2, 3, std::move(blocks));
  out.labeling = Labeling::identity(v);
  return out;
}

TripleSystem bose(int v) {
  if (v % 6 != 3 || v < 9) throw ConstructionError("bose needs v ≡ 3 (mod 6), v >= 9; got " + std::to_string(v));
  const int n = v / 3;
  const int inv2 = (n + 1) / 2;
  auto op = [&](int x, int y) { return static_cast<int>((static_cast<long long>(x + y) * inv2) % n); };
  auto pt = [&](int x, int i) { return x + n * (i % 3); };

  std::vector<Block> blocks;
  for (int x = 0; x < n; ++x) blocks.push_back({pt(x, 0), pt(x, 1), pt(x, 2)});
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int i = 0; i < 3; ++i) blocks.push_back({pt(x, i), pt(y, i), pt(op(x, y), i + 1)});

  TripleSystem out;
  out.design = Design::make(v, 2, 3, std::move(blocks));
  // Level 0 plus (0,2); level 2 without (0,2) plus two level-1 points whose product is 0.
  for (int x = 0; x < n; ++x) out.independent_a.push_back(pt(x, 0));
  out.independent_a.push_back(pt(0, 2));
  for (int x = 1; x < n; ++x) out.independent_b.push_back(pt(x, 2));
  out.independent_b.push_back(pt(1, 1));
  out.independent_b.push_back(pt(n - 1, 1));
  std::sort(out.independent_a.begin(), out.independent_a.end());
  std::sort(out.independent_b.begin(), out.independent_b.end());
  return out;
}

TripleSystem skolem(int v) {
  if (v % 6 != 1 || v < 7) throw ConstructionError("skolem needs v ≡ 1 (mod 6), v >= 7; got " + std::to_string(v));
  const int n = (v - 1) / 6;
  const int m = 2 * n;
  // Relabel the addition table of Z_{2n}: 2i -> i, 2i+1 -> n+i.
  auto op = [&](int x, int y) {
    const int z = (x + y) % m;
    return z % 2 == 0 ? z / 2 : n + (z - 1) / 2;
  };
  auto pt = [&](int x, int i) { return x + m * (i % 3); };
  const int inf = v - 1;

  std::vector<Block> blocks;
  for (int x = 0; x < n; ++x) blocks.push_back({pt(x, 0), pt(x, 1), pt(x, 2)});
  for (int x = 0; x < n; ++x)
    for (int i = 0; i < 3; ++i) blocks.push_back({inf, pt(x + n, i), pt(x, i + 1)});
  for (int x = 0; x < m; ++x)
    for (int y = x + 1; y < m; ++y)
      for (int i = 0; i < 3; ++i) blocks.push_back({pt(x, i), pt(y, i), pt(op(x, y), i + 1)});

  TripleSystem out;
  out.design = Design::make(v, 2, 3, std::move(blocks));
  for (int x = 0; x < m; ++x) out.independent_a.push_back(pt(x, 0));
  out.independent_a.push_back(inf);
  out.independent_a.push_back(pt(0, 2));
  for (int x = 1; x < m; ++x) out.independent_b.push_back(pt(x, 2));
  if (n >= 2) {
    out.independent_b.push_back(pt(1, 1));
    out.independent_b.push_back(pt(m - 1, 1));
  } else {
    out.independent_b.push_back(pt(0, 1));
  }
  std::sort(out.independent_a.begin(), out.independent_a.end());
  std::sort(out.independent_b.begin(), out.independent_b.end());
  return out;
}

CatalogEntry catalog(const std::string& name) {
  CatalogEntry e;
  if (name == "STS7") {
    e.design = Design::make(7, 2, 3, digits_to_blocks({"016", "024", "035", "123", "145", "256", "346"}));
  } else if (name == "STS9") {
    e.design = Design::make(9, 2, 3,
                            digits_to_blocks({"018", "027", "036", "045", "126", "135", "147", "234", "258", "378",
                                              "468", "567"}));
  } else if (name == "S348") {
    e.design = Design::make(8, 3, 4,
                            digits_to_blocks({"0127", "0136", "0145", "0235", "0246", "0347", "0567", "1234", "1256",
                                              "1357", "1467", "2367", "2457", "3456"}));
  } else {
    throw ConstructionError("unknown catalog entry '" + name + "' (known: STS7, STS9, S348)");
  }
  e.labeling = Labeling::identity(e.design.v());
  return e;
}

}  // namespace steiner
