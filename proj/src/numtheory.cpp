#include "steiner/numtheory.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

namespace steiner {

bool is_prime(long long n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (long long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<long long> prime_divisors(long long n) {
  std::vector<long long> out;
  if (n < 0) n = -n;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

long long order_of_minus2(long long p) {
  if (p == 2 || !is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not an odd prime");
  const long long g = p - 2;
  long long x = g % p, order = 1;
  while (x != 1) {
    x = (x * g) % p;
    ++order;
  }
  return order;
}

bool is_singly_even(long long n) noexcept { return n % 4 == 2 || n % 4 == -2; }

bool swc_condition(long long v) {
  for (long long p : prime_divisors(v - 2))
    if (!is_singly_even(order_of_minus2(p))) return false;
  return true;
}

std::vector<std::vector<int>> neg2_cycles(int n) {
  if (n < 1 || n % 2 == 0 || n % 3 == 0)
    throw std::invalid_argument("neg2_cycles needs n odd and prime to 3, got " + std::to_string(n));
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> cycles;
  for (int start = 1; start < n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cyc;
    int x = start;
    while (!seen[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = 1;
      cyc.push_back(x);
      x = static_cast<int>((2LL * (n - x)) % n);
    }
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

namespace {
Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }
}  // namespace

FactorSplit split_two_factors(const std::vector<std::vector<int>>& cycles) {
  FactorSplit split;
  split.factors.resize(2);
  for (const auto& cyc : cycles) {
    if (cyc.size() % 2 != 0)
      throw FactorizationError("cycle of odd length " + std::to_string(cyc.size()) +
                               " starting at " + std::to_string(cyc.empty() ? 0 : cyc.front()) +
                               ": -2 does not have singly even order modulo every prime divisor");
    // Rotate so the alternation starts at the cycle minimum.
    auto min_it = std::min_element(cyc.begin(), cyc.end());
    std::vector<int> c(cyc.begin(), cyc.end());
    std::rotate(c.begin(), c.begin() + (min_it - cyc.begin()), c.end());
    for (std::size_t i = 0; i < c.size(); ++i) {
      Edge e = make_edge(c[i], c[(i + 1) % c.size()]);
      split.factors[i % 2].push_back(e);
      split.source_graph.push_back(e);
    }
  }
  for (auto& f : split.factors) std::sort(f.begin(), f.end());
  std::sort(split.source_graph.begin(), split.source_graph.end());
  return split;
}

namespace {

struct EdgeColouring {
  std::vector<std::pair<std::size_t, std::size_t>> ends;  // compressed vertex ids
  std::vector<unsigned> used;                              // colour mask per vertex
  std::vector<int> colour;                                 // -1 = uncoloured

  unsigned available(std::size_t e) const {
    return ~(used[ends[e].first] | used[ends[e].second]) & 7u;
  }

  void assign(std::size_t e, int c) {
    colour[e] = c;
    used[ends[e].first] |= 1u << c;
    used[ends[e].second] |= 1u << c;
  }

  void unassign(std::size_t e) {
    const int c = colour[e];
    colour[e] = -1;
    used[ends[e].first] &= ~(1u << c);
    used[ends[e].second] &= ~(1u << c);
  }

  // Most constrained uncoloured edge, ties to the lowest canonical index.
  bool solve(std::size_t remaining) {
    if (remaining == 0) return true;
    std::size_t best = ends.size();
    int best_count = 4;
    for (std::size_t e = 0; e < ends.size(); ++e) {
      if (colour[e] >= 0) continue;
      const int cnt = std::popcount(available(e));
      if (cnt == 0) return false;
      if (cnt < best_count) {
        best_count = cnt;
        best = e;
      }
    }
    const unsigned avail = available(best);
    for (int c = 0; c < 3; ++c) {
      if (!(avail & (1u << c))) continue;
      assign(best, c);
      if (solve(remaining - 1)) return true;
      unassign(best);
    }
    return false;
  }
};

}  // namespace

FactorSplit cubic_one_factorization(std::vector<Edge> edges) {
  for (auto& e : edges) {
    if (e.first == e.second) throw FactorizationError("graph has a loop at " + std::to_string(e.first));
    e = make_edge(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw FactorizationError("graph has a repeated edge");

  std::map<int, std::size_t> index;
  std::vector<int> degree;
  for (const auto& [a, b] : edges)
    for (int x : {a, b}) {
      auto [it, inserted] = index.emplace(x, degree.size());
      if (inserted) degree.push_back(0);
      ++degree[it->second];
    }
  for (const auto& [vertex, id] : index)
    if (degree[id] != 3)
      throw FactorizationError("graph is not cubic: vertex " + std::to_string(vertex) + " has degree " +
                               std::to_string(degree[id]));

  EdgeColouring ec;
  ec.used.assign(degree.size(), 0);
  ec.colour.assign(edges.size(), -1);
  for (const auto& [a, b] : edges) ec.ends.emplace_back(index[a], index[b]);

  FactorSplit split;
  split.source_graph = edges;
  split.factors.resize(3);
  if (edges.empty()) return split;

  ec.assign(0, 0);
  if (!ec.solve(edges.size() - 1)) throw FactorizationError("graph has no 1-factorization");
  for (std::size_t e = 0; e < edges.size(); ++e) split.factors[static_cast<std::size_t>(ec.colour[e])].push_back(edges[e]);
  return split;
}

bool is_valid_factor_split(const FactorSplit& split) {
  std::map<int, int> vertex_degree;
  for (const auto& [a, b] : split.source_graph) {
    ++vertex_degree[a];
    ++vertex_degree[b];
  }
  std::vector<Edge> all;
  for (const auto& f : split.factors) {
    std::map<int, int> touched;
    for (const auto& [a, b] : f) {
      if (++touched[a] > 1 || ++touched[b] > 1) return false;
      all.push_back(make_edge(a, b));
    }
    if (touched.size() != vertex_degree.size()) return false;
    for (const auto& [x, cnt] : touched)
      if (!vertex_degree.count(x)) return false;
  }
  std::vector<Edge> src = split.source_graph;
  for (auto& e : src) e = make_edge(e.first, e.second);
  std::sort(all.begin(), all.end());
  std::sort(src.begin(), src.end());
  return all == src;
}

}  // namespace steiner
