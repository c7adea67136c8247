#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

namespace steiner {

using Edge = std::pair<int, int>;  // stored with first < second

/// Edge-disjoint perfect matchings whose union is source_graph.
struct FactorSplit {
  std::vector<std::vector<Edge>> factors;
  std::vector<Edge> source_graph;
};

/// Raised when a split into 1-factors cannot exist for the given input.
class FactorizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_prime(long long n) noexcept;
std::vector<long long> prime_divisors(long long n);

/// Multiplicative order of -2 modulo an odd prime p. Throws std::invalid_argument otherwise.
long long order_of_minus2(long long p);

/// n ≡ 2 (mod 4).
bool is_singly_even(long long n) noexcept;

/// For v ≡ 1,3 (mod 6): true iff -2 has singly even order modulo every prime dividing v-2.
bool swc_condition(long long v);

/// Cycles of x -> -2x (mod n) on Z_n \ {0}, each starting at its smallest element,
/// cycles ordered by that element. n must be odd and prime to 3.
std::vector<std::vector<int>> neg2_cycles(int n);

/// Alternately assigns the edges of each (even) cycle to two factors, starting
/// with the edge leaving the cycle's minimum. Throws FactorizationError on an odd cycle.
FactorSplit split_two_factors(const std::vector<std::vector<int>>& cycles);

/// Proper 3-edge-colouring of a simple cubic graph by backtracking; the first
/// canonical edge is pinned to factor 0. Throws FactorizationError if the graph
/// is not cubic or has no 1-factorization.
FactorSplit cubic_one_factorization(std::vector<Edge> edges);

/// Checks the FactorSplit invariants: disjoint factors, union = source graph,
/// each factor a perfect matching on the source graph's vertex set.
bool is_valid_factor_split(const FactorSplit& split);

}  // namespace steiner
