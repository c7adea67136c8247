#pragma once

#include "steiner/design.hpp"
#include "steiner/numtheory.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace steiner {

/// Raised when construction parameters fall outside a construction's domain.
class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sum-class packing parameters. `sigma` is either a raw class 0 <= sigma < v
/// or a signed class in [-C(t+2,2)+1, 0) which selects class v+sigma.
struct SumClassParams {
  int t = 2;
  int v = 0;
  int sigma = 0;
};

/// All (t+1)-subsets of Z_v whose element sum is congruent to sigma (mod v).
/// Requires gcd(v, t+1) = 1 and v > C(t+2,2) + C(t+1,2).
Design sum_class_packing(const SumClassParams& params);

/// Raw class enumeration without the parameter window checks (used by the
/// triple-system completions, which work over Z_{v-2}).
std::vector<Block> sum_class_blocks(int t, int v, int residue);

/// 3-(v,4,1) packing on {0..v-1} built from two sum conditions mod v/2.
/// Requires v even and v > 18.
Design fourpack(int v);

struct TypedBlock {
  Block points;
  int type = 0;  // 1, 2 or 3 as in the completion recipe
};

/// Output of the two triple-system completions.
struct Completion {
  Design design;
  Labeling labeling;  // identity
  std::vector<TypedBlock> typed_blocks;
  FactorSplit factors;
};

/// Completes the sum-class triple packing over Z_{v-2} to an STS(v) with two
/// added points. Requires v ≡ 1,3 (mod 6), v >= 3 and swc_condition(v).
Completion sw_complete_special(int v);

/// Completion with three added points that works for every v ≡ 1,3 (mod 6), v >= 7.
Completion sw_complete_general(int v);

/// A triple system together with two disjoint independent point sets.
struct TripleSystem {
  Design design;
  std::vector<Point> independent_a;
  std::vector<Point> independent_b;
};

/// Bose construction for v ≡ 3 (mod 6). Point (x, i) of Z_n × Z_3 is x + n·i, n = v/3.
TripleSystem bose(int v);

/// Skolem construction for v ≡ 1 (mod 6) via the half-idempotent commutative
/// quasigroup on Z_{2n}, n = (v-1)/6. Point (x, i) is x + 2n·i; the extra point is v-1.
TripleSystem skolem(int v);

struct CatalogEntry {
  Design design;
  Labeling labeling;
};

/// "STS7", "STS9" or "S348". Throws ConstructionError for other names.
CatalogEntry catalog(const std::string& name);

}  // namespace steiner
