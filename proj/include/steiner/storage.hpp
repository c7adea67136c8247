#pragma once

#include "steiner/design.hpp"
#include "steiner/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace steiner {

enum class ProfileKind { zipf, uniform, linear, custom };

std::string_view profile_kind_name(ProfileKind kind) noexcept;

/// Access weight per popularity rank; rank 0 is the most popular item.
struct AccessProfile {
  ProfileKind kind = ProfileKind::uniform;
  std::optional<double> exponent;  // zipf only
  std::vector<Rational> weights;   // nonnegative, nonincreasing in rank

  /// 1/(r+1)^s. Integer s is exact; other s is rounded to a multiple of 1e-9.
  static AccessProfile zipf(int v, double s);
  static AccessProfile uniform(int v);
  /// w(r) = v-1-r, the profile under which node loads mirror block rank sums.
  static AccessProfile linear(int v);
  /// Throws std::invalid_argument for negative or increasing weights.
  static AccessProfile custom(std::vector<Rational> weights);
};

/// "zipf:<s>", "uniform" or "linear". Throws std::invalid_argument otherwise.
AccessProfile parse_profile_spec(std::string_view spec, int v);

/// Access weight landing on each block (storage node).
struct LoadReport {
  std::vector<Rational> per_node_load;
  Rational max;
  Rational min;
  Rational spread;  // max - min
  Rational mean;
  Rational variance;  // population variance over nodes
  double coefficient_of_variation = 0.0;  // sqrt(variance) / mean, 0 when mean is 0
};

/// Throws DesignError for an empty design or mismatched sizes.
LoadReport access_load(const Design& design, const Labeling& labeling, const AccessProfile& profile);

inline constexpr std::uint64_t kFrcSubsetCap = 1'000'000;

/// Minimum number of distinct points covered by any read_k blocks. Throws
/// std::invalid_argument when C(b, read_k) exceeds kFrcSubsetCap or read_k is out of range.
int frc_rate(const Design& design, int read_k);

struct RecoveryReport {
  std::vector<int> stripes;  // blocks through each point
  bool uniform = false;
  std::optional<int> c;  // the common count when uniform
};

RecoveryReport recovery_uniformity(const Design& design);

}  // namespace steiner
