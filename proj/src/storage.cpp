#include "steiner/storage.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <cmath>
#include <stdexcept>

namespace steiner {

std::string_view profile_kind_name(ProfileKind kind) noexcept {
  switch (kind) {
    case ProfileKind::zipf:
      return "zipf";
    case ProfileKind::linear:
      return "linear";
    case ProfileKind::custom:
      return "custom";
    case ProfileKind::uniform:
      break;
  }
  return "uniform";
}

namespace {

void require_size(int v) {
  if (v < 1) throw std::invalid_argument("profile needs v >= 1");
}

}  // namespace

AccessProfile AccessProfile::zipf(int v, double s) {
  require_size(v);
  if (!std::isfinite(s) || s < 0) throw std::invalid_argument("zipf exponent must be finite and nonnegative");
  AccessProfile p;
  p.kind = ProfileKind::zipf;
  p.exponent = s;
  const bool integral = s == std::floor(s) && s <= 64;
  for (int r = 0; r < v; ++r) {
    if (integral) {
      p.weights.emplace_back(BigInt(1), boost::multiprecision::pow(BigInt(r + 1), static_cast<unsigned>(s)));
    } else {
      constexpr long long kScale = 1'000'000'000;
      const auto scaled = std::llround(std::pow(static_cast<double>(r + 1), -s) * kScale);
      p.weights.push_back(make_rational(scaled, kScale));
    }
  }
  return p;
}

AccessProfile AccessProfile::uniform(int v) {
  require_size(v);
  AccessProfile p;
  p.kind = ProfileKind::uniform;
  p.weights.assign(static_cast<std::size_t>(v), Rational(1));
  return p;
}

AccessProfile AccessProfile::linear(int v) {
  require_size(v);
  AccessProfile p;
  p.kind = ProfileKind::linear;
  for (int r = 0; r < v; ++r) p.weights.emplace_back(v - 1 - r);
  return p;
}

AccessProfile AccessProfile::custom(std::vector<Rational> weights) {
  for (std::size_t r = 0; r < weights.size(); ++r) {
    if (weights[r] < 0) throw std::invalid_argument("weight of rank " + std::to_string(r) + " is negative");
    if (r > 0 && weights[r] > weights[r - 1])
      throw std::invalid_argument("weights must be nonincreasing in rank; rank " + std::to_string(r) +
                                  " exceeds rank " + std::to_string(r - 1));
  }
  AccessProfile p;
  p.kind = ProfileKind::custom;
  p.weights = std::move(weights);
  return p;
}

AccessProfile parse_profile_spec(std::string_view spec, int v) {
  if (spec == "uniform") return AccessProfile::uniform(v);
  if (spec == "linear") return AccessProfile::linear(v);
  if (spec.substr(0, 5) == "zipf:") {
    const std::string num(spec.substr(5));
    std::size_t used = 0;
    double s = 0;
    try {
      s = std::stod(num, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != num.size()) throw std::invalid_argument("bad zipf exponent '" + num + "'");
    return AccessProfile::zipf(v, s);
  }
  throw std::invalid_argument("unknown profile '" + std::string(spec) + "' (expected zipf:<s>, uniform or linear)");
}

LoadReport access_load(const Design& design, const Labeling& labeling, const AccessProfile& profile) {
  if (design.empty()) throw DesignError("load is undefined for a design without blocks");
  if (labeling.size() != design.v()) throw DesignError("labeling size differs from v");
  if (profile.weights.size() != static_cast<std::size_t>(design.v()))
    throw DesignError("profile has " + std::to_string(profile.weights.size()) + " weights for v=" +
                      std::to_string(design.v()));
  LoadReport r;
  for (const auto& b : design.blocks()) {
    Rational load = 0;
    for (Point p : b) load += profile.weights[static_cast<std::size_t>(labeling[p])];
    r.per_node_load.push_back(std::move(load));
  }
  const auto [lo, hi] = std::minmax_element(r.per_node_load.begin(), r.per_node_load.end());
  r.min = *lo;
  r.max = *hi;
  r.spread = r.max - r.min;
  Rational total = 0;
  for (const auto& x : r.per_node_load) total += x;
  const auto n = static_cast<long long>(r.per_node_load.size());
  r.mean = total / n;
  Rational sq = 0;
  for (const auto& x : r.per_node_load) sq += (x - r.mean) * (x - r.mean);
  r.variance = sq / n;
  r.coefficient_of_variation = r.mean == 0 ? 0.0 : std::sqrt(to_double(r.variance)) / to_double(r.mean);
  return r;
}

int frc_rate(const Design& design, int read_k) {
  const auto b = static_cast<long long>(design.block_count());
  if (read_k < 1 || read_k > b)
    throw std::invalid_argument("read_k must lie in [1, " + std::to_string(b) + "], got " + std::to_string(read_k));
  if (binomial(b, read_k) > BigInt(kFrcSubsetCap))
    throw std::invalid_argument("C(" + std::to_string(b) + ", " + std::to_string(read_k) + ") exceeds the cap of " +
                                std::to_string(kFrcSubsetCap) + " block subsets");

  const std::size_t words = (static_cast<std::size_t>(design.v()) + 63) / 64;
  std::vector<std::vector<std::uint64_t>> masks;
  for (const auto& blk : design.blocks()) {
    std::vector<std::uint64_t> m(words, 0);
    for (Point p : blk) m[static_cast<std::size_t>(p) / 64] |= std::uint64_t{1} << (p % 64);
    masks.push_back(std::move(m));
  }
  // Depth-first over combinations with one running union per depth.
  std::vector<std::vector<std::uint64_t>> unions(static_cast<std::size_t>(read_k) + 1,
                                                 std::vector<std::uint64_t>(words, 0));
  int best = design.v() + 1;
  auto count = [&](const std::vector<std::uint64_t>& m) {
    int c = 0;
    for (auto w : m) c += std::popcount(w);
    return c;
  };
  auto rec = [&](auto&& self, std::size_t start, int depth) -> void {
    if (depth == read_k) {
      best = std::min(best, count(unions[static_cast<std::size_t>(depth)]));
      return;
    }
    for (std::size_t i = start; i + static_cast<std::size_t>(read_k - depth) <= masks.size(); ++i) {
      auto& next = unions[static_cast<std::size_t>(depth) + 1];
      const auto& prev = unions[static_cast<std::size_t>(depth)];
      for (std::size_t w = 0; w < words; ++w) next[w] = prev[w] | masks[i][w];
      if (count(next) >= best) continue;
      self(self, i + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  return best;
}

RecoveryReport recovery_uniformity(const Design& design) {
  RecoveryReport r;
  r.stripes.assign(static_cast<std::size_t>(design.v()), 0);
  for (const auto& b : design.blocks())
    for (Point p : b) ++r.stripes[static_cast<std::size_t>(p)];
  r.uniform = std::adjacent_find(r.stripes.begin(), r.stripes.end(), std::not_equal_to<>()) == r.stripes.end();
  if (r.uniform && !r.stripes.empty()) r.c = r.stripes.front();
  return r;
}

}  // namespace steiner
