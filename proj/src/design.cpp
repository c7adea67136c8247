#include "steiner/design.hpp"

#include "steiner/rational.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <map>
#include <sstream>

namespace steiner {

namespace {

std::string block_to_string(const Block& b) {
  std::string s = "{";
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(b[i]);
  }
  return s + "}";
}

// Combinatorial number system rank of a sorted subset.
std::uint64_t subset_rank(std::span<const Point> sorted_subset) {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < sorted_subset.size(); ++i)
    r += binomial_u64(sorted_subset[i], static_cast<std::int64_t>(i) + 1);
  return r;
}

// Calls fn(span) for every t-subset of the (sorted) block.
template <typename Fn>
void for_each_subset(const Block& block, int t, Fn&& fn) {
  const int k = static_cast<int>(block.size());
  std::vector<int> idx(static_cast<std::size_t>(t));
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<Point> sub(static_cast<std::size_t>(t));
  while (true) {
    for (int i = 0; i < t; ++i) sub[i] = block[idx[i]];
    fn(std::span<const Point>(sub));
    int i = t - 1;
    while (i >= 0 && idx[i] == k - t + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
}

constexpr std::uint64_t kDenseCoverageLimit = std::uint64_t{1} << 30;

}  // namespace

Design Design::make(int v, int t, int k, std::vector<Block> blocks) {
  if (v <= 0) throw DesignError("v must be positive");
  if (t <= 0) throw DesignError("t must be positive");
  if (!(t < k && k <= v)) throw DesignError("need t < k <= v");
  for (auto& b : blocks) {
    if (static_cast<int>(b.size()) != k)
      throw DesignError("block " + block_to_string(b) + " has size " + std::to_string(b.size()) +
                        ", expected " + std::to_string(k));
    std::sort(b.begin(), b.end());
    for (Point p : b)
      if (p < 0 || p >= v)
        throw DesignError("block " + block_to_string(b) + " has point " + std::to_string(p) +
                          " outside 0.." + std::to_string(v - 1));
    if (std::adjacent_find(b.begin(), b.end()) != b.end())
      throw DesignError("block " + block_to_string(b) + " repeats a point");
  }
  std::sort(blocks.begin(), blocks.end());
  auto dup = std::adjacent_find(blocks.begin(), blocks.end());
  if (dup != blocks.end()) throw DesignError("block " + block_to_string(*dup) + " appears twice");
  Design d;
  d.v_ = v;
  d.t_ = t;
  d.k_ = k;
  d.blocks_ = std::move(blocks);
  return d;
}

Labeling::Labeling(std::vector<int> ranks) : ranks_(std::move(ranks)) {
  std::vector<char> seen(ranks_.size(), 0);
  for (int r : ranks_) {
    if (r < 0 || r >= static_cast<int>(ranks_.size()) || seen[static_cast<std::size_t>(r)])
      throw DesignError("labeling is not a permutation of 0.." + std::to_string(ranks_.size() - 1));
    seen[static_cast<std::size_t>(r)] = 1;
  }
}

Labeling Labeling::identity(int v) {
  std::vector<int> r(static_cast<std::size_t>(v));
  std::iota(r.begin(), r.end(), 0);
  return Labeling(std::move(r));
}

Labeling reverse(const Labeling& labeling) {
  const int v = labeling.size();
  std::vector<int> r(labeling.ranks());
  for (int& x : r) x = v - 1 - x;
  return Labeling(std::move(r));
}

std::optional<std::uint64_t> steiner_block_count(int v, int t, int k) {
  BigInt num = binomial(v, t), den = binomial(k, t);
  if (den == 0 || num % den != 0) return std::nullopt;
  return (num / den).convert_to<std::uint64_t>();
}

std::optional<std::uint64_t> steiner_replication(int v, int t, int k) {
  BigInt num = binomial(v - 1, t - 1), den = binomial(k - 1, t - 1);
  if (den == 0 || num % den != 0) return std::nullopt;
  return (num / den).convert_to<std::uint64_t>();
}

PackingStatus validate(const Design& design) {
  PackingStatus st;
  const int v = design.v(), t = design.t();
  st.block_count = design.block_count();
  st.replication.assign(static_cast<std::size_t>(v), 0);
  for (const auto& b : design.blocks())
    for (Point p : b) ++st.replication[static_cast<std::size_t>(p)];

  const std::uint64_t total = binomial_u64(v, t);
  std::uint64_t covered = 0;
  bool packing = true;

  auto note_conflict = [&](std::span<const Point> sub, std::size_t first, std::size_t second) {
    if (!packing) return;
    packing = false;
    st.repeated_t_subset = std::vector<Point>(sub.begin(), sub.end());
    st.conflicting_blocks = std::make_pair(first, second);
  };

  if (total <= kDenseCoverageLimit) {
    // Dense owner table: which block first covered each t-subset.
    constexpr std::uint32_t kNone = UINT32_MAX;
    std::vector<std::uint32_t> owner(static_cast<std::size_t>(total), kNone);
    for (std::size_t bi = 0; bi < design.blocks().size(); ++bi) {
      for_each_subset(design.blocks()[bi], t, [&](std::span<const Point> sub) {
        auto& o = owner[static_cast<std::size_t>(subset_rank(sub))];
        if (o == kNone) {
          o = static_cast<std::uint32_t>(bi);
          ++covered;
        } else {
          note_conflict(sub, o, bi);
        }
      });
    }
  } else {
    std::map<std::vector<Point>, std::size_t> owner;
    for (std::size_t bi = 0; bi < design.blocks().size(); ++bi) {
      for_each_subset(design.blocks()[bi], t, [&](std::span<const Point> sub) {
        auto [it, inserted] = owner.emplace(std::vector<Point>(sub.begin(), sub.end()), bi);
        if (inserted)
          ++covered;
        else
          note_conflict(sub, it->second, bi);
      });
    }
  }

  st.is_packing = packing;
  st.uncovered_t_subsets = total - covered;
  st.is_steiner = packing && st.uncovered_t_subsets == 0;
  return st;
}

bool is_independent(const Design& design, std::span<const Point> points) {
  std::vector<char> in(static_cast<std::size_t>(design.v()), 0);
  for (Point p : points) in[static_cast<std::size_t>(p)] = 1;
  for (const auto& b : design.blocks())
    if (std::all_of(b.begin(), b.end(), [&](Point p) { return in[static_cast<std::size_t>(p)]; }))
      return false;
  return true;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<long long> parse_ints(std::string_view line, std::size_t lineno) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    long long value = 0;
    auto tok = line.substr(i, j - i);
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw ParseError(lineno, "expected an integer, got '" + std::string(tok) + "'");
    out.push_back(value);
    i = j;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

DesignFile read_design_file(std::string_view text) {
  DesignFile out;
  std::optional<std::vector<long long>> header;
  std::vector<Block> blocks;
  std::size_t header_line = 0;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    auto body = trim(line);
    if (body.empty()) continue;
    if (body.front() == '#') {
      auto c = trim(body.substr(1));
      constexpr std::string_view tag = "construction:";
      if (c.substr(0, tag.size()) == tag) out.construction = std::string(trim(c.substr(tag.size())));
      continue;
    }
    auto nums = parse_ints(body, lineno);
    if (!header) {
      if (nums.size() != 4) throw ParseError(lineno, "header must be 'v t k b'");
      for (long long x : nums)
        if (x < 0 || x > INT32_MAX) throw ParseError(lineno, "header value out of range");
      header = nums;
      header_line = lineno;
      continue;
    }
    const auto k = static_cast<std::size_t>((*header)[2]);
    if (nums.size() != k)
      throw ParseError(lineno, "block has " + std::to_string(nums.size()) + " points, expected " + std::to_string(k));
    if (blocks.size() == static_cast<std::size_t>((*header)[3]))
      throw ParseError(lineno, "more block lines than the header's b=" + std::to_string((*header)[3]));
    Block b;
    for (long long x : nums) {
      if (x < 0 || x >= (*header)[0])
        throw ParseError(lineno, "point " + std::to_string(x) + " outside 0.." + std::to_string((*header)[0] - 1));
      b.push_back(static_cast<Point>(x));
    }
    blocks.push_back(std::move(b));
  }
  if (!header) throw ParseError(lineno, "missing header line 'v t k b'");
  if (blocks.size() != static_cast<std::size_t>((*header)[3]))
    throw ParseError(lineno, "header declares b=" + std::to_string((*header)[3]) + " but " +
                                 std::to_string(blocks.size()) + " block lines follow");
  try {
    out.design = Design::make(static_cast<int>((*header)[0]), static_cast<int>((*header)[1]),
                              static_cast<int>((*header)[2]), std::move(blocks));
  } catch (const DesignError& e) {
    throw ParseError(header_line, e.what());
  }
  return out;
}

Design read_design(std::string_view text) { return read_design_file(text).design; }

std::string write_design(const Design& design, std::optional<std::string> construction) {
  std::ostringstream os;
  if (construction) os << "# construction: " << *construction << "\n";
  os << design.v() << ' ' << design.t() << ' ' << design.k() << ' ' << design.block_count() << '\n';
  for (const auto& b : design.blocks()) {
    for (std::size_t i = 0; i < b.size(); ++i) os << (i ? " " : "") << b[i];
    os << '\n';
  }
  return os.str();
}

Labeling read_labeling(std::string_view text) {
  std::vector<int> ranks;
  std::size_t lineno = 0, pos = 0;
  bool seen = false;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    if (seen) throw ParseError(lineno, "labeling file must hold a single line of ranks");
    seen = true;
    for (long long x : parse_ints(body, lineno)) {
      if (x < 0 || x > INT32_MAX) throw ParseError(lineno, "rank out of range");
      ranks.push_back(static_cast<int>(x));
    }
  }
  if (!seen) throw ParseError(lineno, "empty labeling file");
  try {
    return Labeling(std::move(ranks));
  } catch (const DesignError& e) {
    throw ParseError(lineno, e.what());
  }
}

std::string write_labeling(const Labeling& labeling) {
  std::string s;
  for (int i = 0; i < labeling.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(labeling[i]);
  }
  return s + "\n";
}

}  // namespace steiner
