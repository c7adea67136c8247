#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace steiner {

using Point = int;
using Block = std::vector<Point>;

/// Raised for structurally malformed designs and labelings.
class DesignError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the text readers; carries the 1-based offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A t-(v,k,1) block layout on points 0..v-1.
///
/// Blocks are stored canonically: each block ascending, the block list in
/// lexicographic order. Construction checks structure only (block sizes,
/// point range, repeated points, repeated blocks); whether the layout is a
/// packing is the job of validate().
class Design {
 public:
  Design() = default;

  static Design make(int v, int t, int k, std::vector<Block> blocks);

  int v() const noexcept { return v_; }
  int t() const noexcept { return t_; }
  int k() const noexcept { return k_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  bool empty() const noexcept { return blocks_.empty(); }

  bool operator==(const Design&) const = default;

 private:
  int v_ = 0;
  int t_ = 0;
  int k_ = 0;
  std::vector<Block> blocks_;
};

/// Bijection point -> popularity rank (0 = most popular).
class Labeling {
 public:
  Labeling() = default;
  explicit Labeling(std::vector<int> ranks);

  static Labeling identity(int v);

  int size() const noexcept { return static_cast<int>(ranks_.size()); }
  int operator[](Point p) const { return ranks_[static_cast<std::size_t>(p)]; }
  const std::vector<int>& ranks() const noexcept { return ranks_; }

  bool operator==(const Labeling&) const = default;
  auto operator<=>(const Labeling&) const = default;

 private:
  std::vector<int> ranks_;
};

struct PackingStatus {
  bool is_packing = false;
  bool is_steiner = false;
  std::uint64_t uncovered_t_subsets = 0;
  std::vector<int> replication;
  std::size_t block_count = 0;
  // First t-subset found in two blocks, with the indices of those blocks.
  std::optional<std::vector<Point>> repeated_t_subset;
  std::optional<std::pair<std::size_t, std::size_t>> conflicting_blocks;
};

PackingStatus validate(const Design& design);

/// rank r -> v-1-r for every point.
Labeling reverse(const Labeling& labeling);

/// Number of t-subsets in a Steiner system's block set, C(v,t)/C(k,t), or
/// nullopt when that ratio is not an integer.
std::optional<std::uint64_t> steiner_block_count(int v, int t, int k);

/// Replication number C(v-1,t-1)/C(k-1,t-1), or nullopt if non-integral.
std::optional<std::uint64_t> steiner_replication(int v, int t, int k);

/// True iff no block of `design` lies inside `points`.
bool is_independent(const Design& design, std::span<const Point> points);

// ---------------------------------------------------------------------------
// Text formats
//
// Design file: first non-comment line "v t k b", then b lines of k point
// indices. Lines starting with '#' are comments. A comment of the form
// "# construction: <name> [key=value ...]" is retained as provenance.
// Labeling file: one line of v ranks, position = point.

struct DesignFile {
  Design design;
  std::optional<std::string> construction;
};

DesignFile read_design_file(std::string_view text);
Design read_design(std::string_view text);
std::string write_design(const Design& design, std::optional<std::string> construction = std::nullopt);

Labeling read_labeling(std::string_view text);
std::string write_labeling(const Labeling& labeling);

}  // namespace steiner
