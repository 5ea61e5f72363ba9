#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace treepack {

/// A set partition of {0..t-1}, stored as a restricted-growth string: block
/// indices appear in first-occurrence order, so block_of(0) == 0 and
/// block_of(i) <= 1 + max(block_of(0..i-1)).  The encoding is canonical;
/// two Partition values are equal exactly when they describe the same
/// partition.
class Partition {
 public:
  static Partition discrete(int t);
  static Partition single_block(int t);

  /// Accepts only an already-canonical restricted-growth string.
  static Partition from_rgs(std::vector<int> rgs);

  /// Canonicalizes an arbitrary block labelling (one label per vertex).
  static Partition from_assignment(const std::vector<int>& block_of);

  /// Builds from explicit blocks, which must cover 0..t-1 exactly once.
  static Partition from_blocks(int t, const std::vector<std::vector<int>>& blocks);

  /// Parses either the compact digit form ("011", base-16 digits) or the
  /// comma form ("0,1,1").  The result must have exactly t vertices.
  static Partition parse(const std::string& text, int t);

  int size() const { return static_cast<int>(rgs_.size()); }
  int num_blocks() const { return blocks_; }
  int block_of(int v) const { return rgs_[v]; }
  const std::vector<int>& rgs() const { return rgs_; }

  /// Blocks in index order; vertices inside each block ascend.
  std::vector<std::vector<int>> blocks() const;

  /// Compact digit form; falls back to the comma form past base 16.
  std::string rgs_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on the restricted-growth string.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.rgs_ <=> b.rgs_;
  }

 private:
  Partition(std::vector<int> rgs, int blocks) : rgs_(std::move(rgs)), blocks_(blocks) {}

  std::vector<int> rgs_;
  int blocks_ = 0;
};

/// Streams every set partition of {0..t-1} exactly once, in lexicographic
/// restricted-growth order.  The stream is restartable via reset().
class PartitionEnumerator {
 public:
  explicit PartitionEnumerator(int t);
  std::optional<Partition> next();
  void reset();

 private:
  int t_;
  bool fresh_ = true;
  bool done_ = false;
  std::vector<int> rgs_;
  std::vector<int> max_prefix_;  // max_prefix_[i] = max(rgs_[0..i-1]), with [0] = -1
};

/// Visits all partitions in enumeration order.  The visitor returns false to
/// stop early; the function returns true when the scan ran to completion.
bool for_each_partition(int t, const std::function<bool(const Partition&)>& visit);

/// Number of set partitions of a t-element set.
long long bell_number(int t);

}  // namespace treepack
