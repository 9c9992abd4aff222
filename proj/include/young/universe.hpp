#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "young/partition.hpp"

namespace young {

/// Thrown when a request would exceed a documented resource ceiling.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A query needs levels the universe does not enumerate.
class insufficient_universe : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Position of a partition inside a Universe.
struct Location {
  std::int64_t level = 0;
  std::size_t position = 0;  // within the level
  std::size_t id = 0;        // global index, levels concatenated in order

  friend bool operator==(const Location&, const Location&) = default;
};

/// Every partition of cardinality 0..max_card, level by level.
///
/// Within a level partitions are listed in reverse-lexicographic order of
/// their descending part sequences: (n), (n-1,1), (n-2,2), (n-2,1,1), ...
/// Global ids follow the same order, so id order is cardinality first, then
/// that within-level order. Immutable once built.
class Universe {
 public:
  /// Largest supported bound; the cumulative element count at 50 is about 1.1M.
  static constexpr std::int64_t kMaxCardCeiling = 50;

  /// Throws resource_error above kMaxCardCeiling, std::invalid_argument below 0.
  static Universe enumerate(std::int64_t max_card);

  std::int64_t max_card() const noexcept { return max_card_; }
  std::size_t size() const noexcept { return elements_.size(); }

  std::span<const Partition> level(std::int64_t n) const;
  // Views into the universe; they dangle once it is destroyed.
  std::span<const Partition> elements() const noexcept { return elements_; }

  /// Elements of cardinality <= bound (a prefix of elements()).
  std::span<const Partition> up_to(std::int64_t bound) const;

  const Partition& at(std::size_t id) const { return elements_.at(id); }
  std::optional<Location> locate(const Partition& p) const;
  bool contains(const Partition& p) const { return index_.contains(p); }

  /// First global id of level n; level_begin(max_card + 1) == size().
  std::size_t level_begin(std::int64_t n) const;

  /// All rho one level up with pi <= rho. Throws std::out_of_range when pi
  /// sits on the top level (or beyond), since that level is not enumerated.
  std::vector<Partition> upper_covers(const Partition& pi) const;

  /// Lower covers found by filtering the previous level with leq.
  std::vector<Partition> lower_covers(const Partition& pi) const;

 private:
  std::int64_t max_card_ = 0;
  std::vector<Partition> elements_;
  std::vector<std::size_t> offsets_;  // size max_card_ + 2
  std::unordered_map<Partition, std::size_t, PartitionHash> index_;
};

/// Partitions of n, reverse-lexicographic.
std::vector<Partition> partitions_of(std::int64_t n);

}  // namespace young
