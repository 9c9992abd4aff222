#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace young {

/// One term m[n] of the canonical sum: `count` parts of size `part`.
struct Run {
  std::int64_t part = 0;
  std::int64_t count = 0;

  friend bool operator==(const Run&, const Run&) = default;
  friend auto operator<=>(const Run&, const Run&) = default;
};

/// An integer partition in canonical run-length form.
///
/// Runs are kept with strictly decreasing part sizes and positive counts, so
/// two partitions are equal exactly when their run lists are equal. The empty
/// run list is the empty partition. Cardinality, length and largest part are
/// computed once on construction.
class Partition {
 public:
  Partition() = default;

  /// Builds from runs that are already canonical; throws std::invalid_argument
  /// otherwise. Use from_parts() or from_runs() for arbitrary input.
  explicit Partition(std::vector<Run> canonical_runs);

  /// Canonicalizes a multiset of parts given in any order. Rejects parts <= 0.
  static Partition from_parts(std::span<const std::int64_t> parts);
  static Partition from_parts(std::initializer_list<std::int64_t> parts);

  /// Merges and sorts arbitrary (part, count) terms. Terms with count 0 are
  /// dropped; negative counts or non-positive parts are rejected.
  static Partition from_runs(std::vector<Run> terms);

  const std::vector<Run>& runs() const noexcept { return runs_; }
  bool empty() const noexcept { return runs_.empty(); }

  std::int64_t cardinality() const noexcept { return cardinality_; }
  std::int64_t length() const noexcept { return length_; }
  std::int64_t largest_part() const noexcept { return runs_.empty() ? 0 : runs_.front().part; }

  /// Multiplicity of part size `n` (0 when absent).
  std::int64_t multiplicity(std::int64_t n) const noexcept;

  /// The i-th part of the descending sequence, 1-indexed; 0 past the end.
  std::int64_t part_at(std::int64_t i) const noexcept;

  /// Descending part sequence (n_1 >= n_2 >= ... >= n_t).
  std::vector<std::int64_t> parts() const;

  friend bool operator==(const Partition& a, const Partition& b) noexcept { return a.runs_ == b.runs_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept {
    return a.runs_ <=> b.runs_;
  }

 private:
  std::vector<Run> runs_;
  std::int64_t cardinality_ = 0;
  std::int64_t length_ = 0;
};

// Named shapes.
Partition total(std::int64_t n);                      // [n], or ∅ for n = 0
Partition trivial(std::int64_t m);                    // m[1], or ∅ for m = 0
Partition rectangle(std::int64_t m, std::int64_t n);  // m[n]; ∅ if either is 0
Partition factorial_partition(std::int64_t n);        // [n]! = (n, n-1, ..., 1)

/// Young's order: containment of diagrams.
bool leq(const Partition& sigma, const Partition& pi) noexcept;
inline bool lt(const Partition& sigma, const Partition& pi) noexcept { return sigma != pi && leq(sigma, pi); }

/// Lower covers, computed by shrinking the last row of each run.
std::vector<Partition> lower_covers(const Partition& pi);

/// Upper covers, computed by growing the first row of each run (and adding a
/// new row of size 1). Not bounded by any universe.
std::vector<Partition> upper_covers(const Partition& pi);

/// Transpose of the Young diagram.
Partition conjugate(const Partition& pi);

/// Greatest lower bound / least upper bound: componentwise min / max of the
/// descending part sequences.
Partition meet(const Partition& a, const Partition& b);
Partition join(const Partition& a, const Partition& b);

/// Canonical-sum rendering: `0` for ∅, otherwise `2[6]+[5]+3[4]`.
std::string to_string(const Partition& pi);
std::ostream& operator<<(std::ostream& os, const Partition& pi);

/// Accepts the canonical-sum grammar (terms in any order, repeats merged, an
/// explicit coefficient of 1 allowed) and the tuple form `(6,6,5)` / `()`.
/// Throws std::invalid_argument with the offending position.
Partition parse_partition(std::string_view text);

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

}  // namespace young
