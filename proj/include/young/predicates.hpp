#pragma once

// Definable predicates of Young's lattice, each in two independent forms:
//
//  * a structural oracle that reads the run-length form directly, and
//  * a characterization that only asks order questions (leq) about the
//    arguments and about partitions built from them, quantifying over a
//    finite search space where the defining condition quantifies over the
//    whole lattice.
//
// The harness certifies that the two forms agree over bounded ranges.
// Characterizations never consult runs(), cardinality() or length() of
// their arguments; sizes are recovered with lattice_length() and
// lattice_largest_part(), which are themselves order queries.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "young/partition.hpp"
#include "young/universe.hpp"

namespace young {

// ---------------------------------------------------------------------------
// Structural oracles.

bool is_total(const Partition& pi) noexcept;
bool is_trivial(const Partition& pi) noexcept;
bool is_rectangular(const Partition& pi) noexcept;
bool has_distinct_parts(const Partition& pi) noexcept;

/// Every part of pi is at most |rho|. rho must be total.
bool has_bounded_parts(const Partition& rho, const Partition& pi);
/// rho = [m], sigma = n[1] and pi = n[m]. rho total, sigma trivial.
bool is_rectangular_triple(const Partition& rho, const Partition& sigma, const Partition& pi);
/// rho = [n] (nonempty) occurs as a part of pi.
bool is_part_of(const Partition& rho, const Partition& pi);
/// pi = [|rho|]!. rho total.
bool is_factorial(const Partition& rho, const Partition& pi);
/// |rho| = |pi| for rho total and pi trivial.
bool same_height_total_trivial(const Partition& rho, const Partition& pi);
/// |rho| + |sigma| = |pi| for totals.
bool add_triple(const Partition& rho, const Partition& sigma, const Partition& pi);
/// rho = [r] occurs in pi exactly |sigma| times; rho, sigma nonempty totals.
bool part_frequency(const Partition& rho, const Partition& sigma, const Partition& pi);
/// |pi| >= |rho|, rho total.
bool height_geq(const Partition& rho, const Partition& pi);
/// |pi| = |rho|, rho total.
bool height_eq(const Partition& rho, const Partition& pi);
/// |rho| * |sigma| = |pi| for totals.
bool mult_triple(const Partition& rho, const Partition& sigma, const Partition& pi);

// ---------------------------------------------------------------------------
// Order-only building blocks.

/// l(pi): the m with m[1] <= pi and (m+1)[1] not <= pi.
std::int64_t lattice_length(const Partition& pi);
/// b(pi): the largest n with [n] <= pi (0 for ∅).
std::int64_t lattice_largest_part(const Partition& pi);
/// The largest m with m[n] <= pi; 0 when [n] is not below pi. n >= 1.
std::int64_t max_rectangular_below(std::int64_t n, const Partition& pi);

// ---------------------------------------------------------------------------
// Characterizations.

/// Total iff [1]+[1] is not below pi.
bool char_total(const Partition& pi);
/// Trivial iff [2] is not below pi.
bool char_trivial(const Partition& pi);
/// Rectangular iff pi has at most one lower cover. Lower covers are found by
/// filtering level |pi|-1 of the universe.
bool char_rectangular(const Partition& pi, const Universe& universe);

/// l(pi) = m for rho = m[1]: m[1] <= pi and (m+1)[1] not <= pi.
/// Throws std::invalid_argument unless rho is trivial.
bool length_equals(const Partition& rho, const Partition& pi);
/// Parts of pi are at most n for rho = [n]: [n+1] not <= pi.
bool char_bounded_parts(const Partition& rho, const Partition& pi);
/// rho total with b(pi) = b(rho), sigma trivial with l(pi) = l(sigma), pi
/// rectangular in the sense of char_rectangular.
bool char_rectangular_triple(const Partition& rho, const Partition& sigma, const Partition& pi,
                             const Universe& universe);

/// For every s < l(pi) and every n <= b(pi): when s[n] <= pi and s[n+1] is
/// not, (s+1)[n] is not below pi either.
bool char_distinct_parts(const Partition& pi);

/// The two readings of the part-membership test, which differ only in the
/// polarity of the last comparison: after finding the r with r[n] <= pi and
/// (r+1)[n] not <= pi,
///   kRowAboveFits: require r[n+1] <= pi,
///   kRowAboveMisses: require r[n+1] not <= pi.
enum class PartOfReading { kRowAboveFits, kRowAboveMisses };

/// [n] <= pi plus the reading's condition for every r >= 1. rho = [n] must be
/// a nonempty total partition.
bool char_part_of(const Partition& rho, const Partition& pi,
                  PartOfReading reading = PartOfReading::kRowAboveMisses);

/// (1) rho total with b(pi) = b(rho) = n; (2) every [r] with 1 <= r <= n is a
/// part of pi; (3) the parts of pi are distinct.
bool char_factorial(const Partition& rho, const Partition& pi);

/// rho = [r], pi = m[1] and l([r]!) = m.
bool char_same_height_total_trivial(const Partition& rho, const Partition& pi);

/// Where a characterization draws partitions for its inner universal
/// quantifier.
///
/// With `universe` set, the quantifier ranges over every element of that
/// universe, which must reach the documented sufficient bound. Without it a
/// pruned search is used: only candidates that can make the antecedent true
/// and the conclusion false are generated, with part sizes allowed up to
/// `slack` beyond the largest part the condition can mention.
struct SearchScope {
  const Universe* universe = nullptr;
  std::int64_t slack = 0;
};

/// Readings of the addition test's final comparison l(beta*) vs |sigma|.
///   kAtLeast: l(beta*) >= |sigma| (as printed; only yields |rho|+|sigma| <= |pi|),
///   kExactly: l(beta*) =  |sigma|.
enum class AddReading { kAtLeast, kExactly };

/// Sufficient universe bound for the addition test: |Σ_{|rho|<i<=|pi|} [i]|.
std::int64_t addition_universe_bound(const Partition& rho, const Partition& pi);

/// Lengths of all beta* in scope satisfying the antecedent: parts distinct,
/// and for every nonempty total alpha, alpha is a part of beta* iff
/// rho < alpha <= pi. Sorted, with duplicates.
std::vector<std::int64_t> addition_witness_lengths(const Partition& rho, const Partition& pi,
                                                   const SearchScope& scope = {});

/// (1) rho, sigma, pi total; (2) rho < pi and sigma < pi; (3) every beta*
/// satisfying the antecedent above passes the reading's length comparison.
bool char_add(const Partition& rho, const Partition& sigma, const Partition& pi,
              AddReading reading = AddReading::kExactly, const SearchScope& scope = {});

/// Same, with the antecedent lengths already computed for (rho, pi).
bool char_add_from_witnesses(const Partition& rho, const Partition& sigma, const Partition& pi,
                             const std::vector<std::int64_t>& witness_lengths, AddReading reading);

/// Readings of the frequency test's third condition, over the parts beta* of
/// pi larger than [r] with t = max_rectangular_below(|beta*|, pi):
///   kAtMost:  n <= m - t for every such beta* (as printed; yields "at most n times"),
///   kExactly: n <= m - t for every such beta*, with equality for one of them.
enum class FrequencyReading { kAtMost, kExactly };

/// pi = n[r], or (1) [r] is a part of pi; (2) if b(pi) = r then n[r] is the
/// largest r-rectangle below pi; (3) if b(pi) != r, the reading's condition
/// with m = max_rectangular_below(r, pi). rho = [r], sigma = [n], both
/// nonempty totals. Candidate parts beta* range over totals up to b(pi)+slack.
bool char_frequency(const Partition& rho, const Partition& sigma, const Partition& pi,
                    FrequencyReading reading = FrequencyReading::kExactly, std::int64_t slack = 0);

/// sigma satisfies the witness condition for pi: whenever [r] <= pi with m[r]
/// the largest r-rectangle below pi, [r] is a part of sigma occurring at least
/// m times (decided with char_frequency).
bool satisfies_witness_condition(const Partition& sigma, const Partition& pi);

/// Sum over the runs m_i[n_i] of pi of m_i copies of [n_i]!.
Partition factorial_sum(const Partition& pi);

/// Sufficient universe bound for the height test: |factorial_sum(pi)|.
std::int64_t height_universe_bound(const Partition& pi);

/// rho total, and every sigma in scope satisfying the witness condition for
/// pi has l(sigma) >= b(rho).
bool char_height_geq(const Partition& rho, const Partition& pi, const SearchScope& scope = {});
/// char_height_geq(rho, pi) and not char_height_geq([b(rho)+1], pi).
bool char_height_eq(const Partition& rho, const Partition& pi, const SearchScope& scope = {});
/// rho, sigma, pi total and char_height_eq(pi, b(rho)[b(sigma)]).
bool char_mult(const Partition& rho, const Partition& sigma, const Partition& pi,
               const SearchScope& scope = {});

/// Lower covers of pi in sorted order; equal keys mean equal cover sets.
std::vector<Partition> reconstruction_key(const Partition& pi);

}  // namespace young
