#pragma once

// Bounded model checking of formulas over a finite truncation of the lattice.
// Quantifiers range over every partition of cardinality at most
// max_card + slack; free variables may be bound to any partition.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "young/formula.hpp"
#include "young/universe.hpp"

namespace young {

struct EvalConfig {
  std::int64_t max_card = 0;  // candidates for free variables in defined_set
  std::int64_t slack = 0;     // extra levels visible to quantifiers
  std::int64_t quantifier_bound() const noexcept { return max_card + slack; }
};

using Assignment = std::map<std::string, Partition, std::less<>>;

/// Throws std::invalid_argument for an unassigned free variable and
/// insufficient_universe when the universe stops below the quantifier bound.
bool evaluate(const Formula& f, const Assignment& assignment, const Universe& universe, const EvalConfig& config);

/// All tuples over `vars` (each of cardinality <= config.max_card) satisfying f,
/// in lexicographic order of universe ids. `vars` must be exactly the free
/// variables of f.
std::vector<std::vector<Partition>> defined_relation(const Formula& f, const std::vector<std::string>& vars,
                                                     const Universe& universe, const EvalConfig& config);

/// defined_relation for a formula with exactly one free variable.
std::vector<Partition> defined_set(const Formula& f, const std::string& var, const Universe& universe,
                                   const EvalConfig& config);

struct MembershipFlip {
  std::vector<Partition> tuple;
  std::int64_t from_slack = 0;
  std::int64_t to_slack = 0;
  bool member_before = false;
};

struct StabilityReport {
  std::vector<std::int64_t> slacks;
  std::vector<std::size_t> sizes;  // defined-set size at each slack
  std::vector<MembershipFlip> flips;
  bool stable() const noexcept { return flips.empty(); }
};

/// Recomputes the defined relation at each slack of the schedule (keeping the
/// free-variable bound config.max_card) and records tuples whose membership
/// changes between consecutive slacks.
StabilityReport stability_check(const Formula& f, const std::vector<std::string>& vars, const Universe& universe,
                                const EvalConfig& config, const std::vector<std::int64_t>& slack_schedule);

}  // namespace young
