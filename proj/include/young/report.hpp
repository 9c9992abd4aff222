#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "young/partition.hpp"
#include "young/prenex.hpp"

namespace young {

enum class Verdict { kPass, kFail, kUnstable };

std::string to_string(Verdict v);

/// Sweep bounds. max_card bounds the main argument; aux_card bounds the
/// secondary ones (total or trivial parameters) where a proposition has them.
struct Bounds {
  std::int64_t max_card = 0;
  std::int64_t aux_card = 0;
  std::int64_t slack = 0;
};

/// One argument tuple together with both sides' answers.
struct Witness {
  std::vector<Partition> args;
  bool oracle = false;
  bool characterization = false;
};

struct CheckReport {
  static constexpr std::size_t kWitnessCap = 100;

  std::string name;
  std::string variant;
  std::string range;
  Bounds bounds;

  std::uint64_t tuples_checked = 0;
  std::uint64_t mismatch_count = 0;  // exact, even when the list is capped
  std::vector<Witness> mismatches;

  // Tuples outside the claim's hypotheses. Disagreements there are listed
  // but do not count as mismatches.
  std::uint64_t boundary_count = 0;
  std::uint64_t boundary_disagreements = 0;
  std::vector<Witness> boundary;
  std::string boundary_note;

  // Set when the check was repeated one slack step higher.
  std::optional<std::uint64_t> stability_flips;

  double elapsed_seconds = 0;
  Verdict verdict = Verdict::kPass;
  std::vector<std::string> notes;

  void add_mismatch(Witness w);
  void add_boundary(Witness w);
  /// pass iff no mismatches and no stability flips.
  void settle();
};

/// All readings of one proposition. The verdict is the primary reading's,
/// except that a proposition demanding exactly one passing reading fails
/// when that does not hold.
struct PropositionReport {
  std::string name;
  std::string claim;
  PrenexClass claimed_class;
  std::string primary_variant;
  std::vector<CheckReport> variants;
  Verdict verdict = Verdict::kPass;
  std::vector<std::string> notes;

  const CheckReport& primary() const;
  const CheckReport& variant(const std::string& name) const;
};

}  // namespace young
