#pragma once

// Certification sweeps: every registered proposition pairs a structural
// oracle with one or more order-only characterizations, and a sweep compares
// them on every argument tuple inside the bounds.

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "young/report.hpp"
#include "young/universe.hpp"

namespace young {

using Args = std::span<const Partition>;
using Decider = std::function<bool(Args)>;

struct Reading {
  std::string name;
  std::string description;
  /// Builds the characterization for one sweep. The universe reaches
  /// max(max_card, aux_card) + slack + 1 levels. The returned decider is
  /// called concurrently and must be thread-safe.
  std::function<Decider(const Bounds&, const Universe&)> make;
};

struct Proposition {
  std::string name;
  std::string claim;
  PrenexClass claimed_class;
  std::vector<Reading> readings;
  std::size_t primary = 0;
  bool exactly_one_reading_passes = false;
  bool uses_slack = false;

  std::function<std::vector<std::vector<Partition>>(const Bounds&, const Universe&)> domain;
  std::function<std::string(const Bounds&)> describe_range;
  Decider oracle;
  Decider outside_hypotheses;  // may be empty
  std::string boundary_note;
};

/// The fixed catalog, in a stable order.
const std::vector<Proposition>& propositions();

/// Throws std::invalid_argument for unknown names.
const Proposition& find_proposition(const std::string& name);

struct SweepOptions {
  unsigned threads = 0;  // 0: hardware concurrency
  bool check_stability = true;
};

PropositionReport check_proposition(const Proposition& prop, const Bounds& bounds, const SweepOptions& options = {});

/// Named bound sets for check-all.
struct Profile {
  std::string name;
  std::map<std::string, Bounds> propositions;
  std::int64_t reconstruction_max_card = 0;
  std::int64_t automorphism_max_rank = 0;
};

/// quick, standard or thorough; throws std::invalid_argument otherwise.
const Profile& find_profile(const std::string& name);
std::vector<std::string> profile_names();

struct AggregateReport {
  std::string profile;
  std::vector<PropositionReport> propositions;
  std::vector<CheckReport> structural;  // reconstruction, automorphisms
  Verdict verdict = Verdict::kPass;
};

AggregateReport check_all(const Profile& profile, const SweepOptions& options = {});

}  // namespace young
