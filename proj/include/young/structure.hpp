#pragma once

// Whole-lattice checks on a truncation: lower-cover reconstruction,
// graded automorphisms, and embeddings of finite posets.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "young/report.hpp"
#include "young/universe.hpp"

namespace young {

// ---------------------------------------------------------------------------
// Reconstruction from lower covers.

struct LevelFingerprints {
  std::int64_t level = 0;
  std::size_t size = 0;
  std::size_t distinct_keys = 0;
  std::vector<std::vector<Partition>> collisions;  // groups sharing a key
  bool injective() const noexcept { return collisions.empty(); }
};

std::vector<LevelFingerprints> fingerprint_levels(const Universe& universe);

/// Injectivity of reconstruction_key on every level 4..max_card is the claim;
/// levels 2 and 3 are reported as boundary observations (2 collides, 3 does
/// not). Requires max_card >= 4.
CheckReport reconstruction_check(std::int64_t max_card);

// ---------------------------------------------------------------------------
// Graded automorphisms of levels 0..max_rank.

struct AutomorphismSearch {
  std::int64_t max_rank = 0;
  // Each map sends universe id i to automorphisms[k][i].
  std::vector<std::vector<std::size_t>> automorphisms;
  std::uint64_t nodes = 0;
  bool includes_identity = false;
  bool includes_conjugation = false;
};

/// Largest rank accepted by automorphism_search.
inline constexpr std::int64_t kAutomorphismRankCeiling = 16;

/// Backtracking over rank-preserving bijections that preserve and reflect the
/// cover relation. Throws resource_error above kAutomorphismRankCeiling.
AutomorphismSearch automorphism_search(std::int64_t max_rank);

/// pass iff the automorphisms are exactly identity and conjugation (which
/// coincide for max_rank <= 1).
CheckReport automorphism_check(std::int64_t max_rank);

// ---------------------------------------------------------------------------
// Embeddings of finite posets.

class poset_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A strict order on labelled elements, transitively closed on construction.
class FinitePoset {
 public:
  /// Throws poset_error on duplicate or unknown labels and on cycles.
  FinitePoset(std::vector<std::string> labels, const std::vector<std::pair<std::string, std::string>>& less_than);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  bool less(std::size_t a, std::size_t b) const { return closure_[a * size() + b]; }

 private:
  std::vector<std::string> labels_;
  std::vector<char> closure_;
};

/// `elem NAME` and `lt A B` lines, `#` comments. Throws poset_error with a
/// line number.
FinitePoset parse_poset(std::string_view text);
FinitePoset load_poset(const std::string& path);

struct EmbeddingResult {
  std::int64_t max_card = 0;
  std::optional<std::vector<Partition>> images;  // by element index
  bool verified = false;
  std::uint64_t nodes = 0;
};

/// Backtracking search for an order embedding (preserving and reflecting <)
/// into the partitions of cardinality <= max_card. A verified result was
/// rechecked pair by pair with leq. Not finding one says nothing about the
/// untruncated lattice.
EmbeddingResult embed_poset(const FinitePoset& poset, std::int64_t max_card);

/// Independent pairwise check of a proposed embedding.
bool verify_embedding(const FinitePoset& poset, const std::vector<Partition>& images);

}  // namespace young
