#include "young/structure.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "young/predicates.hpp"

namespace young {

// ---------------------------------------------------------------------------
// Reconstruction.

std::vector<LevelFingerprints> fingerprint_levels(const Universe& universe) {
  std::vector<LevelFingerprints> out;
  for (std::int64_t n = 0; n <= universe.max_card(); ++n) {
    std::map<std::vector<Partition>, std::vector<Partition>> groups;
    for (const Partition& p : universe.level(n)) groups[reconstruction_key(p)].push_back(p);
    LevelFingerprints lf{n, universe.level(n).size(), groups.size(), {}};
    for (auto& [key, members] : groups)
      if (members.size() > 1) lf.collisions.push_back(std::move(members));
    out.push_back(std::move(lf));
  }
  return out;
}

CheckReport reconstruction_check(std::int64_t max_card) {
  if (max_card < 4) throw std::invalid_argument("reconstruction check needs max_card >= 4");
  const auto start = std::chrono::steady_clock::now();
  const Universe universe = Universe::enumerate(max_card);

  CheckReport r;
  r.name = "prop-3.3-reconstruction";
  r.variant = "lower-cover-keys";
  r.range = "levels 4.." + std::to_string(max_card);
  r.bounds = {max_card, 0, 0};
  r.boundary_note = "levels below 4 lie outside the claim; level 2 is expected to collide and level 3 not to";
  r.notes.push_back("key: sorted list of lower covers; a collision is a group of partitions sharing a key");

  for (const auto& lf : fingerprint_levels(universe)) {
    if (lf.level < 2) continue;
    if (lf.level < 4) {
      for (const auto& group : lf.collisions) r.add_boundary({group, false, true});
      const bool expected = (lf.level == 2) != lf.injective();
      r.notes.push_back("level " + std::to_string(lf.level) + ": " + std::to_string(lf.size) + " partitions, " +
                        std::to_string(lf.distinct_keys) + " keys" + (expected ? "" : " (unexpected)"));
      if (!expected) r.add_mismatch({std::vector<Partition>(universe.level(lf.level).begin(),
                                                            universe.level(lf.level).end()),
                                     lf.level == 2, lf.level != 2});
      continue;
    }
    r.tuples_checked += lf.size;
    for (const auto& group : lf.collisions) r.add_mismatch({group, false, true});
  }
  r.settle();
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

// ---------------------------------------------------------------------------
// Automorphisms.

namespace {

constexpr std::uint64_t kAutomorphismNodeBudget = 200'000'000;

class AutomorphismSearcher {
 public:
  explicit AutomorphismSearcher(const Universe& u) : u_(u), image_(u.size()), used_(u.size(), false) {
    // covers_[id] lists, for an element of level n >= 1, which positions of
    // level n-1 it covers.
    covers_.resize(u.size());
    for (std::int64_t n = 1; n <= u.max_card(); ++n) {
      const auto below = u.level(n - 1);
      for (std::size_t pos = 0; pos < u.level(n).size(); ++pos) {
        const Partition& p = u.level(n)[pos];
        auto& row = covers_[u.level_begin(n) + pos];
        row.resize(below.size());
        for (std::size_t k = 0; k < below.size(); ++k) row[k] = leq(below[k], p);
      }
    }
  }

  void run(std::size_t id, AutomorphismSearch& out) {
    if (++out.nodes > kAutomorphismNodeBudget) throw resource_error("automorphism search exceeded its node budget");
    if (id == u_.size()) {
      out.automorphisms.push_back(image_);
      return;
    }
    const std::int64_t n = u_.at(id).cardinality();
    const std::size_t first = u_.level_begin(n);
    const std::size_t last = u_.level_begin(n + 1);
    const std::size_t below_first = n > 0 ? u_.level_begin(n - 1) : 0;
    for (std::size_t cand = first; cand < last; ++cand) {
      if (used_[cand]) continue;
      bool ok = true;
      if (n > 0) {
        // Every element of the level below is already mapped; covers must
        // be preserved and reflected.
        for (std::size_t k = 0; k < covers_[id].size() && ok; ++k) {
          const std::size_t mapped = image_[below_first + k] - below_first;
          ok = covers_[id][k] == covers_[cand][mapped];
        }
      }
      if (!ok) continue;
      image_[id] = cand;
      used_[cand] = true;
      run(id + 1, out);
      used_[cand] = false;
    }
  }

 private:
  const Universe& u_;
  std::vector<std::vector<char>> covers_;
  std::vector<std::size_t> image_;
  std::vector<bool> used_;
};

}  // namespace

AutomorphismSearch automorphism_search(std::int64_t max_rank) {
  if (max_rank < 0) throw std::invalid_argument("max_rank must be non-negative");
  if (max_rank > kAutomorphismRankCeiling)
    throw resource_error("automorphism search is limited to rank " + std::to_string(kAutomorphismRankCeiling));
  const Universe u = Universe::enumerate(max_rank);
  AutomorphismSearch out;
  out.max_rank = max_rank;
  AutomorphismSearcher(u).run(0, out);

  std::vector<std::size_t> identity(u.size()), conj(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    identity[i] = i;
    conj[i] = u.locate(conjugate(u.at(i)))->id;
  }
  for (const auto& a : out.automorphisms) {
    out.includes_identity |= a == identity;
    out.includes_conjugation |= a == conj;
  }
  return out;
}

CheckReport automorphism_check(std::int64_t max_rank) {
  const auto start = std::chrono::steady_clock::now();
  const AutomorphismSearch search = automorphism_search(max_rank);
  const Universe u = Universe::enumerate(max_rank);

  CheckReport r;
  r.name = "prop-3.3-automorphisms";
  r.variant = "graded-backtracking";
  r.range = "levels 0.." + std::to_string(max_rank) + ", rank-preserving bijections";
  r.bounds = {max_rank, 0, 0};
  r.tuples_checked = search.nodes;
  r.notes.push_back("maps are required to preserve rank; on the whole lattice this is automatic, on a truncation "
                    "it is an assumption");

  std::set<std::vector<std::size_t>> expected;
  std::vector<std::size_t> identity(u.size()), conj(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    identity[i] = i;
    conj[i] = u.locate(conjugate(u.at(i)))->id;
  }
  expected.insert(identity);
  expected.insert(conj);

  r.notes.push_back("found " + std::to_string(search.automorphisms.size()) + " automorphism(s); identity " +
                    (search.includes_identity ? "present" : "missing") + ", conjugation " +
                    (search.includes_conjugation ? "present" : "missing"));
  for (const auto& a : search.automorphisms) {
    if (expected.contains(a)) continue;
    std::vector<Partition> images;
    for (std::size_t id : a) images.push_back(u.at(id));
    r.add_mismatch({std::move(images), false, true});
  }
  if (!search.includes_identity || !search.includes_conjugation) r.add_mismatch({{}, true, false});
  r.settle();
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

// ---------------------------------------------------------------------------
// Finite posets.

FinitePoset::FinitePoset(std::vector<std::string> labels,
                         const std::vector<std::pair<std::string, std::string>>& less_than)
    : labels_(std::move(labels)), closure_(labels_.size() * labels_.size(), 0) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (!index.emplace(labels_[i], i).second) throw poset_error("duplicate element '" + labels_[i] + "'");
  const std::size_t n = labels_.size();
  for (const auto& [a, b] : less_than) {
    const auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end()) throw poset_error("unknown element '" + a + "'");
    if (ib == index.end()) throw poset_error("unknown element '" + b + "'");
    closure_[ia->second * n + ib->second] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (closure_[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (closure_[k * n + j]) closure_[i * n + j] = 1;
  for (std::size_t i = 0; i < n; ++i)
    if (closure_[i * n + i]) throw poset_error("order relation has a cycle through '" + labels_[i] + "'");
}

FinitePoset parse_poset(std::string_view text) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> pairs;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::vector<std::string> tok;
    for (std::string w; words >> w;) tok.push_back(w);
    if (tok.empty()) continue;
    const auto where = " on line " + std::to_string(lineno);
    if (tok[0] == "elem") {
      if (tok.size() < 2) throw poset_error("'elem' needs at least one name" + where);
      labels.insert(labels.end(), tok.begin() + 1, tok.end());
    } else if (tok[0] == "lt") {
      if (tok.size() != 3) throw poset_error("'lt' takes exactly two names" + where);
      pairs.emplace_back(tok[1], tok[2]);
    } else {
      throw poset_error("unknown directive '" + tok[0] + "'" + where);
    }
  }
  return FinitePoset(std::move(labels), pairs);
}

FinitePoset load_poset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw poset_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_poset(buf.str());
}

bool verify_embedding(const FinitePoset& poset, const std::vector<Partition>& images) {
  if (images.size() != poset.size()) return false;
  for (std::size_t a = 0; a < images.size(); ++a)
    for (std::size_t b = 0; b < images.size(); ++b) {
      if (a == b) continue;
      if (images[a] == images[b]) return false;
      if (poset.less(a, b) != lt(images[a], images[b])) return false;
    }
  return true;
}

namespace {

constexpr std::uint64_t kEmbeddingNodeBudget = 500'000'000;

class Embedder {
 public:
  Embedder(const FinitePoset& poset, const Universe& u) : poset_(poset), u_(u), n_(poset.size()) {
    order_ = linear_extension();
    position_.resize(n_);
    for (std::size_t k = 0; k < n_; ++k) position_[order_[k]] = k;

    // Longest chains below and above bound each image's cardinality.
    std::vector<std::int64_t> below(n_, 0), above(n_, 0);
    for (std::size_t v : order_)
      for (std::size_t w = 0; w < n_; ++w)
        if (poset_.less(w, v)) below[v] = std::max(below[v], below[w] + 1);
    for (auto it = order_.rbegin(); it != order_.rend(); ++it)
      for (std::size_t w = 0; w < n_; ++w)
        if (poset_.less(*it, w)) above[*it] = std::max(above[*it], above[w] + 1);

    // Elements with the same strict down-set and up-set are interchangeable;
    // forcing increasing ids among them removes symmetric branches.
    twin_before_.assign(n_, -1);
    for (std::size_t k = 0; k < n_; ++k)
      for (std::size_t j = k; j-- > 0;)
        if (same_neighbourhood(order_[j], order_[k])) {
          twin_before_[order_[k]] = static_cast<std::ptrdiff_t>(order_[j]);
          break;
        }

    domains_.resize(n_);
    for (std::size_t v = 0; v < n_; ++v)
      for (std::size_t id = 0; id < u_.size(); ++id) {
        const std::int64_t c = u_.at(id).cardinality();
        if (c >= below[v] && c <= u_.max_card() - above[v]) domains_[v].push_back(static_cast<std::uint32_t>(id));
      }
    image_.assign(n_, 0);
  }

  bool search(std::uint64_t& nodes) { return assign(0, domains_, nodes); }

  std::vector<Partition> images() const {
    std::vector<Partition> out;
    for (std::size_t v = 0; v < n_; ++v) out.push_back(u_.at(image_[v]));
    return out;
  }

 private:
  using Domains = std::vector<std::vector<std::uint32_t>>;

  std::vector<std::size_t> linear_extension() const {
    std::vector<std::size_t> out;
    std::vector<bool> placed(n_, false);
    while (out.size() < n_) {
      for (std::size_t v = 0; v < n_; ++v) {
        if (placed[v]) continue;
        bool ready = true;
        for (std::size_t w = 0; w < n_ && ready; ++w) ready = placed[w] || !poset_.less(w, v);
        if (ready) {
          placed[v] = true;
          out.push_back(v);
          break;
        }
      }
    }
    return out;
  }

  bool same_neighbourhood(std::size_t a, std::size_t b) const {
    for (std::size_t w = 0; w < n_; ++w) {
      if (w == a || w == b) continue;
      if (poset_.less(w, a) != poset_.less(w, b) || poset_.less(a, w) != poset_.less(b, w)) return false;
    }
    return !poset_.less(a, b) && !poset_.less(b, a);
  }

  bool consistent(std::size_t v, std::uint32_t cand, std::size_t w, std::uint32_t img) const {
    if (cand == img) return false;
    const Partition& pv = u_.at(cand);
    const Partition& pw = u_.at(img);
    return poset_.less(v, w) == lt(pv, pw) && poset_.less(w, v) == lt(pw, pv);
  }

  bool assign(std::size_t depth, const Domains& domains, std::uint64_t& nodes) {
    if (depth == n_) return true;
    const std::size_t v = order_[depth];
    for (std::uint32_t cand : domains[v]) {
      if (++nodes > kEmbeddingNodeBudget) throw resource_error("embedding search exceeded its node budget");
      if (twin_before_[v] >= 0 && cand <= image_[static_cast<std::size_t>(twin_before_[v])]) continue;
      image_[v] = cand;

      // Forward checking: shrink every later domain against the new image.
      Domains next = domains;
      bool alive = true;
      for (std::size_t k = depth + 1; k < n_ && alive; ++k) {
        const std::size_t w = order_[k];
        auto& dom = next[w];
        std::erase_if(dom, [&](std::uint32_t c) { return !consistent(w, c, v, cand); });
        alive = !dom.empty();
      }
      if (alive && hall_ok(depth + 1, next) && assign(depth + 1, next, nodes)) return true;
    }
    return false;
  }

  // The remaining variables need distinct images, so their domains together
  // must offer at least as many candidates as there are variables.
  bool hall_ok(std::size_t depth, const Domains& domains) const {
    std::set<std::uint32_t> pool;
    for (std::size_t k = depth; k < n_; ++k) pool.insert(domains[order_[k]].begin(), domains[order_[k]].end());
    return pool.size() >= n_ - depth;
  }

  const FinitePoset& poset_;
  const Universe& u_;
  std::size_t n_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> position_;
  std::vector<std::ptrdiff_t> twin_before_;
  Domains domains_;
  std::vector<std::uint32_t> image_;
};

}  // namespace

EmbeddingResult embed_poset(const FinitePoset& poset, std::int64_t max_card) {
  const Universe u = Universe::enumerate(max_card);
  EmbeddingResult result;
  result.max_card = max_card;
  Embedder embedder(poset, u);
  if (embedder.search(result.nodes)) {
    result.images = embedder.images();
    result.verified = verify_embedding(poset, *result.images);
  }
  return result;
}

}  // namespace young
