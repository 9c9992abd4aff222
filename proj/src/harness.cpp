#include "young/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "young/predicates.hpp"
#include "young/structure.hpp"

namespace young {

namespace {

using Tuples = std::vector<std::vector<Partition>>;

// ---------------------------------------------------------------------------
// Argument domains.

std::vector<Partition> all_up_to(const Universe& u, std::int64_t n) {
  const auto span = u.up_to(n);
  return {span.begin(), span.end()};
}

std::vector<Partition> totals(std::int64_t from, std::int64_t to) {
  std::vector<Partition> out;
  for (std::int64_t k = from; k <= to; ++k) out.push_back(total(k));
  return out;
}

std::vector<Partition> trivials(std::int64_t from, std::int64_t to) {
  std::vector<Partition> out;
  for (std::int64_t k = from; k <= to; ++k) out.push_back(trivial(k));
  return out;
}

Tuples singles(const std::vector<Partition>& xs) {
  Tuples out;
  for (const auto& x : xs) out.push_back({x});
  return out;
}

Tuples pairs(const std::vector<Partition>& xs, const std::vector<Partition>& ys) {
  Tuples out;
  for (const auto& x : xs)
    for (const auto& y : ys) out.push_back({x, y});
  return out;
}

Tuples triples(const std::vector<Partition>& xs, const std::vector<Partition>& ys, const std::vector<Partition>& zs) {
  Tuples out;
  for (const auto& x : xs)
    for (const auto& y : ys)
      for (const auto& z : zs) out.push_back({x, y, z});
  return out;
}

std::string card_range(const Bounds& b) { return "|pi| <= " + std::to_string(b.max_card); }

// Readings that ignore bounds and universe.
Reading fixed(std::string name, std::string description, Decider d) {
  return {std::move(name), std::move(description), [d](const Bounds&, const Universe&) { return d; }};
}

SearchScope pruned(const Bounds& b) { return {nullptr, b.slack}; }

// Antecedent lengths for the addition test depend only on (rho, pi), and a
// sweep over triples revisits each pair once per sigma.
class AdditionCache {
 public:
  explicit AdditionCache(std::int64_t slack) : slack_(slack) {}

  std::shared_ptr<const std::vector<std::int64_t>> lengths(const Partition& rho, const Partition& pi) {
    const auto key = std::make_pair(rho, pi);
    {
      std::lock_guard lock(mutex_);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    auto value = std::make_shared<const std::vector<std::int64_t>>(
        addition_witness_lengths(rho, pi, SearchScope{nullptr, slack_}));
    std::lock_guard lock(mutex_);
    return cache_.emplace(key, std::move(value)).first->second;
  }

 private:
  std::int64_t slack_;
  std::mutex mutex_;
  std::map<std::pair<Partition, Partition>, std::shared_ptr<const std::vector<std::int64_t>>> cache_;
};

Reading addition_reading(std::string name, std::string description, AddReading reading) {
  return {std::move(name), std::move(description), [reading](const Bounds& b, const Universe&) -> Decider {
            auto cache = std::make_shared<AdditionCache>(b.slack);
            return [cache, reading](Args a) {
              // Conditions (1) and (2) are cheap; only consult the cache when
              // they hold so the cache stays small.
              if (!char_total(a[0]) || !char_total(a[1]) || !char_total(a[2])) return false;
              if (!lt(a[0], a[2]) || !lt(a[1], a[2])) return false;
              return char_add_from_witnesses(a[0], a[1], a[2], *cache->lengths(a[0], a[2]), reading);
            };
          }};
}

std::vector<Proposition> build_catalog() {
  std::vector<Proposition> out;
  const PrenexClass d0{PrenexKind::kDelta, 0};
  const PrenexClass p1{PrenexKind::kPi, 1};
  const PrenexClass d2{PrenexKind::kDelta, 2};
  const PrenexClass p2{PrenexKind::kPi, 2};
  const PrenexClass p3{PrenexKind::kPi, 3};

  out.push_back({
      .name = "lemma-3.1-total",
      .claim = "pi is total iff [1]+[1] is not below pi",
      .claimed_class = d0,
      .readings = {fixed("literal", "not [1]+[1] <= pi", [](Args a) { return char_total(a[0]); })},
      .domain = [](const Bounds& b, const Universe& u) { return singles(all_up_to(u, b.max_card)); },
      .describe_range = card_range,
      .oracle = [](Args a) { return is_total(a[0]); },
  });

  out.push_back({
      .name = "lemma-3.1-trivial",
      .claim = "pi is trivial iff [2] is not below pi",
      .claimed_class = p1,
      .readings = {fixed("literal", "not [2] <= pi", [](Args a) { return char_trivial(a[0]); })},
      .domain = [](const Bounds& b, const Universe& u) { return singles(all_up_to(u, b.max_card)); },
      .describe_range = card_range,
      .oracle = [](Args a) { return is_trivial(a[0]); },
  });

  out.push_back({
      .name = "lemma-3.2-rectangular",
      .claim = "pi is rectangular iff it has at most one lower cover",
      .claimed_class = d2,
      .readings = {{"literal", "lower covers found by filtering the level below",
                    [](const Bounds&, const Universe& u) -> Decider {
                      return [&u](Args a) { return char_rectangular(a[0], u); };
                    }}},
      .domain = [](const Bounds& b, const Universe& u) { return singles(all_up_to(u, b.max_card)); },
      .describe_range = card_range,
      .oracle = [](Args a) { return is_rectangular(a[0]); },
  });

  out.push_back({
      .name = "lemma-3.4-length",
      .claim = "l(pi) = m iff m[1] <= pi and (m+1)[1] is not below pi",
      .claimed_class = p1,
      .readings = {fixed("literal", "m[1] <= pi, not (m+1)[1] <= pi",
                         [](Args a) { return length_equals(a[0], a[1]); })},
      .domain =
          [](const Bounds& b, const Universe& u) {
            return pairs(trivials(0, b.aux_card), all_up_to(u, b.max_card));
          },
      .describe_range =
          [](const Bounds& b) {
            return "rho = m[1] with m <= " + std::to_string(b.aux_card) + ", " + card_range(b);
          },
      .oracle = [](Args a) { return a[1].length() == a[0].length(); },
      .outside_hypotheses = [](Args a) { return a[0].empty(); },
      .boundary_note = "m = 0 lies outside the claim, which takes m >= 1",
  });

  out.push_back({
      .name = "lemma-3.4-bounded-parts",
      .claim = "every part of pi is at most n iff [n+1] is not below pi",
      .claimed_class = d0,
      .readings = {fixed("literal", "not [n+1] <= pi", [](Args a) { return char_bounded_parts(a[0], a[1]); })},
      .domain =
          [](const Bounds& b, const Universe& u) { return pairs(totals(0, b.aux_card), all_up_to(u, b.max_card)); },
      .describe_range =
          [](const Bounds& b) { return "rho = [n] with n <= " + std::to_string(b.aux_card) + ", " + card_range(b); },
      .oracle = [](Args a) { return has_bounded_parts(a[0], a[1]); },
  });

  out.push_back({
      .name = "lemma-3.4-rectangular-triple",
      .claim = "pi = n[m] iff pi is rectangular with b(pi) = m and l(pi) = n, for rho = [m], sigma = n[1]",
      .claimed_class = d2,
      .readings = {{"literal", "rectangularity via lower covers, sizes via order queries",
                    [](const Bounds&, const Universe& u) -> Decider {
                      return [&u](Args a) { return char_rectangular_triple(a[0], a[1], a[2], u); };
                    }}},
      .domain =
          [](const Bounds& b, const Universe& u) {
            return triples(totals(0, b.aux_card), trivials(0, b.aux_card), all_up_to(u, b.max_card));
          },
      .describe_range =
          [](const Bounds& b) {
            return "rho = [m], sigma = n[1] with m, n <= " + std::to_string(b.aux_card) + ", " + card_range(b);
          },
      .oracle = [](Args a) { return is_rectangular_triple(a[0], a[1], a[2]); },
      .outside_hypotheses = [](Args a) { return a[0].empty() || a[1].empty(); },
      .boundary_note = "m = 0 or n = 0: the oracle reads n[m] as the degenerate rectangle, while the "
                       "characterization reads b(pi) = m and l(pi) = n literally",
  });

  out.push_back({
      .name = "prop-3.5-distinct",
      .claim = "the parts of pi are distinct iff no s[n] <= pi with s[n+1] not below pi has (s+1)[n] <= pi",
      .claimed_class = p2,
      .readings = {fixed("literal", "rectangles s[n] built for s < l(pi), n <= b(pi)",
                         [](Args a) { return char_distinct_parts(a[0]); })},
      .domain = [](const Bounds& b, const Universe& u) { return singles(all_up_to(u, b.max_card)); },
      .describe_range = card_range,
      .oracle = [](Args a) { return has_distinct_parts(a[0]); },
  });

  out.push_back({
      .name = "prop-3.6-part-of",
      .claim = "[n] is a part of pi iff [n] <= pi and, for the r with r[n] <= pi and (r+1)[n] not below pi, "
               "the row above behaves as the reading says",
      .claimed_class = p2,
      .readings = {fixed("A", "then r[n+1] <= pi",
                         [](Args a) { return char_part_of(a[0], a[1], PartOfReading::kRowAboveFits); }),
                   fixed("B", "then r[n+1] is not below pi",
                         [](Args a) { return char_part_of(a[0], a[1], PartOfReading::kRowAboveMisses); })},
      .primary = 1,
      .exactly_one_reading_passes = true,
      .domain =
          [](const Bounds& b, const Universe& u) { return pairs(totals(1, b.aux_card), all_up_to(u, b.max_card)); },
      .describe_range =
          [](const Bounds& b) {
            return "rho = [n] with 1 <= n <= " + std::to_string(b.aux_card) + ", " + card_range(b);
          },
      .oracle = [](Args a) { return is_part_of(a[0], a[1]); },
  });

  out.push_back({
      .name = "prop-3.7-factorial",
      .claim = "pi = [n]! iff b(pi) = n, every [r] with r <= n is a part of pi, and the parts are distinct",
      .claimed_class = p2,
      .readings = {fixed("literal", "three conditions, parts tested with reading B",
                         [](Args a) { return char_factorial(a[0], a[1]); })},
      .domain =
          [](const Bounds& b, const Universe& u) { return pairs(totals(0, b.aux_card), all_up_to(u, b.max_card)); },
      .describe_range =
          [](const Bounds& b) { return "rho = [n] with n <= " + std::to_string(b.aux_card) + ", " + card_range(b); },
      .oracle = [](Args a) { return is_factorial(a[0], a[1]); },
  });

  out.push_back({
      .name = "lemma-3.8-equal-height",
      .claim = "|[r]| = |m[1]| iff l([r]!) = m",
      .claimed_class = p3,
      .readings = {fixed("literal", "length of the staircase [r]! equals m",
                         [](Args a) { return char_same_height_total_trivial(a[0], a[1]); })},
      .domain = [](const Bounds& b, const Universe&) { return pairs(totals(0, b.max_card), trivials(0, b.max_card)); },
      .describe_range =
          [](const Bounds& b) { return "rho = [r], pi = m[1] with r, m <= " + std::to_string(b.max_card); },
      .oracle = [](Args a) { return same_height_total_trivial(a[0], a[1]); },
  });

  out.push_back({
      .name = "prop-3.9-add",
      .claim = "|rho| + |sigma| = |pi| for totals iff rho, sigma < pi and every beta* whose parts are exactly "
               "the [i] with rho < [i] <= pi has the reading's length",
      .claimed_class = p3,
      .readings = {addition_reading("exactly", "l(beta*) = |sigma|", AddReading::kExactly),
                   addition_reading("at-least", "l(beta*) >= |sigma|", AddReading::kAtLeast)},
      .uses_slack = true,
      .domain =
          [](const Bounds& b, const Universe&) {
            const auto t = totals(0, b.max_card);
            return triples(t, t, t);
          },
      .describe_range =
          [](const Bounds& b) {
            return "totals rho, sigma, pi with cardinality <= " + std::to_string(b.max_card) +
                   "; beta* parts up to b(pi) + " + std::to_string(b.slack);
          },
      .oracle = [](Args a) { return add_triple(a[0], a[1], a[2]); },
      .outside_hypotheses = [](Args a) { return a[0].empty() || a[1].empty(); },
      .boundary_note = "identity triples with rho or sigma empty; the strict comparisons rho, sigma < pi exclude them",
  });

  out.push_back({
      .name = "prop-3.10-frequency",
      .claim = "[r] occurs exactly n times in pi iff pi = n[r] or [r] is a part with the largest r-rectangle "
               "below pi exceeding every larger part's rectangle by the reading's margin",
      .claimed_class = p3,
      .readings = {{"exactly", "n <= m - t for every larger part beta*, with equality for one",
                    [](const Bounds& b, const Universe&) -> Decider {
                      return [s = b.slack](Args a) {
                        return char_frequency(a[0], a[1], a[2], FrequencyReading::kExactly, s);
                      };
                    }},
                   {"at-most", "n <= m - t for every larger part beta*",
                    [](const Bounds& b, const Universe&) -> Decider {
                      return [s = b.slack](Args a) {
                        return char_frequency(a[0], a[1], a[2], FrequencyReading::kAtMost, s);
                      };
                    }}},
      .uses_slack = true,
      .domain =
          [](const Bounds& b, const Universe& u) {
            return triples(totals(1, b.aux_card), totals(1, b.aux_card), all_up_to(u, b.max_card));
          },
      .describe_range =
          [](const Bounds& b) {
            return "rho = [r], sigma = [n] with 1 <= r, n <= " + std::to_string(b.aux_card) + ", " + card_range(b) +
                   "; candidate parts up to b(pi) + " + std::to_string(b.slack);
          },
      .oracle = [](Args a) { return part_frequency(a[0], a[1], a[2]); },
  });

  out.push_back({
      .name = "prop-3.11-height-geq",
      .claim = "|pi| >= |rho| iff every sigma satisfying the witness condition for pi has l(sigma) >= |rho|",
      .claimed_class = p3,
      .readings = {{"literal", "pruned search for a witness sigma shorter than |rho|",
                    [](const Bounds& b, const Universe&) -> Decider {
                      return [scope = pruned(b)](Args a) { return char_height_geq(a[0], a[1], scope); };
                    }}},
      .uses_slack = true,
      .domain =
          [](const Bounds& b, const Universe& u) { return pairs(totals(0, b.aux_card), all_up_to(u, b.max_card)); },
      .describe_range =
          [](const Bounds& b) {
            return "rho total with |rho| <= " + std::to_string(b.aux_card) + ", " + card_range(b);
          },
      .oracle = [](Args a) { return height_geq(a[0], a[1]); },
  });

  out.push_back({
      .name = "prop-3.12-height-eq",
      .claim = "|pi| = |rho| iff |pi| >= |rho| and not |pi| >= |rho| + 1",
      .claimed_class = p3,
      .readings = {{"literal", "two height comparisons",
                    [](const Bounds& b, const Universe&) -> Decider {
                      return [scope = pruned(b)](Args a) { return char_height_eq(a[0], a[1], scope); };
                    }}},
      .uses_slack = true,
      .domain =
          [](const Bounds& b, const Universe& u) { return pairs(totals(0, b.aux_card), all_up_to(u, b.max_card)); },
      .describe_range =
          [](const Bounds& b) {
            return "rho total with |rho| <= " + std::to_string(b.aux_card) + ", " + card_range(b);
          },
      .oracle = [](Args a) { return height_eq(a[0], a[1]); },
  });

  out.push_back({
      .name = "prop-3.13-mult",
      .claim = "|rho| * |sigma| = |pi| for totals iff |pi| equals the height of the rectangle |rho|[|sigma|]",
      .claimed_class = p3,
      .readings = {{"literal", "height equality against b(rho)[b(sigma)]",
                    [](const Bounds& b, const Universe&) -> Decider {
                      return [scope = pruned(b)](Args a) { return char_mult(a[0], a[1], a[2], scope); };
                    }}},
      .uses_slack = true,
      .domain =
          [](const Bounds& b, const Universe&) {
            const auto t = totals(0, b.max_card);
            return triples(t, t, t);
          },
      .describe_range =
          [](const Bounds& b) { return "totals rho, sigma, pi with cardinality <= " + std::to_string(b.max_card); },
      .oracle = [](Args a) { return mult_triple(a[0], a[1], a[2]); },
  });

  return out;
}

// ---------------------------------------------------------------------------
// Sweeping.

struct BlockResult {
  std::uint64_t checked = 0;
  std::uint64_t flips = 0;
  CheckReport partial;  // only mismatch and boundary fields are used
};

unsigned worker_count(const SweepOptions& opt) {
  if (opt.threads > 0) return opt.threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

CheckReport sweep(const Proposition& p, const Reading& reading, const Bounds& bounds, const Universe& universe,
                  const Tuples& tuples, const SweepOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  CheckReport report;
  report.name = p.name;
  report.variant = reading.name;
  report.range = p.describe_range(bounds);
  report.bounds = bounds;
  report.boundary_note = p.boundary_note;
  report.notes.push_back(reading.description);

  const Decider characterization = reading.make(bounds, universe);
  Decider next;
  if (p.uses_slack && opt.check_stability) {
    Bounds up = bounds;
    ++up.slack;
    next = reading.make(up, universe);
  }

  // Small blocks handed out dynamically; results are merged in block order,
  // so the report does not depend on scheduling.
  constexpr std::size_t kBlock = 64;
  const std::size_t blocks = (tuples.size() + kBlock - 1) / kBlock;
  std::vector<BlockResult> results(blocks);
  std::atomic<std::size_t> cursor{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    try {
      for (std::size_t blk = cursor++; blk < blocks; blk = cursor++) {
        BlockResult& out = results[blk];
        const std::size_t end = std::min(tuples.size(), (blk + 1) * kBlock);
        for (std::size_t i = blk * kBlock; i < end; ++i) {
          const Args args(tuples[i]);
          Witness w{tuples[i], p.oracle(args), characterization(args)};
          ++out.checked;
          if (next && next(args) != w.characterization) ++out.flips;
          if (p.outside_hypotheses && p.outside_hypotheses(args))
            out.partial.add_boundary(std::move(w));
          else if (w.oracle != w.characterization)
            out.partial.add_mismatch(std::move(w));
        }
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      cursor = blocks;
    }
  };

  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(opt), std::max<std::size_t>(blocks, 1)));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  std::uint64_t flips = 0;
  for (auto& r : results) {
    report.tuples_checked += r.checked;
    flips += r.flips;
    report.mismatch_count += r.partial.mismatch_count;
    report.boundary_count += r.partial.boundary_count;
    report.boundary_disagreements += r.partial.boundary_disagreements;
    for (auto& w : r.partial.mismatches)
      if (report.mismatches.size() < CheckReport::kWitnessCap) report.mismatches.push_back(std::move(w));
    for (auto& w : r.partial.boundary)
      if (report.boundary.size() < CheckReport::kWitnessCap) report.boundary.push_back(std::move(w));
  }
  if (next) report.stability_flips = flips;
  report.settle();
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::kFail || b == Verdict::kFail) return Verdict::kFail;
  if (a == Verdict::kUnstable || b == Verdict::kUnstable) return Verdict::kUnstable;
  return Verdict::kPass;
}

Profile make_profile(std::string name, std::map<std::string, Bounds> bounds, std::int64_t recon, std::int64_t rank) {
  return {std::move(name), std::move(bounds), recon, rank};
}

std::vector<Profile> build_profiles() {
  // {max_card, aux_card, slack}
  return {
      make_profile("quick",
                   {{"lemma-3.1-total", {10, 0, 0}},
                    {"lemma-3.1-trivial", {10, 0, 0}},
                    {"lemma-3.2-rectangular", {10, 0, 0}},
                    {"lemma-3.4-length", {10, 10, 0}},
                    {"lemma-3.4-bounded-parts", {10, 10, 0}},
                    {"lemma-3.4-rectangular-triple", {10, 6, 0}},
                    {"prop-3.5-distinct", {10, 0, 0}},
                    {"prop-3.6-part-of", {10, 10, 0}},
                    {"prop-3.7-factorial", {10, 5, 0}},
                    {"lemma-3.8-equal-height", {10, 0, 0}},
                    {"prop-3.9-add", {8, 0, 0}},
                    {"prop-3.10-frequency", {10, 10, 0}},
                    {"prop-3.11-height-geq", {8, 8, 0}},
                    {"prop-3.12-height-eq", {8, 8, 0}},
                    {"prop-3.13-mult", {10, 0, 0}}},
                   10, 6),
      make_profile("standard",
                   {{"lemma-3.1-total", {25, 0, 0}},
                    {"lemma-3.1-trivial", {25, 0, 0}},
                    {"lemma-3.2-rectangular", {25, 0, 0}},
                    {"lemma-3.4-length", {20, 20, 0}},
                    {"lemma-3.4-bounded-parts", {20, 20, 0}},
                    {"lemma-3.4-rectangular-triple", {15, 10, 0}},
                    {"prop-3.5-distinct", {20, 0, 0}},
                    {"prop-3.6-part-of", {18, 18, 1}},
                    {"prop-3.7-factorial", {15, 5, 0}},
                    {"lemma-3.8-equal-height", {25, 0, 0}},
                    {"prop-3.9-add", {12, 0, 0}},
                    {"prop-3.10-frequency", {15, 15, 0}},
                    {"prop-3.11-height-geq", {12, 12, 0}},
                    {"prop-3.12-height-eq", {12, 12, 0}},
                    {"prop-3.13-mult", {20, 0, 0}}},
                   25, 8),
      make_profile("thorough",
                   {{"lemma-3.1-total", {35, 0, 0}},
                    {"lemma-3.1-trivial", {35, 0, 0}},
                    {"lemma-3.2-rectangular", {30, 0, 0}},
                    {"lemma-3.4-length", {25, 25, 0}},
                    {"lemma-3.4-bounded-parts", {25, 25, 0}},
                    {"lemma-3.4-rectangular-triple", {20, 12, 0}},
                    {"prop-3.5-distinct", {25, 0, 0}},
                    {"prop-3.6-part-of", {22, 22, 1}},
                    {"prop-3.7-factorial", {21, 6, 0}},
                    {"lemma-3.8-equal-height", {40, 0, 0}},
                    {"prop-3.9-add", {16, 0, 1}},
                    {"prop-3.10-frequency", {18, 18, 1}},
                    {"prop-3.11-height-geq", {15, 15, 1}},
                    {"prop-3.12-height-eq", {15, 15, 1}},
                    {"prop-3.13-mult", {25, 0, 0}}},
                   30, 10),
  };
}

}  // namespace

const std::vector<Proposition>& propositions() {
  static const std::vector<Proposition> catalog = build_catalog();
  return catalog;
}

const Proposition& find_proposition(const std::string& name) {
  for (const auto& p : propositions())
    if (p.name == name) return p;
  throw std::invalid_argument("unknown proposition '" + name + "'");
}

PropositionReport check_proposition(const Proposition& prop, const Bounds& bounds, const SweepOptions& options) {
  if (bounds.max_card < 0 || bounds.aux_card < 0 || bounds.slack < 0)
    throw std::invalid_argument("bounds must be non-negative");
  const Universe universe = Universe::enumerate(std::max(bounds.max_card, bounds.aux_card) + bounds.slack + 1);
  const Tuples tuples = prop.domain(bounds, universe);

  PropositionReport report;
  report.name = prop.name;
  report.claim = prop.claim;
  report.claimed_class = prop.claimed_class;
  report.primary_variant = prop.readings.at(prop.primary).name;
  for (const auto& reading : prop.readings)
    report.variants.push_back(sweep(prop, reading, bounds, universe, tuples, options));

  report.verdict = report.primary().verdict;
  if (prop.exactly_one_reading_passes) {
    std::vector<std::string> passing;
    for (const auto& r : report.variants)
      if (r.verdict == Verdict::kPass) passing.push_back(r.variant);
    if (passing.size() == 1) {
      report.notes.push_back("exactly one reading agrees with the oracle: " + passing.front());
      if (passing.front() != report.primary_variant) report.verdict = Verdict::kFail;
    } else {
      report.notes.push_back(std::to_string(passing.size()) + " readings agree with the oracle; expected exactly one");
      report.verdict = Verdict::kFail;
    }
  }
  for (const auto& r : report.variants)
    if (r.variant != report.primary_variant && r.verdict != Verdict::kPass)
      report.notes.push_back("alternative reading '" + r.variant + "' disagrees on " +
                             std::to_string(r.mismatch_count) + " tuples (informational)");
  return report;
}

const Profile& find_profile(const std::string& name) {
  static const std::vector<Profile> all = build_profiles();
  for (const auto& p : all)
    if (p.name == name) return p;
  throw std::invalid_argument("unknown profile '" + name + "' (expected quick, standard or thorough)");
}

std::vector<std::string> profile_names() { return {"quick", "standard", "thorough"}; }

AggregateReport check_all(const Profile& profile, const SweepOptions& options) {
  AggregateReport out;
  out.profile = profile.name;
  for (const auto& prop : propositions()) {
    const auto it = profile.propositions.find(prop.name);
    if (it == profile.propositions.end())
      throw std::logic_error("profile " + profile.name + " has no bounds for " + prop.name);
    out.propositions.push_back(check_proposition(prop, it->second, options));
    out.verdict = combine(out.verdict, out.propositions.back().verdict);
  }
  out.structural.push_back(reconstruction_check(profile.reconstruction_max_card));
  out.structural.push_back(automorphism_check(profile.automorphism_max_rank));
  for (const auto& r : out.structural) out.verdict = combine(out.verdict, r.verdict);
  return out;
}

}  // namespace young
