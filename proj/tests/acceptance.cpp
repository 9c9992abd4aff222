// Acceptance run: one PASS/FAIL line per criterion. Sweeps go through the
// harness; where it is cheap, the same claim is rechecked directly against
// the reference computations in oracles.hpp, which share no code with the
// library.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "young/arithmetization.hpp"
#include "young/evaluator.hpp"
#include "young/harness.hpp"
#include "young/predicates.hpp"
#include "young/prenex.hpp"
#include "young/structure.hpp"

using namespace young;

namespace {

// Bounds and time limits, fixed here rather than taken from a profile.
constexpr int kLevelBound = 40;
constexpr double kLevelSeconds = 5;
constexpr std::int64_t kTotalTrivialBound = 25;
constexpr double kTotalTrivialSeconds = 5;
constexpr std::int64_t kRectangularBound = 25;
constexpr double kRectangularSeconds = 10;
constexpr std::int64_t kDistinctBound = 20;
constexpr std::int64_t kPartOfBound = 18;
constexpr std::int64_t kFrequencyBound = 15;
constexpr std::int64_t kFactorialAux = 5;
constexpr std::int64_t kFactorialBound = 15;
constexpr std::int64_t kAddBound = 12;
constexpr std::int64_t kHeightBound = 12;
constexpr std::int64_t kWitnessSumBound = 15;
constexpr std::int64_t kMultBound = 20;
constexpr std::int64_t kReconstructionBound = 25;
constexpr double kReconstructionSeconds = 30;
constexpr std::int64_t kAutomorphismRank = 8;
constexpr double kAutomorphismSeconds = 60;
constexpr std::int64_t kEncodeCardBound = 15;
constexpr std::uint64_t kDecodeBound = 1'000'000;
constexpr std::int64_t kOrdBound = 12;
constexpr std::int64_t kBridgeBound = 30;
constexpr std::int64_t kCoverBound = 15;
constexpr std::int64_t kDefinedSetBound = 20;
constexpr std::int64_t kEmbedAntichainBound = 4;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double time_limit, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail << " [exception: " << e.what() << "]";
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (time_limit > 0 && seconds >= time_limit) {
    out.ok = false;
    out.detail << " [over time limit " << time_limit << " s]";
  }
  if (!out.ok) ++failures;
  std::printf("%s %2d  %s (%.2f s)%s\n", out.ok ? "PASS" : "FAIL", id, title.c_str(), seconds,
              out.detail.str().c_str());
  std::fflush(stdout);
}

void info(const std::string& line) { std::printf("     info: %s\n", line.c_str()); }

Partition from_vec(const oracle::Parts& v) { return Partition::from_parts(std::span<const std::int64_t>(v)); }

std::vector<oracle::Parts> oracle_up_to(std::int64_t n) {
  std::vector<oracle::Parts> out;
  for (std::int64_t k = 0; k <= n; ++k)
    for (auto& v : oracle::partitions(k)) out.push_back(std::move(v));
  return out;
}

PropositionReport sweep(const std::string& name, Bounds b) { return check_proposition(find_proposition(name), b); }

void require_clean(Outcome& out, const PropositionReport& r) {
  const CheckReport& p = r.primary();
  out.require(r.verdict == Verdict::kPass, r.name + " verdict " + to_string(r.verdict));
  out.require(p.mismatch_count == 0, r.name + " has " + std::to_string(p.mismatch_count) + " mismatches");
  if (p.stability_flips) out.require(*p.stability_flips == 0, r.name + " flips under slack + 1");
  out.detail << " " << r.name << ": " << p.tuples_checked << " tuples;";
}

std::int64_t count_of(const oracle::Parts& p, std::int64_t x) { return std::count(p.begin(), p.end(), x); }

std::string corpus_path(const std::string& rel) { return std::string(CORPUS_DIR) + "/" + rel; }

}  // namespace

int main() {
  criterion(1, "level sizes agree with the pentagonal recurrence up to 40", kLevelSeconds, [](Outcome& out) {
    const auto p = oracle::partition_counts(kLevelBound);
    const Universe u = Universe::enumerate(kLevelBound);
    for (int n = 0; n <= kLevelBound; ++n)
      out.require(u.level(n).size() == p[static_cast<std::size_t>(n)], "level " + std::to_string(n));
    out.detail << " " << u.size() << " partitions";
  });

  criterion(2, "total and trivial characterizations up to 25", kTotalTrivialSeconds, [](Outcome& out) {
    require_clean(out, sweep("lemma-3.1-total", {kTotalTrivialBound, 0, 0}));
    require_clean(out, sweep("lemma-3.1-trivial", {kTotalTrivialBound, 0, 0}));
    std::size_t bad = 0;
    for (const auto& v : oracle_up_to(kTotalTrivialBound)) {
      const Partition p = from_vec(v);
      bad += char_total(p) != (v.size() <= 1);
      bad += char_trivial(p) != std::all_of(v.begin(), v.end(), [](auto x) { return x == 1; });
    }
    out.require(bad == 0, "direct oracle recheck");
  });

  criterion(3, "unique lower cover iff rectangular up to 25", kRectangularSeconds, [](Outcome& out) {
    require_clean(out, sweep("lemma-3.2-rectangular", {kRectangularBound, 0, 0}));
    const Universe u = Universe::enumerate(kRectangularBound);
    std::size_t bad = 0;
    for (const auto& v : oracle_up_to(kRectangularBound)) {
      const bool rect = v.empty() || v.front() == v.back();
      bad += char_rectangular(from_vec(v), u) != rect;
    }
    out.require(bad == 0, "direct oracle recheck");
  });

  criterion(4, "distinct parts up to 20", 0, [](Outcome& out) {
    require_clean(out, sweep("prop-3.5-distinct", {kDistinctBound, 0, 0}));
    std::size_t bad = 0;
    for (const auto& v : oracle_up_to(kDistinctBound))
      bad += char_distinct_parts(from_vec(v)) != (std::adjacent_find(v.begin(), v.end()) == v.end());
    out.require(bad == 0, "direct oracle recheck");
  });

  criterion(5, "part membership: exactly one polarity passes up to 18", 0, [](Outcome& out) {
    const auto r = sweep("prop-3.6-part-of", {kPartOfBound, kPartOfBound, 1});
    std::vector<std::string> passing;
    for (const auto& v : r.variants) {
      if (v.verdict == Verdict::kPass) passing.push_back(v.variant);
      info("part-of reading " + v.variant + ": " + std::to_string(v.mismatch_count) + " mismatches of " +
           std::to_string(v.tuples_checked));
    }
    out.require(passing.size() == 1, "exactly one reading passes");
    out.require(r.verdict == Verdict::kPass, "proposition verdict");
    if (passing.size() == 1) out.detail << " passing reading: " << passing.front() << ";";
    // independent recheck of the passing polarity
    std::size_t bad = 0;
    for (const auto& v : oracle_up_to(kPartOfBound))
      for (std::int64_t n = 1; n <= kPartOfBound; ++n)
        bad += char_part_of(total(n), from_vec(v), PartOfReading::kRowAboveMisses) != (count_of(v, n) > 0);
    out.require(bad == 0, "direct oracle recheck");
  });

  criterion(6, "part frequency up to 15", 0, [](Outcome& out) {
    const auto r = sweep("prop-3.10-frequency", {kFrequencyBound, kFrequencyBound, 0});
    require_clean(out, r);
    info("frequency reading at-most: " + std::to_string(r.variant("at-most").mismatch_count) + " mismatches");
    std::size_t bad = 0;
    for (const auto& v : oracle_up_to(kFrequencyBound)) {
      const Partition p = from_vec(v);
      for (std::int64_t part = 1; part <= kFrequencyBound; ++part)
        for (std::int64_t n = 1; n <= kFrequencyBound; ++n)
          bad += char_frequency(total(part), total(n), p) != (count_of(v, part) == n);
    }
    out.require(bad == 0, "direct oracle recheck");
  });

  criterion(7, "factorial partitions, |rho| <= 5 and |pi| <= 15", 0, [](Outcome& out) {
    require_clean(out, sweep("prop-3.7-factorial", {kFactorialBound, kFactorialAux, 0}));
    std::size_t bad = 0;
    for (const auto& v : oracle_up_to(kFactorialBound))
      for (std::int64_t n = 0; n <= kFactorialAux; ++n) {
        oracle::Parts stair;
        for (std::int64_t k = n; k >= 1; --k) stair.push_back(k);
        bad += char_factorial(total(n), from_vec(v)) != (v == stair);
      }
    out.require(bad == 0, "direct oracle recheck");
  });

  criterion(8, "addition on total triples up to 12, identity triples as boundary", 0, [](Outcome& out) {
    const auto r = sweep("prop-3.9-add", {kAddBound, 0, 0});
    require_clean(out, r);
    const CheckReport& p = r.primary();
    out.require(p.boundary_count > 0, "boundary tuples reported");
    out.detail << " boundary: " << p.boundary_count << " tuples, " << p.boundary_disagreements << " disagreements;";
    info("addition reading at-least: " + std::to_string(r.variant("at-least").mismatch_count) + " mismatches");
    for (std::int64_t r0 = 1; r0 <= kAddBound; ++r0)
      for (std::int64_t s = 1; s <= kAddBound; ++s)
        for (std::int64_t t = 0; t <= kAddBound; ++t)
          if (char_add(total(r0), total(s), total(t)) != (r0 + s == t)) {
            out.require(false, "direct recheck at " + std::to_string(r0) + "," + std::to_string(s));
            return;
          }
  });

  criterion(9, "height comparison and equality up to 12; witness sums up to 15", 0, [](Outcome& out) {
    require_clean(out, sweep("prop-3.11-height-geq", {kHeightBound, kHeightBound, 0}));
    require_clean(out, sweep("prop-3.12-height-eq", {kHeightBound, kHeightBound, 0}));
    std::size_t bad = 0;
    for (const auto& v : oracle_up_to(kHeightBound))
      for (std::int64_t r = 0; r <= kHeightBound; ++r) {
        bad += char_height_geq(total(r), from_vec(v)) != (oracle::sum(v) >= r);
        bad += char_height_eq(total(r), from_vec(v)) != (oracle::sum(v) == r);
      }
    out.require(bad == 0, "direct oracle recheck");
    std::size_t witness_bad = 0;
    for (const auto& v : oracle_up_to(kWitnessSumBound)) {
      const Partition pi = from_vec(v);
      const Partition s = factorial_sum(pi);
      witness_bad += !satisfies_witness_condition(s, pi) || s.length() != oracle::sum(v);
    }
    out.require(witness_bad == 0, "factorial sum witnesses");
  });

  criterion(10, "multiplication on total triples up to 20", 0, [](Outcome& out) {
    require_clean(out, sweep("prop-3.13-mult", {kMultBound, 0, 0}));
  });

  criterion(11, "lower covers determine partitions on levels 4..25", kReconstructionSeconds, [](Outcome& out) {
    const CheckReport r = reconstruction_check(kReconstructionBound);
    out.require(r.verdict == Verdict::kPass, "reconstruction verdict");
    out.require(r.mismatch_count == 0, "collisions at levels >= 4");
    const auto levels = fingerprint_levels(Universe::enumerate(4));
    out.require(levels[2].collisions.size() == 1 && levels[2].collisions[0].size() == 2, "level 2 collision");
    out.require(levels[3].injective(), "level 3 injective");
    out.detail << " " << r.tuples_checked << " partitions fingerprinted;";
  });

  criterion(12, "automorphisms up to rank 8 are identity and conjugation", kAutomorphismSeconds, [](Outcome& out) {
    const AutomorphismSearch s = automorphism_search(kAutomorphismRank);
    out.require(s.automorphisms.size() == 2, "exactly two automorphisms");
    out.require(s.includes_identity, "identity found");
    out.require(s.includes_conjugation, "conjugation found");
    out.detail << " " << s.nodes << " search nodes;";
  });

  criterion(13, "arithmetization: round trips, order and arithmetic bridge", 0, [](Outcome& out) {
    std::size_t bad = 0;
    std::set<BigInt> codes;
    for (const auto& v : oracle_up_to(kEncodeCardBound)) {
      const Partition s = from_vec(v);
      const BigInt e = encode(s);
      bad += decode(e) != s;
      bad += !codes.insert(e).second;
    }
    out.require(bad == 0, "partition round trip");
    for (std::uint64_t n = 0; n <= kDecodeBound; ++n)
      if (encode(decode(n)) != n) {
        out.require(false, "integer round trip at " + std::to_string(n));
        break;
      }
    const auto small = oracle_up_to(kOrdBound);
    std::vector<BigInt> enc;
    for (const auto& v : small) enc.push_back(encode(from_vec(v)));
    std::size_t ord_bad = 0;
    for (std::size_t i = 0; i < small.size(); ++i)
      for (std::size_t j = 0; j < small.size(); ++j)
        ord_bad += ord_via_encoding(enc[i], enc[j]) != oracle::contained(small[i], small[j]);
    out.require(ord_bad == 0, "ord via encoding");
    std::size_t bridge_bad = 0;
    for (std::int64_t m = 0; m <= kBridgeBound; ++m)
      for (std::int64_t n = 0; n <= kBridgeBound; ++n)
        for (std::int64_t r = 0; r <= kBridgeBound; ++r) {
          bridge_bad += add_triple(total(m), total(n), total(r)) != (m + n == r);
          bridge_bad += mult_triple(total(m), total(n), total(r)) != (m * n == r);
        }
    out.require(bridge_bad == 0, "bridge");
    out.detail << " " << codes.size() << " partitions, " << small.size() * small.size() << " ordered pairs;";
  });

  criterion(14, "formula engine: cover formula, classes, defined sets, corpus stability", 0, [](Outcome& out) {
    const FormulaPtr cover = load_formula_file(corpus_path("cover.fo")).formula;
    out.require(prenex_classify(*cover) == PrenexClass{PrenexKind::kPi, 1}, "cover formula is Pi 1");
    out.require(prenex_classify(*parse_formula("x <= y")) == PrenexClass{PrenexKind::kDelta, 0}, "atom is Delta 0");
    out.require(prenex_classify(*parse_formula("!(x = y)")) == PrenexClass{PrenexKind::kDelta, 0},
                "negated atom is Delta 0");

    const Universe u = Universe::enumerate(kDefinedSetBound + 4);
    const auto rel = defined_relation(*cover, {"x", "y"}, u, {kCoverBound, 1});
    std::set<std::pair<oracle::Parts, oracle::Parts>> got, expected;
    for (const auto& t : rel) got.emplace(t[0].parts(), t[1].parts());
    const auto all = oracle_up_to(kCoverBound);
    for (const auto& a : all)
      for (const auto& b : all)
        if (oracle::sum(a) + 1 == oracle::sum(b) && oracle::contained(a, b)) expected.emplace(a, b);
    out.require(got == expected, "cover relation");
    out.detail << " " << got.size() << " cover pairs;";

    const FormulaPtr tot = load_formula_file(corpus_path("total.fo")).formula;
    const FormulaPtr triv = load_formula_file(corpus_path("trivial.fo")).formula;
    std::vector<Partition> totals, trivials;
    for (const auto& v : oracle_up_to(kDefinedSetBound)) {
      if (v.size() <= 1) totals.push_back(from_vec(v));
      if (std::all_of(v.begin(), v.end(), [](auto x) { return x == 1; })) trivials.push_back(from_vec(v));
    }
    auto sorted = [](std::vector<Partition> v) {
      std::sort(v.begin(), v.end());
      return v;
    };
    out.require(sorted(defined_set(*tot, "x", u, {kDefinedSetBound, 1})) == sorted(totals), "total set");
    out.require(sorted(defined_set(*triv, "x", u, {kDefinedSetBound, 1})) == sorted(trivials), "trivial set");

    std::size_t files = 0;
    const Universe small = Universe::enumerate(10);
    for (const auto& entry : std::filesystem::directory_iterator(CORPUS_DIR)) {
      if (entry.path().extension() != ".fo") continue;
      ++files;
      const FormulaPtr f = load_formula_file(entry.path().string()).formula;
      const auto free = free_variables(*f);
      const auto report = stability_check(*f, {free.begin(), free.end()}, small, {6, 0}, {0, 1, 2, 3});
      out.require(report.stable(), entry.path().filename().string() + " stable");
    }
    out.require(files >= 5, "corpus present");
    out.detail << " " << files << " corpus formulas stable at slacks 0..3;";
  });

  criterion(15, "poset embeddings", 0, [](Outcome& out) {
    auto embed = [&](const std::string& file, std::int64_t max_card) {
      const FinitePoset poset = load_poset(corpus_path("posets/" + file));
      const EmbeddingResult r = embed_poset(poset, max_card);
      if (r.images) out.require(verify_embedding(poset, *r.images), file + " independently verified");
      return r;
    };
    const auto chain = embed("chain5.poset", 6);
    out.require(chain.images && chain.verified, "chain embeds");
    if (chain.images)
      out.require(*chain.images == std::vector<Partition>{total(0), total(1), total(2), total(3), total(4)},
                  "chain lands on the totals");
    const auto anti = embed("antichain5.poset", 6);
    out.require(anti.images && anti.verified, "antichain of 5 embeds");
    const auto crown = embed("crown2.poset", 6);
    out.require(crown.images && crown.verified, "2-crown embeds");
    const auto wide = embed("antichain8.poset", kEmbedAntichainBound);
    out.require(!wide.images, "antichain of 8 does not fit in cardinality 4");
  });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
