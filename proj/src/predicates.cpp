#include "young/predicates.hpp"

#include <algorithm>
#include <string>

namespace young {

namespace {

void require_total(const Partition& p, const char* what) {
  if (!is_total(p)) throw std::invalid_argument(std::string(what) + " must be a total partition, got " + to_string(p));
}

void require_nonempty_total(const Partition& p, const char* what) {
  if (p.empty() || !is_total(p))
    throw std::invalid_argument(std::string(what) + " must be a nonempty total partition, got " + to_string(p));
}

void require_trivial(const Partition& p, const char* what) {
  if (!is_trivial(p))
    throw std::invalid_argument(std::string(what) + " must be a trivial partition, got " + to_string(p));
}

}  // namespace

// ---------------------------------------------------------------------------
// Oracles

bool is_total(const Partition& pi) noexcept {
  return pi.empty() || (pi.runs().size() == 1 && pi.runs().front().count == 1);
}

bool is_trivial(const Partition& pi) noexcept { return pi.empty() || pi.largest_part() == 1; }

bool is_rectangular(const Partition& pi) noexcept { return pi.runs().size() <= 1; }

bool has_distinct_parts(const Partition& pi) noexcept {
  return std::all_of(pi.runs().begin(), pi.runs().end(), [](const Run& r) { return r.count == 1; });
}

bool has_bounded_parts(const Partition& rho, const Partition& pi) {
  require_total(rho, "rho");
  return pi.largest_part() <= rho.cardinality();
}

bool is_rectangular_triple(const Partition& rho, const Partition& sigma, const Partition& pi) {
  require_total(rho, "rho");
  require_trivial(sigma, "sigma");
  return pi == rectangle(sigma.cardinality(), rho.cardinality());
}

bool is_part_of(const Partition& rho, const Partition& pi) {
  require_nonempty_total(rho, "rho");
  return pi.multiplicity(rho.cardinality()) > 0;
}

bool is_factorial(const Partition& rho, const Partition& pi) {
  require_total(rho, "rho");
  return pi == factorial_partition(rho.cardinality());
}

bool same_height_total_trivial(const Partition& rho, const Partition& pi) {
  require_total(rho, "rho");
  require_trivial(pi, "pi");
  return rho.cardinality() == pi.cardinality();
}

bool add_triple(const Partition& rho, const Partition& sigma, const Partition& pi) {
  require_total(rho, "rho");
  require_total(sigma, "sigma");
  require_total(pi, "pi");
  return rho.cardinality() + sigma.cardinality() == pi.cardinality();
}

bool part_frequency(const Partition& rho, const Partition& sigma, const Partition& pi) {
  require_nonempty_total(rho, "rho");
  require_nonempty_total(sigma, "sigma");
  return pi.multiplicity(rho.cardinality()) == sigma.cardinality();
}

bool height_geq(const Partition& rho, const Partition& pi) {
  require_total(rho, "rho");
  return pi.cardinality() >= rho.cardinality();
}

bool height_eq(const Partition& rho, const Partition& pi) {
  require_total(rho, "rho");
  return pi.cardinality() == rho.cardinality();
}

bool mult_triple(const Partition& rho, const Partition& sigma, const Partition& pi) {
  require_total(rho, "rho");
  require_total(sigma, "sigma");
  require_total(pi, "pi");
  return rho.cardinality() * sigma.cardinality() == pi.cardinality();
}

// ---------------------------------------------------------------------------
// Order-only building blocks

std::int64_t lattice_length(const Partition& pi) {
  std::int64_t m = 0;
  while (leq(trivial(m + 1), pi)) ++m;
  return m;
}

std::int64_t lattice_largest_part(const Partition& pi) {
  std::int64_t n = 0;
  while (leq(total(n + 1), pi)) ++n;
  return n;
}

std::int64_t max_rectangular_below(std::int64_t n, const Partition& pi) {
  if (n < 1) throw std::invalid_argument("rectangle part size must be positive");
  std::int64_t m = 0;
  while (leq(rectangle(m + 1, n), pi)) ++m;
  return m;
}

// ---------------------------------------------------------------------------
// Characterizations

bool char_total(const Partition& pi) { return !leq(trivial(2), pi); }

bool char_trivial(const Partition& pi) { return !leq(total(2), pi); }

bool char_rectangular(const Partition& pi, const Universe& universe) {
  if (pi.cardinality() > universe.max_card())
    throw insufficient_universe("lower covers of " + to_string(pi) + " need level " +
                                std::to_string(pi.cardinality() - 1));
  return universe.lower_covers(pi).size() <= 1;
}

bool length_equals(const Partition& rho, const Partition& pi) {
  require_trivial(rho, "rho");
  const std::int64_t m = lattice_length(rho);
  return leq(rho, pi) && !leq(trivial(m + 1), pi);
}

bool char_bounded_parts(const Partition& rho, const Partition& pi) {
  require_total(rho, "rho");
  return !leq(total(lattice_largest_part(rho) + 1), pi);
}

bool char_rectangular_triple(const Partition& rho, const Partition& sigma, const Partition& pi,
                             const Universe& universe) {
  require_total(rho, "rho");
  require_trivial(sigma, "sigma");
  return char_total(rho) && lattice_largest_part(pi) == lattice_largest_part(rho) && char_trivial(sigma) &&
         length_equals(sigma, pi) && char_rectangular(pi, universe);
}

bool char_distinct_parts(const Partition& pi) {
  const std::int64_t t = lattice_length(pi);
  const std::int64_t b = lattice_largest_part(pi);
  for (std::int64_t s = 1; s < t; ++s) {
    for (std::int64_t n = 1; n <= b; ++n) {
      if (leq(rectangle(s, n), pi) && !leq(rectangle(s, n + 1), pi) && leq(rectangle(s + 1, n), pi))
        return false;
    }
  }
  return true;
}

bool char_part_of(const Partition& rho, const Partition& pi, PartOfReading reading) {
  require_nonempty_total(rho, "rho");
  if (!leq(rho, pi)) return false;
  const std::int64_t n = lattice_largest_part(rho);
  const std::int64_t rows = lattice_length(pi);
  for (std::int64_t r = 1; r <= rows; ++r) {
    if (!leq(rectangle(r, n), pi) || leq(rectangle(r + 1, n), pi)) continue;
    const bool above_fits = leq(rectangle(r, n + 1), pi);
    if (reading == PartOfReading::kRowAboveFits ? !above_fits : above_fits) return false;
  }
  return true;
}

bool char_factorial(const Partition& rho, const Partition& pi) {
  require_total(rho, "rho");
  if (!char_total(rho)) return false;
  const std::int64_t n = lattice_largest_part(rho);
  if (lattice_largest_part(pi) != n) return false;
  for (std::int64_t r = 1; r <= n; ++r)
    if (!char_part_of(total(r), pi)) return false;
  return char_distinct_parts(pi);
}

bool char_same_height_total_trivial(const Partition& rho, const Partition& pi) {
  require_total(rho, "rho");
  require_trivial(pi, "pi");
  if (!char_total(rho) || !char_trivial(pi)) return false;
  return length_equals(pi, factorial_partition(lattice_largest_part(rho)));
}

// ---------------------------------------------------------------------------
// Addition

std::int64_t addition_universe_bound(const Partition& rho, const Partition& pi) {
  const std::int64_t lo = rho.cardinality();
  const std::int64_t hi = pi.cardinality();
  if (hi <= lo) return 0;
  return hi * (hi + 1) / 2 - lo * (lo + 1) / 2;
}

namespace {

bool addition_antecedent(const Partition& beta, const Partition& rho, const Partition& pi) {
  const std::int64_t alpha_limit = std::max(lattice_largest_part(beta), lattice_largest_part(pi)) + 1;
  for (std::int64_t a = 1; a <= alpha_limit; ++a) {
    const Partition alpha = total(a);
    const bool in_range = lt(rho, alpha) && leq(alpha, pi);
    if (char_part_of(alpha, beta) != in_range) return false;
  }
  return char_distinct_parts(beta);
}

}  // namespace

std::vector<std::int64_t> addition_witness_lengths(const Partition& rho, const Partition& pi,
                                                   const SearchScope& scope) {
  std::vector<std::int64_t> lengths;
  if (scope.universe != nullptr) {
    const std::int64_t bound = addition_universe_bound(rho, pi);
    if (scope.universe->max_card() < bound)
      throw insufficient_universe("addition test for rho=" + to_string(rho) + ", pi=" + to_string(pi) +
                                  " needs a universe up to " + std::to_string(bound));
    for (const Partition& beta : scope.universe->elements())
      if (addition_antecedent(beta, rho, pi)) lengths.push_back(lattice_length(beta));
  } else {
    // Only partitions with distinct parts, none above b(pi)+slack, can meet
    // the antecedent: a repeated part fails the distinctness conjunct and a
    // part [k] with k > b(pi) is a part of beta* outside (rho, pi].
    const std::int64_t top = lattice_largest_part(pi) + scope.slack;
    if (top > 30) throw resource_error("addition search over 2^" + std::to_string(top) + " candidates");
    const std::uint64_t subsets = std::uint64_t{1} << top;
    std::vector<std::int64_t> parts;
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
      parts.clear();
      for (std::int64_t k = top; k >= 1; --k)
        if (mask >> (k - 1) & 1u) parts.push_back(k);
      const Partition beta = Partition::from_parts(parts);
      if (addition_antecedent(beta, rho, pi)) lengths.push_back(lattice_length(beta));
    }
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

bool char_add_from_witnesses(const Partition& rho, const Partition& sigma, const Partition& pi,
                             const std::vector<std::int64_t>& witness_lengths, AddReading reading) {
  require_total(rho, "rho");
  require_total(sigma, "sigma");
  require_total(pi, "pi");
  if (!char_total(rho) || !char_total(sigma) || !char_total(pi)) return false;
  if (!lt(rho, pi) || !lt(sigma, pi)) return false;
  const std::int64_t s = lattice_largest_part(sigma);
  return std::all_of(witness_lengths.begin(), witness_lengths.end(), [&](std::int64_t len) {
    return reading == AddReading::kAtLeast ? len >= s : len == s;
  });
}

bool char_add(const Partition& rho, const Partition& sigma, const Partition& pi, AddReading reading,
              const SearchScope& scope) {
  require_total(rho, "rho");
  require_total(sigma, "sigma");
  require_total(pi, "pi");
  if (!lt(rho, pi) || !lt(sigma, pi)) return false;
  return char_add_from_witnesses(rho, sigma, pi, addition_witness_lengths(rho, pi, scope), reading);
}

// ---------------------------------------------------------------------------
// Frequency

bool char_frequency(const Partition& rho, const Partition& sigma, const Partition& pi, FrequencyReading reading,
                    std::int64_t slack) {
  require_nonempty_total(rho, "rho");
  require_nonempty_total(sigma, "sigma");
  const std::int64_t r = lattice_largest_part(rho);
  const std::int64_t n = lattice_largest_part(sigma);
  if (pi == rectangle(n, r)) return true;

  if (!char_part_of(rho, pi)) return false;
  const std::int64_t top = lattice_largest_part(pi);
  const std::int64_t m = max_rectangular_below(r, pi);
  if (top == r) return m == n;

  bool attained = false;
  for (std::int64_t k = r + 1; k <= top + slack; ++k) {
    const Partition beta = total(k);
    if (!char_part_of(beta, pi)) continue;
    const std::int64_t t = max_rectangular_below(k, pi);
    if (n > m - t) return false;
    attained = attained || n == m - t;
  }
  return reading == FrequencyReading::kAtMost || attained;
}

// ---------------------------------------------------------------------------
// Height comparison

bool satisfies_witness_condition(const Partition& sigma, const Partition& pi) {
  const std::int64_t top = lattice_largest_part(pi);
  const std::int64_t rows = lattice_length(sigma);
  for (std::int64_t r = 1; r <= top; ++r) {
    const std::int64_t m = max_rectangular_below(r, pi);
    bool enough = false;
    for (std::int64_t k = m; k <= rows && !enough; ++k)
      enough = char_frequency(total(r), total(k), sigma);
    if (!enough) return false;
  }
  return true;
}

Partition factorial_sum(const Partition& pi) {
  std::vector<Run> terms;
  for (const Run& run : pi.runs())
    for (std::int64_t i = 1; i <= run.part; ++i) terms.push_back({i, run.count});
  return Partition::from_runs(std::move(terms));
}

std::int64_t height_universe_bound(const Partition& pi) { return factorial_sum(pi).cardinality(); }

namespace {

// Depth-first over multiplicity vectors mult[1..top] with mult[r] >= need[r]
// and total length <= limit; returns true on the first candidate that meets
// the witness condition.
bool find_short_witness(const Partition& pi, std::int64_t r, std::int64_t budget,
                        const std::vector<std::int64_t>& need, std::vector<Run>& terms) {
  if (r == 0) {
    const Partition sigma = Partition::from_runs(terms);
    return satisfies_witness_condition(sigma, pi);
  }
  const auto idx = static_cast<std::size_t>(r);
  for (std::int64_t extra = 0; extra <= budget; ++extra) {
    terms.push_back({r, need[idx] + extra});
    const bool found = find_short_witness(pi, r - 1, budget - extra, need, terms);
    terms.pop_back();
    if (found) return true;
  }
  return false;
}

}  // namespace

bool char_height_geq(const Partition& rho, const Partition& pi, const SearchScope& scope) {
  require_total(rho, "rho");
  if (!char_total(rho)) return false;
  const std::int64_t n = lattice_largest_part(rho);

  if (scope.universe != nullptr) {
    const std::int64_t bound = height_universe_bound(pi);
    if (scope.universe->max_card() < bound)
      throw insufficient_universe("height test for pi=" + to_string(pi) + " needs a universe up to " +
                                  std::to_string(bound));
    for (const Partition& sigma : scope.universe->elements())
      if (lattice_length(sigma) < n && satisfies_witness_condition(sigma, pi)) return false;
    return true;
  }

  // A counterexample sigma has fewer than n parts. Parts above b(pi) play no
  // role in the witness condition, so dropping them keeps a counterexample a
  // counterexample; and a size r occurring fewer than need[r] times already
  // violates the condition.
  if (n == 0) return true;
  const std::int64_t top = lattice_largest_part(pi) + scope.slack;
  std::vector<std::int64_t> need(static_cast<std::size_t>(top) + 1, 0);
  std::int64_t needed = 0;
  for (std::int64_t r = 1; r <= top; ++r) {
    if (leq(total(r), pi)) need[static_cast<std::size_t>(r)] = max_rectangular_below(r, pi);
    needed += need[static_cast<std::size_t>(r)];
  }
  const std::int64_t budget = (n - 1) - needed;
  if (budget < 0) return true;
  std::vector<Run> terms;
  return !find_short_witness(pi, top, budget, need, terms);
}

bool char_height_eq(const Partition& rho, const Partition& pi, const SearchScope& scope) {
  require_total(rho, "rho");
  return char_height_geq(rho, pi, scope) && !char_height_geq(total(lattice_largest_part(rho) + 1), pi, scope);
}

bool char_mult(const Partition& rho, const Partition& sigma, const Partition& pi, const SearchScope& scope) {
  require_total(rho, "rho");
  require_total(sigma, "sigma");
  require_total(pi, "pi");
  if (!char_total(rho) || !char_total(sigma) || !char_total(pi)) return false;
  const Partition beta = rectangle(lattice_largest_part(rho), lattice_largest_part(sigma));
  return char_height_eq(pi, beta, scope);
}

std::vector<Partition> reconstruction_key(const Partition& pi) {
  auto covers = lower_covers(pi);
  std::sort(covers.begin(), covers.end());
  return covers;
}

}  // namespace young
