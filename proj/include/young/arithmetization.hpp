#pragma once

// The bijection between partitions and the natural numbers:
//
//   #∅ = 0,   #(m[1]) = 2^(m-1),   #(Σ m_i[n_i]) = Π p_{n_i}^{m_i} otherwise,
//
// where p_k is the k-th prime. A pure power of two can only come from a
// trivial partition (any other partition involves an odd prime), and every
// other positive integer has a unique factorization that reads back as runs,
// so # is a bijection P -> N.

#include <cstdint>
#include <shared_mutex>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "young/partition.hpp"

namespace young {

using BigInt = boost::multiprecision::cpp_int;

/// Memoized prime supply. Reads take a shared lock; growth is serialized.
class PrimeTable {
 public:
  /// Primes are stored up to this value; larger primes are indexed by counting.
  static constexpr std::uint64_t kStoredLimit = 100'000'000;

  static PrimeTable& shared();

  /// The i-th prime, 1-indexed. Throws resource_error past the stored range.
  std::uint64_t nth(std::uint64_t i);

  /// The index k with p_k = p. p must be prime.
  std::uint64_t index_of(std::uint64_t p);

  /// Calls fn(p) for primes in increasing order while it returns true and p <= limit.
  template <typename Fn>
  void for_each_up_to(std::uint64_t limit, Fn&& fn) {
    ensure_value(std::min(limit, kStoredLimit));
    std::shared_lock lock(mutex_);
    for (std::uint64_t p : primes_) {
      if (p > limit || !fn(p)) return;
    }
  }

 private:
  void ensure_value(std::uint64_t value);
  void ensure_count(std::uint64_t count);
  void sieve_to(std::uint64_t limit);  // caller holds the unique lock

  std::shared_mutex mutex_;
  std::vector<std::uint64_t> primes_;
  std::uint64_t sieved_ = 1;
};

/// Number of primes <= x, by segmented sieve.
std::uint64_t prime_count(std::uint64_t x);

std::uint64_t nth_prime(std::uint64_t i);

struct DecodeLimits {
  /// Once prime factors up to sqrt(max_cofactor) are divided out, whatever
  /// remains must be at most this (it is then prime).
  std::uint64_t max_cofactor = 1'000'000'000;
};

BigInt encode(const Partition& sigma);

/// Inverse of encode. Throws resource_error when the input keeps a cofactor
/// above limits.max_cofactor after trial division.
Partition decode(const BigInt& n, const DecodeLimits& limits = {});

/// The i-th prime divides n with exact exponent m. Throws for i = 0 or n = 0.
bool primexp(std::uint64_t i, std::uint64_t m, const BigInt& n);

/// leq(decode(m), decode(n)).
bool ord_via_encoding(const BigInt& m, const BigInt& n);

/// #rho + #sigma = #pi.
bool add_pullback(const Partition& rho, const Partition& sigma, const Partition& pi);
/// #rho * #sigma = #pi.
bool mult_pullback(const Partition& rho, const Partition& sigma, const Partition& pi);

/// Largest encoding totalize() turns into a partition.
inline constexpr std::int64_t kTotalizeCeiling = std::int64_t{1} << 62;

/// The total partition [#sigma] (∅ for sigma = ∅).
Partition totalize(const Partition& sigma);

}  // namespace young
