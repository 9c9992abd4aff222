#include "young/arithmetization.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <string>

#include "young/universe.hpp"

namespace young {

PrimeTable& PrimeTable::shared() {
  static PrimeTable table;
  return table;
}

void PrimeTable::sieve_to(std::uint64_t limit) {
  limit = std::min(limit, kStoredLimit);
  if (limit <= sieved_) return;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t p = 2; p * p <= limit; ++p)
    if (!composite[p])
      for (std::uint64_t q = p * p; q <= limit; q += p) composite[q] = true;
  for (std::uint64_t p = sieved_ + 1; p <= limit; ++p)
    if (p >= 2 && !composite[p]) primes_.push_back(p);
  sieved_ = limit;
}

void PrimeTable::ensure_value(std::uint64_t value) {
  {
    std::shared_lock lock(mutex_);
    if (value <= sieved_) return;
  }
  std::unique_lock lock(mutex_);
  std::uint64_t target = std::max<std::uint64_t>(sieved_ * 2, 1024);
  while (target < value) target *= 2;
  sieve_to(target);
}

void PrimeTable::ensure_count(std::uint64_t count) {
  {
    std::shared_lock lock(mutex_);
    if (primes_.size() >= count) return;
  }
  std::unique_lock lock(mutex_);
  while (primes_.size() < count) {
    if (sieved_ >= kStoredLimit)
      throw resource_error("prime #" + std::to_string(count) + " lies beyond the stored sieve limit");
    sieve_to(std::max<std::uint64_t>(sieved_ * 2, 1024));
  }
}

std::uint64_t PrimeTable::nth(std::uint64_t i) {
  if (i == 0) throw std::invalid_argument("prime indices start at 1");
  ensure_count(i);
  std::shared_lock lock(mutex_);
  return primes_[i - 1];
}

std::uint64_t PrimeTable::index_of(std::uint64_t p) {
  if (p > kStoredLimit) return prime_count(p);
  ensure_value(p);
  std::shared_lock lock(mutex_);
  auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
  if (it == primes_.end() || *it != p) throw std::invalid_argument(std::to_string(p) + " is not prime");
  return static_cast<std::uint64_t>(it - primes_.begin()) + 1;
}

std::uint64_t prime_count(std::uint64_t x) {
  if (x < 2) return 0;
  const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x))) + 1;
  std::vector<std::uint64_t> base;
  PrimeTable::shared().for_each_up_to(root, [&](std::uint64_t p) {
    base.push_back(p);
    return true;
  });
  constexpr std::uint64_t kSegment = 1 << 20;
  std::vector<char> composite(kSegment);
  std::uint64_t count = 0;
  for (std::uint64_t lo = 2; lo <= x; lo += kSegment) {
    const std::uint64_t hi = std::min(x, lo + kSegment - 1);
    std::fill(composite.begin(), composite.end(), 0);
    for (std::uint64_t p : base) {
      if (p * p > hi) break;
      std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
      for (std::uint64_t q = start; q <= hi; q += p) composite[q - lo] = 1;
    }
    for (std::uint64_t v = lo; v <= hi; ++v) count += composite[v - lo] == 0;
  }
  return count;
}

std::uint64_t nth_prime(std::uint64_t i) { return PrimeTable::shared().nth(i); }

BigInt encode(const Partition& sigma) {
  if (sigma.empty()) return 0;
  if (sigma.largest_part() == 1) return BigInt(1) << static_cast<unsigned>(sigma.length() - 1);
  BigInt result = 1;
  for (const Run& r : sigma.runs())
    result *= boost::multiprecision::pow(BigInt(nth_prime(static_cast<std::uint64_t>(r.part))),
                                         static_cast<unsigned>(r.count));
  return result;
}

namespace {

bool is_power_of_two(const BigInt& n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

Partition decode(const BigInt& n, const DecodeLimits& limits) {
  if (n < 0) throw std::invalid_argument("encodings are non-negative");
  if (n == 0) return {};
  if (is_power_of_two(n)) return trivial(static_cast<std::int64_t>(boost::multiprecision::msb(n)) + 1);

  auto& table = PrimeTable::shared();
  const auto trial_limit = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limits.max_cofactor))) + 1;
  std::vector<Run> terms;
  BigInt rest = n;
  std::uint64_t index = 0;
  table.for_each_up_to(trial_limit, [&](std::uint64_t p) {
    ++index;
    if (BigInt(p) * p > rest) return false;
    std::int64_t e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) terms.push_back({static_cast<std::int64_t>(index), e});
    return rest != 1;
  });
  if (rest != 1) {
    if (rest > limits.max_cofactor)
      throw resource_error("cannot decode " + n.str() + ": cofactor " + rest.str() + " exceeds the ceiling of " +
                           std::to_string(limits.max_cofactor));
    // No prime factor up to sqrt(rest) remains, so rest is prime.
    const auto p = static_cast<std::uint64_t>(rest);
    terms.push_back({static_cast<std::int64_t>(table.index_of(p)), 1});
  }
  return Partition::from_runs(std::move(terms));
}

bool primexp(std::uint64_t i, std::uint64_t m, const BigInt& n) {
  if (n <= 0) throw std::invalid_argument("primexp needs a positive n");
  const BigInt p = nth_prime(i);
  BigInt rest = n;
  std::uint64_t e = 0;
  while (rest % p == 0) {
    rest /= p;
    ++e;
    if (e > m) return false;
  }
  return e == m;
}

bool ord_via_encoding(const BigInt& m, const BigInt& n) { return leq(decode(m), decode(n)); }

bool add_pullback(const Partition& rho, const Partition& sigma, const Partition& pi) {
  return encode(rho) + encode(sigma) == encode(pi);
}

bool mult_pullback(const Partition& rho, const Partition& sigma, const Partition& pi) {
  return encode(rho) * encode(sigma) == encode(pi);
}

Partition totalize(const Partition& sigma) {
  const BigInt e = encode(sigma);
  if (e > kTotalizeCeiling)
    throw resource_error("encoding of " + to_string(sigma) + " is too large to materialize as a total partition");
  return total(static_cast<std::int64_t>(e));
}

}  // namespace young
