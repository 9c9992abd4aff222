#include "young/universe.hpp"

#include <string>

namespace young {

namespace {

// Appends the partitions of `remaining` with parts <= `cap`, largest first part
// first, each prefixed by `prefix`.
void generate(std::int64_t remaining, std::int64_t cap, std::vector<std::int64_t>& prefix,
              std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition::from_parts(prefix));
    return;
  }
  for (std::int64_t first = std::min(remaining, cap); first >= 1; --first) {
    prefix.push_back(first);
    generate(remaining - first, first, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("cardinality must be non-negative");
  std::vector<Partition> out;
  std::vector<std::int64_t> prefix;
  generate(n, n, prefix, out);
  return out;
}

Universe Universe::enumerate(std::int64_t max_card) {
  if (max_card < 0) throw std::invalid_argument("max_card must be non-negative");
  if (max_card > kMaxCardCeiling)
    throw resource_error("universe bound " + std::to_string(max_card) + " exceeds the ceiling of " +
                         std::to_string(kMaxCardCeiling));
  Universe u;
  u.max_card_ = max_card;
  u.offsets_.push_back(0);
  for (std::int64_t n = 0; n <= max_card; ++n) {
    auto level = partitions_of(n);
    u.elements_.insert(u.elements_.end(), std::make_move_iterator(level.begin()),
                       std::make_move_iterator(level.end()));
    u.offsets_.push_back(u.elements_.size());
  }
  u.index_.reserve(u.elements_.size());
  for (std::size_t id = 0; id < u.elements_.size(); ++id) u.index_.emplace(u.elements_[id], id);
  return u;
}

std::size_t Universe::level_begin(std::int64_t n) const {
  if (n < 0 || n > max_card_ + 1) throw std::out_of_range("level " + std::to_string(n) + " outside universe");
  return offsets_[static_cast<std::size_t>(n)];
}

std::span<const Partition> Universe::level(std::int64_t n) const {
  if (n < 0 || n > max_card_) throw std::out_of_range("level " + std::to_string(n) + " outside universe");
  const auto b = offsets_[static_cast<std::size_t>(n)];
  const auto e = offsets_[static_cast<std::size_t>(n) + 1];
  return std::span<const Partition>(elements_).subspan(b, e - b);
}

std::span<const Partition> Universe::up_to(std::int64_t bound) const {
  if (bound < 0) return {};
  if (bound > max_card_) throw std::out_of_range("bound " + std::to_string(bound) + " outside universe");
  return std::span<const Partition>(elements_).first(offsets_[static_cast<std::size_t>(bound) + 1]);
}

std::optional<Location> Universe::locate(const Partition& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  const std::int64_t lvl = p.cardinality();
  return Location{lvl, it->second - offsets_[static_cast<std::size_t>(lvl)], it->second};
}

std::vector<Partition> Universe::upper_covers(const Partition& pi) const {
  if (pi.cardinality() >= max_card_)
    throw std::out_of_range("upper covers of " + to_string(pi) + " need level " +
                            std::to_string(pi.cardinality() + 1) + " but the universe stops at " +
                            std::to_string(max_card_));
  std::vector<Partition> out;
  for (const Partition& rho : level(pi.cardinality() + 1))
    if (leq(pi, rho)) out.push_back(rho);
  return out;
}

std::vector<Partition> Universe::lower_covers(const Partition& pi) const {
  std::vector<Partition> out;
  if (pi.empty()) return out;
  for (const Partition& sigma : level(pi.cardinality() - 1))
    if (leq(sigma, pi)) out.push_back(sigma);
  return out;
}

}  // namespace young
