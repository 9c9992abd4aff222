#include "young/partition.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <ostream>
#include <stdexcept>

namespace young {

Partition::Partition(std::vector<Run> canonical_runs) : runs_(std::move(canonical_runs)) {
  for (std::size_t i = 0; i < runs_.size(); ++i) {
    const Run& r = runs_[i];
    if (r.part <= 0 || r.count <= 0)
      throw std::invalid_argument("partition run with non-positive part or count");
    if (i > 0 && runs_[i - 1].part <= r.part)
      throw std::invalid_argument("partition runs must have strictly decreasing parts");
    cardinality_ += r.part * r.count;
    length_ += r.count;
  }
}

Partition Partition::from_runs(std::vector<Run> terms) {
  std::map<std::int64_t, std::int64_t, std::greater<>> merged;
  for (const Run& t : terms) {
    if (t.part <= 0) throw std::invalid_argument("partition parts must be positive");
    if (t.count < 0) throw std::invalid_argument("partition multiplicities must be non-negative");
    if (t.count > 0) merged[t.part] += t.count;
  }
  std::vector<Run> runs;
  runs.reserve(merged.size());
  for (auto [part, count] : merged) runs.push_back({part, count});
  return Partition(std::move(runs));
}

Partition Partition::from_parts(std::span<const std::int64_t> parts) {
  std::vector<Run> terms;
  terms.reserve(parts.size());
  for (std::int64_t p : parts) {
    if (p <= 0) throw std::invalid_argument("partition parts must be positive, got " + std::to_string(p));
    terms.push_back({p, 1});
  }
  return from_runs(std::move(terms));
}

Partition Partition::from_parts(std::initializer_list<std::int64_t> parts) {
  return from_parts(std::span<const std::int64_t>(parts.begin(), parts.size()));
}

std::int64_t Partition::multiplicity(std::int64_t n) const noexcept {
  for (const Run& r : runs_) {
    if (r.part == n) return r.count;
    if (r.part < n) break;
  }
  return 0;
}

std::int64_t Partition::part_at(std::int64_t i) const noexcept {
  if (i < 1) return 0;
  std::int64_t end = 0;
  for (const Run& r : runs_) {
    end += r.count;
    if (i <= end) return r.part;
  }
  return 0;
}

std::vector<std::int64_t> Partition::parts() const {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(length_));
  for (const Run& r : runs_) out.insert(out.end(), static_cast<std::size_t>(r.count), r.part);
  return out;
}

Partition total(std::int64_t n) { return rectangle(1, n); }
Partition trivial(std::int64_t m) { return rectangle(m, 1); }

Partition rectangle(std::int64_t m, std::int64_t n) {
  if (m < 0 || n < 0) throw std::invalid_argument("rectangle dimensions must be non-negative");
  if (m == 0 || n == 0) return {};
  return Partition({{n, m}});
}

Partition factorial_partition(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("factorial index must be non-negative");
  std::vector<Run> runs;
  runs.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = n; i >= 1; --i) runs.push_back({i, 1});
  return Partition(std::move(runs));
}

bool leq(const Partition& sigma, const Partition& pi) noexcept {
  if (sigma.length() > pi.length() || sigma.largest_part() > pi.largest_part()) return false;
  // Within a run of sigma every part is equal, so the run fits iff its last
  // row fits under the row of pi at the same position.
  const auto& big = pi.runs();
  std::size_t j = 0;
  std::int64_t big_end = big.empty() ? 0 : big[0].count;
  std::int64_t end = 0;
  for (const Run& r : sigma.runs()) {
    end += r.count;
    while (big_end < end) big_end += big[++j].count;
    if (big[j].part < r.part) return false;
  }
  return true;
}

std::vector<Partition> lower_covers(const Partition& pi) {
  std::vector<Partition> out;
  const auto& runs = pi.runs();
  out.reserve(runs.size());
  for (std::size_t k = 0; k < runs.size(); ++k) {
    std::vector<Run> terms = runs;
    terms[k].count -= 1;
    if (runs[k].part > 1) terms.push_back({runs[k].part - 1, 1});
    out.push_back(Partition::from_runs(std::move(terms)));
  }
  return out;
}

std::vector<Partition> upper_covers(const Partition& pi) {
  std::vector<Partition> out;
  const auto& runs = pi.runs();
  for (std::size_t k = 0; k < runs.size(); ++k) {
    std::vector<Run> terms = runs;
    terms[k].count -= 1;
    terms.push_back({runs[k].part + 1, 1});
    out.push_back(Partition::from_runs(std::move(terms)));
  }
  std::vector<Run> terms = runs;
  terms.push_back({1, 1});
  out.push_back(Partition::from_runs(std::move(terms)));
  return out;
}

Partition conjugate(const Partition& pi) {
  // Column j has as many cells as there are parts >= j.
  const auto& runs = pi.runs();
  std::vector<Run> out;
  out.reserve(runs.size());
  std::int64_t prefix = pi.length();
  for (std::size_t k = runs.size(); k-- > 0;) {
    const std::int64_t below = k + 1 < runs.size() ? runs[k + 1].part : 0;
    out.push_back({prefix, runs[k].part - below});
    prefix -= runs[k].count;
  }
  return Partition(std::move(out));
}

namespace {

template <typename Combine>
Partition componentwise(const Partition& a, const Partition& b, Combine combine) {
  const auto pa = a.parts();
  const auto pb = b.parts();
  std::vector<std::int64_t> parts;
  for (std::size_t i = 0; i < std::max(pa.size(), pb.size()); ++i) {
    const std::int64_t x = i < pa.size() ? pa[i] : 0;
    const std::int64_t y = i < pb.size() ? pb[i] : 0;
    if (const std::int64_t v = combine(x, y); v > 0) parts.push_back(v);
  }
  return Partition::from_parts(parts);
}

}  // namespace

Partition meet(const Partition& a, const Partition& b) {
  return componentwise(a, b, [](std::int64_t x, std::int64_t y) { return std::min(x, y); });
}

Partition join(const Partition& a, const Partition& b) {
  return componentwise(a, b, [](std::int64_t x, std::int64_t y) { return std::max(x, y); });
}

std::string to_string(const Partition& pi) {
  if (pi.empty()) return "0";
  std::string out;
  for (const Run& r : pi.runs()) {
    if (!out.empty()) out += '+';
    if (r.count != 1) out += std::to_string(r.count);
    out += '[' + std::to_string(r.part) + ']';
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Partition& pi) { return os << to_string(pi); }

namespace {

class PartitionScanner {
 public:
  explicit PartitionScanner(std::string_view text) : text_(text) {}

  Partition parse() {
    skip_ws();
    if (at_end()) fail("empty partition text");
    Partition result = peek() == '(' ? tuple() : canonical_sum();
    skip_ws();
    if (!at_end()) fail("unexpected trailing input");
    return result;
  }

 private:
  Partition tuple() {
    expect('(');
    std::vector<std::int64_t> parts;
    skip_ws();
    if (peek() == ')') {
      ++pos_;
      return {};
    }
    for (;;) {
      parts.push_back(number());
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect(')');
      break;
    }
    for (std::int64_t p : parts)
      if (p <= 0) fail("tuple parts must be positive");
    return Partition::from_parts(parts);
  }

  Partition canonical_sum() {
    skip_ws();
    if (peek() == '0') {
      const std::size_t save = pos_;
      ++pos_;
      skip_ws();
      if (at_end()) return {};
      pos_ = save;
    }
    std::vector<Run> terms;
    for (;;) {
      skip_ws();
      std::int64_t count = 1;
      if (std::isdigit(static_cast<unsigned char>(peek()))) count = number();
      skip_ws();
      expect('[');
      const std::int64_t part = number();
      skip_ws();
      expect(']');
      if (part <= 0) fail("part sizes must be positive");
      terms.push_back({part, count});
      skip_ws();
      if (at_end() || peek() != '+') break;
      ++pos_;
    }
    return Partition::from_runs(std::move(terms));
  }

  std::int64_t number() {
    skip_ws();
    const std::size_t start = pos_;
    std::int64_t value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      if (value > (INT64_MAX - 9) / 10) fail("number too large");
      value = value * 10 + (peek() - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return value;
  }

  void expect(char c) {
    skip_ws();
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse partition '" + std::string(text_) + "' at offset " +
                                std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Partition parse_partition(std::string_view text) { return PartitionScanner(text).parse(); }

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (const Run& r : p.runs()) {
    h ^= static_cast<std::size_t>(r.part) * 0x9e3779b97f4a7c15ull;
    h *= 0x100000001b3ull;
    h ^= static_cast<std::size_t>(r.count) + 0x7f4a7c15ull;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace young
