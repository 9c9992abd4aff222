#include "young/evaluator.hpp"

#include <algorithm>
#include <iterator>
#include <limits>
#include <set>
#include <span>
#include <stdexcept>
#include <thread>

namespace young {

namespace {

constexpr std::size_t kNoId = std::numeric_limits<std::size_t>::max();

/// leq over the first `size` universe ids, one bit row per element.
class OrderMatrix {
 public:
  OrderMatrix() = default;
  OrderMatrix(std::span<const Partition> domain) : size_(domain.size()), words_((size_ + 63) / 64) {
    bits_.assign(size_ * words_, 0);
    for (std::size_t i = 0; i < size_; ++i) {
      for (std::size_t j = i; j < size_; ++j) {
        // ids are sorted by cardinality, so nothing at j < i lies above i
        // except i itself.
        if (leq(domain[i], domain[j])) bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
      }
    }
  }

  bool covers(std::size_t i, std::size_t j) const noexcept { return i < size_ && j < size_; }
  bool test(std::size_t i, std::size_t j) const noexcept { return bits_[i * words_ + j / 64] >> (j % 64) & 1u; }

 private:
  std::size_t size_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

enum class Op { kLeq, kEq, kNot, kAnd, kOr, kImplies, kIff, kExists, kForall };

struct TermRef {
  int slot = -1;      // variable slot, or
  int constant = -1;  // index into constants
};

struct Node {
  Op op{};
  TermRef lhs, rhs;
  int left = -1;
  int right = -1;
  int slot = -1;  // bound variable of a quantifier
};

struct Env {
  std::vector<std::size_t> ids;
  std::vector<const Partition*> values;
};

class Compiled {
 public:
  Compiled(const Formula& f, const std::vector<std::string>& free_vars) {
    std::vector<std::pair<std::string, int>> scope;
    for (const auto& v : free_vars) scope.emplace_back(v, slots_++);
    root_ = compile(f, scope);
  }

  int slots() const noexcept { return slots_; }
  bool has_quantifiers() const noexcept { return quantified_; }

  void bind(std::span<const Partition> domain, const Universe& universe) {
    domain_ = domain;
    constant_ids_.clear();
    for (const Partition& c : constants_) constant_ids_.push_back(id_in_domain(c, universe));
    if (quantified_) order_ = OrderMatrix(domain_);
  }

  std::size_t id_in_domain(const Partition& p, const Universe& universe) const {
    if (auto loc = universe.locate(p); loc && loc->id < domain_.size()) return loc->id;
    return kNoId;
  }

  bool run(Env& env) const { return eval(root_, env); }

 private:
  int compile(const Formula& f, std::vector<std::pair<std::string, int>>& scope) {
    Node node;
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Atom>) {
            node.op = n.kind == AtomKind::kLeq ? Op::kLeq : Op::kEq;
            node.lhs = term(n.lhs, scope);
            node.rhs = term(n.rhs, scope);
          } else if constexpr (std::is_same_v<T, Negation>) {
            node.op = Op::kNot;
            node.left = compile(*n.body, scope);
          } else if constexpr (std::is_same_v<T, Binary>) {
            switch (n.op) {
              case Connective::kAnd: node.op = Op::kAnd; break;
              case Connective::kOr: node.op = Op::kOr; break;
              case Connective::kImplies: node.op = Op::kImplies; break;
              case Connective::kIff: node.op = Op::kIff; break;
            }
            node.left = compile(*n.lhs, scope);
            node.right = compile(*n.rhs, scope);
          } else {
            quantified_ = true;
            node.op = n.quantifier == Quantifier::kExists ? Op::kExists : Op::kForall;
            node.slot = slots_++;
            scope.emplace_back(n.var, node.slot);
            node.left = compile(*n.body, scope);
            scope.pop_back();
          }
        },
        f.node());
    nodes_.push_back(node);
    return static_cast<int>(nodes_.size()) - 1;
  }

  TermRef term(const Term& t, const std::vector<std::pair<std::string, int>>& scope) {
    if (const auto* v = std::get_if<Var>(&t)) {
      for (auto it = scope.rbegin(); it != scope.rend(); ++it)
        if (it->first == v->name) return {it->second, -1};
      throw std::invalid_argument("variable '" + v->name + "' is free but not assigned");
    }
    constants_.push_back(std::get<Const>(t).value);
    return {-1, static_cast<int>(constants_.size()) - 1};
  }

  std::pair<std::size_t, const Partition*> resolve(const TermRef& t, const Env& env) const {
    if (t.slot >= 0) return {env.ids[static_cast<std::size_t>(t.slot)], env.values[static_cast<std::size_t>(t.slot)]};
    const auto k = static_cast<std::size_t>(t.constant);
    return {constant_ids_[k], &constants_[k]};
  }

  bool eval(int index, Env& env) const {
    const Node& n = nodes_[static_cast<std::size_t>(index)];
    switch (n.op) {
      case Op::kLeq: {
        const auto [a, pa] = resolve(n.lhs, env);
        const auto [b, pb] = resolve(n.rhs, env);
        if (order_.covers(a, b)) return order_.test(a, b);
        return leq(*pa, *pb);
      }
      case Op::kEq: {
        const auto [a, pa] = resolve(n.lhs, env);
        const auto [b, pb] = resolve(n.rhs, env);
        if (a != kNoId && b != kNoId) return a == b;
        return *pa == *pb;
      }
      case Op::kNot: return !eval(n.left, env);
      case Op::kAnd: return eval(n.left, env) && eval(n.right, env);
      case Op::kOr: return eval(n.left, env) || eval(n.right, env);
      case Op::kImplies: return !eval(n.left, env) || eval(n.right, env);
      case Op::kIff: return eval(n.left, env) == eval(n.right, env);
      case Op::kExists:
      case Op::kForall: {
        const bool want = n.op == Op::kExists;
        const auto slot = static_cast<std::size_t>(n.slot);
        for (std::size_t id = 0; id < domain_.size(); ++id) {
          env.ids[slot] = id;
          env.values[slot] = &domain_[id];
          if (eval(n.left, env) == want) return want;
        }
        return !want;
      }
    }
    return false;
  }

  std::vector<Node> nodes_;
  std::vector<Partition> constants_;
  std::vector<std::size_t> constant_ids_;
  std::span<const Partition> domain_;
  OrderMatrix order_;
  int root_ = -1;
  int slots_ = 0;
  bool quantified_ = false;
};

void require_bound(const Universe& universe, const EvalConfig& config) {
  if (config.max_card < 0 || config.slack < 0) throw std::invalid_argument("bounds must be non-negative");
  if (universe.max_card() < config.quantifier_bound())
    throw insufficient_universe("quantifiers need levels up to " + std::to_string(config.quantifier_bound()) +
                                " but the universe stops at " + std::to_string(universe.max_card()));
}

}  // namespace

bool evaluate(const Formula& f, const Assignment& assignment, const Universe& universe, const EvalConfig& config) {
  require_bound(universe, config);
  const auto free = free_variables(f);
  std::vector<std::string> vars(free.begin(), free.end());
  for (const auto& v : vars)
    if (!assignment.contains(v)) throw std::invalid_argument("free variable '" + v + "' is not assigned");

  Compiled compiled(f, vars);
  compiled.bind(universe.up_to(config.quantifier_bound()), universe);
  Env env{std::vector<std::size_t>(static_cast<std::size_t>(compiled.slots()), kNoId),
          std::vector<const Partition*>(static_cast<std::size_t>(compiled.slots()), nullptr)};
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const Partition& value = assignment.find(vars[i])->second;
    env.ids[i] = compiled.id_in_domain(value, universe);
    env.values[i] = &value;
  }
  return compiled.run(env);
}

std::vector<std::vector<Partition>> defined_relation(const Formula& f, const std::vector<std::string>& vars,
                                                     const Universe& universe, const EvalConfig& config) {
  require_bound(universe, config);
  const auto free = free_variables(f);
  if (std::set<std::string>(vars.begin(), vars.end()) != free || vars.size() != free.size())
    throw std::invalid_argument("requested variables do not match the formula's free variables");

  Compiled compiled(f, vars);
  compiled.bind(universe.up_to(config.quantifier_bound()), universe);
  const auto candidates = universe.up_to(config.max_card);
  const std::size_t arity = vars.size();

  std::size_t combos = 1;
  for (std::size_t i = 0; i < arity; ++i) combos *= candidates.size();

  // Shard the tuple space into contiguous ranges, one per worker, and
  // concatenate results in range order.
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(combos / 4096, 1));
  std::vector<std::vector<std::vector<Partition>>> found(workers);
  auto work = [&](std::size_t w) {
    Env env{std::vector<std::size_t>(static_cast<std::size_t>(compiled.slots()), kNoId),
            std::vector<const Partition*>(static_cast<std::size_t>(compiled.slots()), nullptr)};
    const std::size_t begin = combos * w / workers;
    const std::size_t end = combos * (w + 1) / workers;
    for (std::size_t code = begin; code < end; ++code) {
      std::size_t rest = code;
      for (std::size_t i = arity; i-- > 0;) {
        const std::size_t id = rest % candidates.size();
        rest /= candidates.size();
        env.ids[i] = id;
        env.values[i] = &candidates[id];
      }
      if (compiled.run(env)) {
        std::vector<Partition> tuple;
        for (std::size_t i = 0; i < arity; ++i) tuple.push_back(*env.values[i]);
        found[w].push_back(std::move(tuple));
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(work, w);
  }
  std::vector<std::vector<Partition>> out;
  for (auto& chunk : found) std::move(chunk.begin(), chunk.end(), std::back_inserter(out));
  return out;
}

std::vector<Partition> defined_set(const Formula& f, const std::string& var, const Universe& universe,
                                   const EvalConfig& config) {
  if (free_variables(f) != std::set<std::string>{var})
    throw std::invalid_argument("formula must have exactly the free variable '" + var + "'");
  std::vector<Partition> out;
  for (auto& tuple : defined_relation(f, {var}, universe, config)) out.push_back(std::move(tuple.front()));
  return out;
}

StabilityReport stability_check(const Formula& f, const std::vector<std::string>& vars, const Universe& universe,
                                const EvalConfig& config, const std::vector<std::int64_t>& slack_schedule) {
  StabilityReport report;
  std::vector<std::vector<Partition>> previous;
  for (std::size_t k = 0; k < slack_schedule.size(); ++k) {
    const EvalConfig at{config.max_card, slack_schedule[k]};
    auto current = defined_relation(f, vars, universe, at);
    std::sort(current.begin(), current.end());
    report.slacks.push_back(at.slack);
    report.sizes.push_back(current.size());
    if (k > 0) {
      std::vector<std::vector<Partition>> lost, gained;
      std::set_difference(previous.begin(), previous.end(), current.begin(), current.end(), std::back_inserter(lost));
      std::set_difference(current.begin(), current.end(), previous.begin(), previous.end(), std::back_inserter(gained));
      for (auto& t : lost) report.flips.push_back({std::move(t), slack_schedule[k - 1], at.slack, true});
      for (auto& t : gained) report.flips.push_back({std::move(t), slack_schedule[k - 1], at.slack, false});
    }
    previous = std::move(current);
  }
  return report;
}

}  // namespace young
