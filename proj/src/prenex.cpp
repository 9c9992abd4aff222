#include "young/prenex.hpp"

#include <algorithm>

namespace young {

std::string to_string(const PrenexClass& c) {
  switch (c.kind) {
    case PrenexKind::kSigma: return "Sigma " + std::to_string(c.level);
    case PrenexKind::kPi: return "Pi " + std::to_string(c.level);
    case PrenexKind::kDelta: break;
  }
  return "Delta " + std::to_string(c.level);
}

namespace {

FormulaPtr nnf(const FormulaPtr& f, bool negated) {
  return std::visit(
      [&](const auto& n) -> FormulaPtr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Atom>) {
          return negated ? make_not(f) : f;
        } else if constexpr (std::is_same_v<T, Negation>) {
          return nnf(n.body, !negated);
        } else if constexpr (std::is_same_v<T, Binary>) {
          switch (n.op) {
            case Connective::kAnd:
              return make_binary(negated ? Connective::kOr : Connective::kAnd, nnf(n.lhs, negated),
                                 nnf(n.rhs, negated));
            case Connective::kOr:
              return make_binary(negated ? Connective::kAnd : Connective::kOr, nnf(n.lhs, negated),
                                 nnf(n.rhs, negated));
            case Connective::kImplies:
              return negated ? make_and(nnf(n.lhs, false), nnf(n.rhs, true))
                             : make_or(nnf(n.lhs, true), nnf(n.rhs, false));
            case Connective::kIff: {
              // a <-> b is (a & b) | (!a & !b); its negation (a & !b) | (!a & b).
              return make_or(make_and(nnf(n.lhs, false), nnf(n.rhs, negated)),
                             make_and(nnf(n.lhs, true), nnf(n.rhs, !negated)));
            }
          }
          return f;
        } else {
          const bool forall = (n.quantifier == Quantifier::kForall) != negated;
          FormulaPtr body = nnf(n.body, negated);
          return forall ? make_forall(n.var, std::move(body)) : make_exists(n.var, std::move(body));
        }
      },
      f->node());
}

PrenexLevels levels_of_nnf(const Formula& f) {
  return std::visit(
      [](const auto& n) -> PrenexLevels {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Atom> || std::is_same_v<T, Negation>) {
          return {0, 0};
        } else if constexpr (std::is_same_v<T, Binary>) {
          const auto a = levels_of_nnf(*n.lhs);
          const auto b = levels_of_nnf(*n.rhs);
          return {std::max(a.sigma, b.sigma), std::max(a.pi, b.pi)};
        } else {
          const auto body = levels_of_nnf(*n.body);
          if (n.quantifier == Quantifier::kExists) {
            const int s = std::min(std::max(body.sigma, 1), body.pi + 1);
            return {s, s + 1};
          }
          const int p = std::min(std::max(body.pi, 1), body.sigma + 1);
          return {p + 1, p};
        }
      },
      f.node());
}

}  // namespace

FormulaPtr to_nnf(const FormulaPtr& f) { return nnf(f, false); }

PrenexLevels prenex_levels(const Formula& f) {
  // nnf() only reads the node, so wrapping a non-owning pointer is safe here.
  const FormulaPtr alias(std::shared_ptr<const Formula>{}, &f);
  return levels_of_nnf(*to_nnf(alias));
}

PrenexClass prenex_classify(const Formula& f) {
  const auto lv = prenex_levels(f);
  if (lv.sigma == lv.pi) return {PrenexKind::kDelta, lv.sigma};
  if (lv.sigma < lv.pi) return {PrenexKind::kSigma, lv.sigma};
  return {PrenexKind::kPi, lv.pi};
}

}  // namespace young
