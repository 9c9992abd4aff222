#pragma once

#include <cstdint>
#include <string>

#include "young/formula.hpp"

namespace young {

enum class PrenexKind { kSigma, kPi, kDelta };

/// Syntactic complexity tag. Level 0 is always Delta 0.
struct PrenexClass {
  PrenexKind kind = PrenexKind::kDelta;
  int level = 0;

  friend bool operator==(const PrenexClass&, const PrenexClass&) = default;
};

std::string to_string(const PrenexClass& c);  // "Sigma 2", "Pi 1", "Delta 0"

/// Negation normal form: -> and <-> expanded, negations pushed onto atoms.
FormulaPtr to_nnf(const FormulaPtr& f);

/// Smallest n for which the formula, prenexed by the usual rewriting, lands in
/// Sigma_n and in Pi_n respectively.
struct PrenexLevels {
  int sigma = 0;
  int pi = 0;
};

PrenexLevels prenex_levels(const Formula& f);

/// Sigma n when sigma < pi, Pi n when pi < sigma, Delta n when they meet.
/// An upper bound on the semantic class: logically equivalent formulas may
/// sit lower.
PrenexClass prenex_classify(const Formula& f);

}  // namespace young
