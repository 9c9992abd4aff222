#pragma once

// First-order formulas over the signature {<=, =} with partition constants.
//
// Surface syntax (one formula per file, `#` starts a line comment):
//
//   file     := { "const" NAME "=" value ";" } formula
//   value    := partition-literal | tuple | NAME
//   formula  := implies { "<->" implies }
//   implies  := or [ "->" implies ]
//   or       := and { "|" and }
//   and      := unary { "&" unary }
//   unary    := "!" unary | ("forall" | "exists") NAME "(" formula ")"
//             | "(" formula ")" | term ("<=" | "=" | "!=") term
//   term     := NAME | partition-literal
//
// Partition literals use the canonical-sum form (`[1]+[1]`, `2[3]+[1]`, `0`).
// `a != b` is sugar for `!(a = b)`. An identifier names a constant when the
// prelude declares it and a variable otherwise.

#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "young/partition.hpp"

namespace young {

struct Var {
  std::string name;
  friend bool operator==(const Var&, const Var&) = default;
};

struct Const {
  Partition value;
  friend bool operator==(const Const&, const Const&) = default;
};

using Term = std::variant<Var, Const>;

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

enum class AtomKind { kLeq, kEq };
enum class Connective { kAnd, kOr, kImplies, kIff };
enum class Quantifier { kExists, kForall };

struct Atom {
  AtomKind kind;
  Term lhs;
  Term rhs;
};

struct Negation {
  FormulaPtr body;
};

struct Binary {
  Connective op;
  FormulaPtr lhs;
  FormulaPtr rhs;
};

struct Quantified {
  Quantifier quantifier;
  std::string var;
  FormulaPtr body;
};

/// Immutable formula node; subformulas are shared.
class Formula {
 public:
  using Node = std::variant<Atom, Negation, Binary, Quantified>;

  explicit Formula(Node node) : node_(std::move(node)) {}
  const Node& node() const noexcept { return node_; }

  /// Structural equality.
  friend bool operator==(const Formula& a, const Formula& b);

 private:
  Node node_;
};

// Builders.
FormulaPtr make_leq(Term lhs, Term rhs);
FormulaPtr make_eq(Term lhs, Term rhs);
FormulaPtr make_not(FormulaPtr body);
FormulaPtr make_binary(Connective op, FormulaPtr lhs, FormulaPtr rhs);
FormulaPtr make_and(FormulaPtr lhs, FormulaPtr rhs);
FormulaPtr make_or(FormulaPtr lhs, FormulaPtr rhs);
FormulaPtr make_implies(FormulaPtr lhs, FormulaPtr rhs);
FormulaPtr make_iff(FormulaPtr lhs, FormulaPtr rhs);
FormulaPtr make_exists(std::string var, FormulaPtr body);
FormulaPtr make_forall(std::string var, FormulaPtr body);

std::set<std::string> free_variables(const Formula& f);
bool is_quantifier_free(const Formula& f);

/// Renders in the surface syntax with minimal parentheses; constants are
/// printed as literals, so parse_formula(to_string(f)) == f.
std::string to_string(const Formula& f);

class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& message, int line, int column);
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

using ConstantTable = std::map<std::string, Partition, std::less<>>;

struct FormulaFile {
  ConstantTable constants;
  FormulaPtr formula;
};

/// Parses a formula file (prelude plus formula). Throws parse_error.
FormulaFile parse_formula_file(std::string_view text);

/// Parses a bare formula against an existing constant table.
FormulaPtr parse_formula(std::string_view text, const ConstantTable& constants = {});

FormulaFile load_formula_file(const std::string& path);

}  // namespace young
