#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <random>

#include "young/evaluator.hpp"
#include "young/predicates.hpp"
#include "young/prenex.hpp"

using namespace young;

namespace {

Partition P(std::initializer_list<std::int64_t> parts) { return Partition::from_parts(parts); }

const char* kCover = "x <= y & x != y & forall z (x <= z & z <= y -> x = z | z = y)";

FormulaPtr corpus(const std::string& name) { return load_formula_file(std::string(CORPUS_DIR) + "/" + name).formula; }

std::vector<std::string> corpus_files() {
  std::vector<std::string> out;
  for (const auto& entry : std::filesystem::directory_iterator(CORPUS_DIR))
    if (entry.path().extension() == ".fo") out.push_back(entry.path().string());
  std::sort(out.begin(), out.end());
  REQUIRE(out.size() >= 5);
  return out;
}

// Random formulas over three variables and two constants.
FormulaPtr random_formula(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 8);
  auto term = [&]() -> Term {
    switch (std::uniform_int_distribution<int>(0, 4)(rng)) {
      case 0: return Const{P({1, 1})};
      case 1: return Const{P({})};
      case 2: return Var{"x"};
      case 3: return Var{"y"};
      default: return Var{"z"};
    }
  };
  switch (pick(rng)) {
    case 0: return make_leq(term(), term());
    case 1: return make_eq(term(), term());
    case 2: return make_not(random_formula(rng, depth - 1));
    case 3: return make_and(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 4: return make_or(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 5: return make_implies(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 6: return make_iff(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 7: return make_exists("z", random_formula(rng, depth - 1));
    default: return make_forall("y", random_formula(rng, depth - 1));
  }
}

}  // namespace

TEST_CASE("cover formula parses to the expected tree") {
  const FormulaPtr parsed = parse_formula(kCover);
  const FormulaPtr built = make_and(
      make_and(make_leq(Var{"x"}, Var{"y"}), make_not(make_eq(Var{"x"}, Var{"y"}))),
      make_forall("z", make_implies(make_and(make_leq(Var{"x"}, Var{"z"}), make_leq(Var{"z"}, Var{"y"})),
                                    make_or(make_eq(Var{"x"}, Var{"z"}), make_eq(Var{"z"}, Var{"y"})))));
  CHECK(*parsed == *built);
  CHECK(free_variables(*parsed) == std::set<std::string>{"x", "y"});
}

TEST_CASE("constants from the prelude") {
  const auto file = parse_formula_file("const c11 = [1]+[1];\n!(c11 <= x)");
  CHECK(file.constants.at("c11") == P({1, 1}));
  CHECK(*file.formula == *make_not(make_leq(Const{P({1, 1})}, Var{"x"})));
  const auto aliased = parse_formula_file("const a = (2,1); const b = a; b <= x");
  CHECK(*aliased.formula == *make_leq(Const{P({2, 1})}, Var{"x"}));
  CHECK(*parse_formula("forall y (x <= y)") == *make_forall("y", make_leq(Var{"x"}, Var{"y"})));
  CHECK(*parse_formula("0 <= x") == *make_leq(Const{P({})}, Var{"x"}));
}

TEST_CASE("precedence and associativity") {
  const Var a{"a"}, b{"b"}, c{"c"};
  CHECK(*parse_formula("a <= b | b <= c & c <= a") ==
        *make_or(make_leq(a, b), make_and(make_leq(b, c), make_leq(c, a))));
  CHECK(*parse_formula("a <= b -> b <= c -> c <= a") ==
        *make_implies(make_leq(a, b), make_implies(make_leq(b, c), make_leq(c, a))));
  CHECK(*parse_formula("a <= b <-> b <= c -> c <= a") ==
        *make_iff(make_leq(a, b), make_implies(make_leq(b, c), make_leq(c, a))));
  CHECK(*parse_formula("!a <= b & b <= c") == *make_and(make_not(make_leq(a, b)), make_leq(b, c)));
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parse_formula_file("const c = [1];\nx <= & y");
    FAIL("expected a parse error");
  } catch (const parse_error& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 6);
  }
  try {
    parse_formula_file("forall y (x <= y");
    FAIL("expected a parse error");
  } catch (const parse_error& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 17);
  }
  CHECK_THROWS_AS(parse_formula_file("const a = b; a <= x"), parse_error);
  CHECK_THROWS_AS(parse_formula_file("x <= y $"), parse_error);
  CHECK_THROWS_AS(parse_formula_file("x <= [0]"), parse_error);
  CHECK_THROWS_AS(parse_formula_file("const c = [1]; forall c (c <= x)"), parse_error);
  CHECK_THROWS_AS(parse_formula_file("x y"), parse_error);
  CHECK_THROWS_AS(parse_formula_file(""), parse_error);
}

TEST_CASE("printer round-trips") {
  std::mt19937 rng(20240611);
  for (int i = 0; i < 2000; ++i) {
    const FormulaPtr f = random_formula(rng, 5);
    const std::string text = to_string(*f);
    REQUIRE_MESSAGE(*parse_formula(text) == *f, text);
  }
  for (const auto& path : corpus_files()) {
    const FormulaPtr f = load_formula_file(path).formula;
    REQUIRE_MESSAGE(*parse_formula(to_string(*f)) == *f, path);
  }
}

TEST_CASE("prenex classes") {
  CHECK(prenex_classify(*parse_formula(kCover)) == PrenexClass{PrenexKind::kPi, 1});
  CHECK(prenex_classify(*parse_formula("x <= y")) == PrenexClass{PrenexKind::kDelta, 0});
  CHECK(prenex_classify(*parse_formula("exists y (x <= y)")) == PrenexClass{PrenexKind::kSigma, 1});
  CHECK(prenex_classify(*parse_formula("!forall y (x <= y)")) == PrenexClass{PrenexKind::kSigma, 1});
  CHECK(prenex_classify(*parse_formula("forall y (exists z (y <= z)) & exists u (forall v (u <= v))")) ==
        PrenexClass{PrenexKind::kDelta, 3});
  CHECK(prenex_classify(*parse_formula("forall y (x <= y) <-> x = x")) == PrenexClass{PrenexKind::kDelta, 2});
  CHECK(prenex_classify(*corpus("maximal-trivial-below.fo")) == PrenexClass{PrenexKind::kPi, 2});
  CHECK(prenex_classify(*corpus("rectangular-universal.fo")) == PrenexClass{PrenexKind::kPi, 2});
  CHECK(prenex_classify(*corpus("rectangular-existential.fo")) == PrenexClass{PrenexKind::kSigma, 2});
  CHECK(prenex_classify(*corpus("total.fo")) == PrenexClass{PrenexKind::kDelta, 0});
  CHECK(prenex_classify(*corpus("trivial.fo")) == PrenexClass{PrenexKind::kPi, 1});
  CHECK(to_string(PrenexClass{PrenexKind::kPi, 1}) == "Pi 1");

  std::mt19937 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const FormulaPtr f = random_formula(rng, 5);
    REQUIRE(prenex_classify(*make_not(make_not(f))) == prenex_classify(*f));
    if (is_quantifier_free(*f)) REQUIRE(prenex_classify(*f) == PrenexClass{PrenexKind::kDelta, 0});
  }
}

TEST_CASE("evaluation examples") {
  const Universe u = Universe::enumerate(6);
  const FormulaPtr cov = parse_formula(kCover);
  CHECK(evaluate(*cov, {{"x", P({1})}, {"y", P({2})}}, u, {3, 1}));
  CHECK_FALSE(evaluate(*cov, {{"x", P({1})}, {"y", P({2, 1})}}, u, {3, 1}));
  const FormulaPtr bottom = parse_formula("forall y (x <= y)");
  for (std::int64_t n = 0; n <= 6; ++n) CHECK(evaluate(*bottom, {{"x", P({})}}, u, {n, 0}));
  CHECK_THROWS_AS(evaluate(*cov, {{"x", P({1})}}, u, {3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(evaluate(*cov, {{"x", P({1})}, {"y", P({2})}}, u, {6, 1}), insufficient_universe);
  // free variables may lie outside the quantifier range
  CHECK(evaluate(*parse_formula("x <= y"), {{"x", P({3, 3})}, {"y", P({4, 4, 1})}}, u, {2, 0}));
}

TEST_CASE("cover formula matches the structural cover relation") {
  const Universe u = Universe::enumerate(16);
  const FormulaPtr cov = parse_formula(kCover);
  const auto rel = defined_relation(*cov, {"x", "y"}, u, {15, 1});
  std::set<std::pair<Partition, Partition>> got;
  for (const auto& t : rel) got.emplace(t[0], t[1]);
  std::set<std::pair<Partition, Partition>> expected;
  for (const auto& y : u.up_to(15))
    for (const auto& x : lower_covers(y)) expected.emplace(x, y);
  CHECK(got == expected);
}

TEST_CASE("defined sets") {
  const Universe u = Universe::enumerate(22);
  const FormulaPtr tot = corpus("total.fo");
  const FormulaPtr triv = corpus("trivial.fo");
  for (std::int64_t n = 0; n <= 20; ++n)
    for (std::int64_t slack : {0, 2}) {
      std::vector<Partition> totals, trivials;
      for (const auto& p : u.up_to(n)) {
        if (is_total(p)) totals.push_back(p);
        if (is_trivial(p)) trivials.push_back(p);
      }
      REQUIRE(defined_set(*tot, "x", u, {n, slack}) == totals);
      REQUIRE(defined_set(*triv, "x", u, {n, slack}) == trivials);
    }
  CHECK(defined_set(*corpus("covers-of-atom.fo"), "y", u, {8, 1}) == std::vector<Partition>{P({2}), P({1, 1})});
  CHECK(defined_set(*corpus("maximal-trivial-below.fo"), "x", u, {8, 1}) == std::vector<Partition>{P({1, 1})});
  CHECK_THROWS_AS(defined_set(*parse_formula(kCover), "x", u, {3, 0}), std::invalid_argument);
  CHECK_THROWS_AS(defined_relation(*parse_formula(kCover), {"x", "z"}, u, {3, 0}), std::invalid_argument);
}

TEST_CASE("rectangular formulas against the oracle") {
  const Universe u = Universe::enumerate(10);
  const auto universal = defined_set(*corpus("rectangular-universal.fo"), "x", u, {9, 1});
  const auto existential = defined_set(*corpus("rectangular-existential.fo"), "x", u, {9, 1});
  std::vector<Partition> rect, nonempty_rect;
  for (const auto& p : u.up_to(9))
    if (is_rectangular(p)) {
      rect.push_back(p);
      if (!p.empty()) nonempty_rect.push_back(p);
    }
  CHECK(universal == rect);
  CHECK(existential == nonempty_rect);
}

TEST_CASE("stability diagnostics") {
  const Universe u = Universe::enumerate(12);
  CHECK(stability_check(*corpus("total.fo"), {"x"}, u, {8, 0}, {0, 1, 2}).stable());
  CHECK(stability_check(*parse_formula(kCover), {"x", "y"}, u, {6, 0}, {0, 1, 2}).stable());

  const FormulaPtr strict_up = parse_formula("exists y (x <= y & x != y)");
  const StabilityReport r = stability_check(*strict_up, {"x"}, u, {5, 0}, {0, 1});
  CHECK_FALSE(r.stable());
  // exactly the top level flips into the set
  CHECK(r.flips.size() == Universe::enumerate(5).level(5).size());
  for (const auto& f : r.flips) {
    CHECK(f.tuple[0].cardinality() == 5);
    CHECK_FALSE(f.member_before);
    CHECK(f.from_slack == 0);
    CHECK(f.to_slack == 1);
  }
  CHECK_THROWS_AS(stability_check(*strict_up, {"x"}, u, {10, 0}, {0, 3}), insufficient_universe);
}

TEST_CASE("the bundled corpus is stable across slacks") {
  const Universe u = Universe::enumerate(10);
  for (const auto& path : corpus_files()) {
    const FormulaPtr f = load_formula_file(path).formula;
    const auto free = free_variables(*f);
    const StabilityReport r = stability_check(*f, {free.begin(), free.end()}, u, {6, 0}, {0, 1, 2, 3});
    CHECK_MESSAGE(r.stable(), path);
  }
}
