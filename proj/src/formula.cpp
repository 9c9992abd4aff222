#include "young/formula.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace young {

bool operator==(const Formula& a, const Formula& b) {
  if (&a == &b) return true;
  if (a.node_.index() != b.node_.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.node_);
        if constexpr (std::is_same_v<T, Atom>) {
          return x.kind == y.kind && x.lhs == y.lhs && x.rhs == y.rhs;
        } else if constexpr (std::is_same_v<T, Negation>) {
          return *x.body == *y.body;
        } else if constexpr (std::is_same_v<T, Binary>) {
          return x.op == y.op && *x.lhs == *y.lhs && *x.rhs == *y.rhs;
        } else {
          return x.quantifier == y.quantifier && x.var == y.var && *x.body == *y.body;
        }
      },
      a.node_);
}

FormulaPtr make_leq(Term lhs, Term rhs) {
  return std::make_shared<const Formula>(Atom{AtomKind::kLeq, std::move(lhs), std::move(rhs)});
}
FormulaPtr make_eq(Term lhs, Term rhs) {
  return std::make_shared<const Formula>(Atom{AtomKind::kEq, std::move(lhs), std::move(rhs)});
}
FormulaPtr make_not(FormulaPtr body) { return std::make_shared<const Formula>(Negation{std::move(body)}); }
FormulaPtr make_binary(Connective op, FormulaPtr lhs, FormulaPtr rhs) {
  return std::make_shared<const Formula>(Binary{op, std::move(lhs), std::move(rhs)});
}
FormulaPtr make_and(FormulaPtr lhs, FormulaPtr rhs) { return make_binary(Connective::kAnd, lhs, rhs); }
FormulaPtr make_or(FormulaPtr lhs, FormulaPtr rhs) { return make_binary(Connective::kOr, lhs, rhs); }
FormulaPtr make_implies(FormulaPtr lhs, FormulaPtr rhs) { return make_binary(Connective::kImplies, lhs, rhs); }
FormulaPtr make_iff(FormulaPtr lhs, FormulaPtr rhs) { return make_binary(Connective::kIff, lhs, rhs); }
FormulaPtr make_exists(std::string var, FormulaPtr body) {
  return std::make_shared<const Formula>(Quantified{Quantifier::kExists, std::move(var), std::move(body)});
}
FormulaPtr make_forall(std::string var, FormulaPtr body) {
  return std::make_shared<const Formula>(Quantified{Quantifier::kForall, std::move(var), std::move(body)});
}

namespace {

void collect_free(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Atom>) {
          for (const Term* t : {&n.lhs, &n.rhs})
            if (const auto* v = std::get_if<Var>(t); v && !bound.contains(v->name)) out.insert(v->name);
        } else if constexpr (std::is_same_v<T, Negation>) {
          collect_free(*n.body, bound, out);
        } else if constexpr (std::is_same_v<T, Binary>) {
          collect_free(*n.lhs, bound, out);
          collect_free(*n.rhs, bound, out);
        } else {
          const bool fresh = bound.insert(n.var).second;
          collect_free(*n.body, bound, out);
          if (fresh) bound.erase(n.var);
        }
      },
      f.node());
}

}  // namespace

std::set<std::string> free_variables(const Formula& f) {
  std::set<std::string> bound, out;
  collect_free(f, bound, out);
  return out;
}

bool is_quantifier_free(const Formula& f) {
  return std::visit(
      [](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Atom>) return true;
        else if constexpr (std::is_same_v<T, Negation>) return is_quantifier_free(*n.body);
        else if constexpr (std::is_same_v<T, Binary>) return is_quantifier_free(*n.lhs) && is_quantifier_free(*n.rhs);
        else return false;
      },
      f.node());
}

// ---------------------------------------------------------------------------
// Printing

namespace {

constexpr int kPrecIff = 1;
constexpr int kPrecImplies = 2;
constexpr int kPrecOr = 3;
constexpr int kPrecAnd = 4;
constexpr int kPrecUnary = 5;

std::string term_text(const Term& t) {
  if (const auto* v = std::get_if<Var>(&t)) return v->name;
  return to_string(std::get<Const>(t).value);
}

int precedence(const Formula& f) {
  if (const auto* b = std::get_if<Binary>(&f.node())) {
    switch (b->op) {
      case Connective::kIff: return kPrecIff;
      case Connective::kImplies: return kPrecImplies;
      case Connective::kOr: return kPrecOr;
      case Connective::kAnd: return kPrecAnd;
    }
  }
  return kPrecUnary;
}

void print(const Formula& f, int min_prec, std::string& out) {
  const bool wrap = precedence(f) < min_prec;
  if (wrap) out += '(';
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Atom>) {
          out += term_text(n.lhs);
          out += n.kind == AtomKind::kLeq ? " <= " : " = ";
          out += term_text(n.rhs);
        } else if constexpr (std::is_same_v<T, Negation>) {
          const auto* atom = std::get_if<Atom>(&n.body->node());
          if (atom && atom->kind == AtomKind::kEq) {
            out += term_text(atom->lhs) + " != " + term_text(atom->rhs);
          } else if (atom) {
            out += "!(";
            print(*n.body, 0, out);
            out += ')';
          } else {
            out += '!';
            print(*n.body, kPrecUnary, out);
          }
        } else if constexpr (std::is_same_v<T, Binary>) {
          int left = 0, right = 0;
          const char* op = "";
          switch (n.op) {
            case Connective::kAnd: left = kPrecAnd, right = kPrecUnary, op = " & "; break;
            case Connective::kOr: left = kPrecOr, right = kPrecAnd, op = " | "; break;
            case Connective::kImplies: left = kPrecOr, right = kPrecImplies, op = " -> "; break;
            case Connective::kIff: left = kPrecIff, right = kPrecImplies, op = " <-> "; break;
          }
          print(*n.lhs, left, out);
          out += op;
          print(*n.rhs, right, out);
        } else {
          out += n.quantifier == Quantifier::kForall ? "forall " : "exists ";
          out += n.var + " (";
          print(*n.body, 0, out);
          out += ')';
        }
      },
      f.node());
  if (wrap) out += ')';
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string out;
  print(f, 0, out);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

parse_error::parse_error(const std::string& message, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

enum class Tok {
  kEnd, kIdent, kNumber, kLBracket, kRBracket, kPlus, kLParen, kRParen, kComma, kSemicolon,
  kBang, kAmp, kBar, kArrow, kDoubleArrow, kLeq, kEq, kNeq,
};

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_blank();
      Token t;
      t.line = line_;
      t.column = col_;
      if (pos_ >= src_.size()) {
        out.push_back(t);
        return out;
      }
      const char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        t.kind = Tok::kIdent;
        while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
          t.text += advance();
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        t.kind = Tok::kNumber;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) t.text += advance();
      } else {
        t.kind = symbol();
        if (t.kind == Tok::kEnd) throw parse_error(std::string("unexpected character '") + c + "'", t.line, t.column);
      }
      out.push_back(std::move(t));
    }
  }

 private:
  Tok symbol() {
    auto take = [&](std::string_view s) {
      if (src_.substr(pos_, s.size()) != s) return false;
      for (std::size_t i = 0; i < s.size(); ++i) advance();
      return true;
    };
    if (take("<->")) return Tok::kDoubleArrow;
    if (take("<=")) return Tok::kLeq;
    if (take("->")) return Tok::kArrow;
    if (take("!=")) return Tok::kNeq;
    switch (src_[pos_]) {
      case '[': advance(); return Tok::kLBracket;
      case ']': advance(); return Tok::kRBracket;
      case '+': advance(); return Tok::kPlus;
      case '(': advance(); return Tok::kLParen;
      case ')': advance(); return Tok::kRParen;
      case ',': advance(); return Tok::kComma;
      case ';': advance(); return Tok::kSemicolon;
      case '!': advance(); return Tok::kBang;
      case '&': advance(); return Tok::kAmp;
      case '|': advance(); return Tok::kBar;
      case '=': advance(); return Tok::kEq;
      default: return Tok::kEnd;
    }
  }

  void skip_blank() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  char advance() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, ConstantTable constants)
      : toks_(std::move(tokens)), constants_(std::move(constants)) {}

  FormulaFile file() {
    while (peek().kind == Tok::kIdent && peek().text == "const") declaration();
    FormulaFile out;
    out.formula = formula();
    expect(Tok::kEnd, "end of input");
    out.constants = std::move(constants_);
    return out;
  }

 private:
  void declaration() {
    next();
    const Token name = expect(Tok::kIdent, "constant name");
    if (is_keyword(name.text)) fail(name, "'" + name.text + "' is reserved");
    expect(Tok::kEq, "'='");
    Partition value;
    if (peek().kind == Tok::kLParen) {
      value = tuple();
    } else if (peek().kind == Tok::kIdent) {
      const Token ref = next();
      auto it = constants_.find(ref.text);
      if (it == constants_.end()) fail(ref, "unknown constant '" + ref.text + "'");
      value = it->second;
    } else {
      value = literal();
    }
    expect(Tok::kSemicolon, "';'");
    constants_[name.text] = value;
  }

  FormulaPtr formula() {
    FormulaPtr lhs = implication();
    while (accept(Tok::kDoubleArrow)) lhs = make_iff(lhs, implication());
    return lhs;
  }

  FormulaPtr implication() {
    FormulaPtr lhs = disjunction();
    if (accept(Tok::kArrow)) return make_implies(lhs, implication());
    return lhs;
  }

  FormulaPtr disjunction() {
    FormulaPtr lhs = conjunction();
    while (accept(Tok::kBar)) lhs = make_or(lhs, conjunction());
    return lhs;
  }

  FormulaPtr conjunction() {
    FormulaPtr lhs = unary();
    while (accept(Tok::kAmp)) lhs = make_and(lhs, unary());
    return lhs;
  }

  FormulaPtr unary() {
    if (accept(Tok::kBang)) return make_not(unary());
    if (peek().kind == Tok::kIdent && (peek().text == "forall" || peek().text == "exists")) {
      const bool all = next().text == "forall";
      const Token var = expect(Tok::kIdent, "bound variable");
      if (is_keyword(var.text)) fail(var, "'" + var.text + "' is reserved");
      if (constants_.contains(var.text)) fail(var, "cannot quantify over constant '" + var.text + "'");
      expect(Tok::kLParen, "'(' after quantified variable");
      FormulaPtr body = formula();
      expect(Tok::kRParen, "')'");
      return all ? make_forall(var.text, body) : make_exists(var.text, body);
    }
    if (accept(Tok::kLParen)) {
      FormulaPtr inner = formula();
      expect(Tok::kRParen, "')'");
      return inner;
    }
    Term lhs = term();
    const Token op = next();
    switch (op.kind) {
      case Tok::kLeq: return make_leq(std::move(lhs), term());
      case Tok::kEq: return make_eq(std::move(lhs), term());
      case Tok::kNeq: return make_not(make_eq(std::move(lhs), term()));
      default: fail(op, "expected '<=', '=' or '!='");
    }
  }

  Term term() {
    const Token& t = peek();
    if (t.kind == Tok::kIdent) {
      if (is_keyword(t.text)) fail(t, "unexpected keyword '" + t.text + "'");
      const Token name = next();
      if (auto it = constants_.find(name.text); it != constants_.end()) return Const{it->second};
      return Var{name.text};
    }
    if (t.kind == Tok::kNumber || t.kind == Tok::kLBracket) return Const{literal()};
    fail(t, "expected a variable, constant or partition literal");
  }

  Partition literal() {
    if (peek().kind == Tok::kNumber && peek().text == "0" && toks_[pos_ + 1].kind != Tok::kLBracket) {
      next();
      return {};
    }
    std::vector<Run> terms;
    do {
      std::int64_t count = 1;
      if (peek().kind == Tok::kNumber) count = number();
      expect(Tok::kLBracket, "'['");
      const Token at = peek();
      const std::int64_t part = number();
      if (part <= 0) fail(at, "part sizes must be positive");
      expect(Tok::kRBracket, "']'");
      terms.push_back({part, count});
    } while (accept(Tok::kPlus));
    return Partition::from_runs(std::move(terms));
  }

  Partition tuple() {
    expect(Tok::kLParen, "'('");
    std::vector<std::int64_t> parts;
    if (!accept(Tok::kRParen)) {
      do {
        const Token at = peek();
        parts.push_back(number());
        if (parts.back() <= 0) fail(at, "tuple parts must be positive");
      } while (accept(Tok::kComma));
      expect(Tok::kRParen, "')'");
    }
    return Partition::from_parts(parts);
  }

  std::int64_t number() {
    const Token t = expect(Tok::kNumber, "a number");
    if (t.text.size() > 15) fail(t, "number too large");
    return std::stoll(t.text);
  }

  static bool is_keyword(const std::string& s) { return s == "forall" || s == "exists" || s == "const"; }

  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    next();
    return true;
  }
  Token expect(Tok k, const std::string& what) {
    if (peek().kind != k) fail(peek(), "expected " + what);
    return next();
  }
  [[noreturn]] static void fail(const Token& at, const std::string& message) {
    throw parse_error(message, at.line, at.column);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  ConstantTable constants_;
};

}  // namespace

FormulaFile parse_formula_file(std::string_view text) {
  return Parser(Lexer(text).run(), {}).file();
}

FormulaPtr parse_formula(std::string_view text, const ConstantTable& constants) {
  return Parser(Lexer(text).run(), constants).file().formula;
}

FormulaFile load_formula_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open formula file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_formula_file(buffer.str());
}

}  // namespace young
