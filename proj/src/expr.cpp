#include "boolnet/expr.hpp"

#include <algorithm>
#include <set>

namespace boolnet {

Expr Expr::var(VarIndex index) {
  if (index == 0) throw std::invalid_argument("variable indices start at 1");
  return Expr(std::make_shared<const Node>(
      Node{ExprKind::Variable, index, std::nullopt, std::nullopt}));
}

Expr Expr::negation(Expr child) {
  return Expr(std::make_shared<const Node>(
      Node{ExprKind::Not, 0, std::move(child), std::nullopt}));
}

Expr Expr::disjunction(Expr left, Expr right) {
  return Expr(std::make_shared<const Node>(
      Node{ExprKind::Or, 0, std::move(left), std::move(right)}));
}

Expr Expr::conjunction(Expr left, Expr right) {
  return Expr(std::make_shared<const Node>(
      Node{ExprKind::And, 0, std::move(left), std::move(right)}));
}

ExprKind Expr::kind() const { return node_->kind; }
VarIndex Expr::index() const { return node_->index; }
const Expr& Expr::child() const { return *node_->left; }
const Expr& Expr::left() const { return *node_->left; }
const Expr& Expr::right() const { return *node_->right; }

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case ExprKind::Variable: return a.index() == b.index();
    case ExprKind::Not: return a.child() == b.child();
    default: return a.left() == b.left() && a.right() == b.right();
  }
}

namespace {

class Parser {
 public:
  explicit Parser(const SymbolString& s) : s_(s) {}

  Expr run() {
    if (s_.empty()) throw ParseError(1, "empty expression");
    Expr e = disjunction();
    if (pos_ != s_.size()) {
      throw ParseError(pos_ + 1, s_[pos_] == sym::kClose
                                     ? "unbalanced ')'"
                                     : "unexpected symbol");
    }
    return e;
  }

 private:
  Expr disjunction() {
    Expr e = conjunction();
    while (peek() == sym::kOr) {
      ++pos_;
      e = Expr::disjunction(std::move(e), conjunction());
    }
    return e;
  }

  Expr conjunction() {
    Expr e = unary();
    while (peek() == sym::kAnd) {
      ++pos_;
      e = Expr::conjunction(std::move(e), unary());
    }
    return e;
  }

  Expr unary() {
    if (peek() == sym::kNot) {
      ++pos_;
      return Expr::negation(unary());
    }
    return primary();
  }

  Expr primary() {
    const char c = peek();
    if (c == sym::kVar) {
      ++pos_;
      VarIndex index = 0;
      while (peek() == sym::kDigit) {
        ++index;
        ++pos_;
      }
      if (index == 0) throw ParseError(pos_ + 1, "variable mark without digits");
      return Expr::var(index);
    }
    if (c == sym::kOpen) {
      const std::size_t open = pos_;
      ++pos_;
      Expr e = disjunction();
      if (peek() != sym::kClose) throw ParseError(open + 1, "unbalanced '('");
      ++pos_;
      return e;
    }
    if (c == '\0') throw ParseError(pos_ + 1, "missing operand");
    throw ParseError(pos_ + 1, "operator without operand");
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  const SymbolString& s_;
  std::size_t pos_ = 0;
};

// Binding strength used by the renderer: higher binds tighter.
int strength(ExprKind k) {
  switch (k) {
    case ExprKind::Or: return 1;
    case ExprKind::And: return 2;
    default: return 3;
  }
}

void render_into(const Expr& e, SymbolString& out);

void render_operand(const Expr& e, bool parens, SymbolString& out) {
  if (parens) out.push_back(sym::kOpen);
  render_into(e, out);
  if (parens) out.push_back(sym::kClose);
}

void render_into(const Expr& e, SymbolString& out) {
  switch (e.kind()) {
    case ExprKind::Variable:
      out += coded_variable(e.index());
      break;
    case ExprKind::Not:
      out.push_back(sym::kNot);
      render_operand(e.child(), strength(e.child().kind()) < 3, out);
      break;
    case ExprKind::Or:
    case ExprKind::And: {
      const int s = strength(e.kind());
      render_operand(e.left(), strength(e.left().kind()) < s, out);
      out.push_back(e.kind() == ExprKind::Or ? sym::kOr : sym::kAnd);
      // Right operands of equal strength need parens: chains are left-assoc.
      render_operand(e.right(), strength(e.right().kind()) <= s, out);
      break;
    }
  }
}

void collect(const Expr& e, std::set<VarIndex>& vars, std::size_t& occurrences,
             std::size_t& symbols) {
  switch (e.kind()) {
    case ExprKind::Variable:
      vars.insert(e.index());
      ++occurrences;
      ++symbols;
      break;
    case ExprKind::Not:
      ++symbols;
      if (strength(e.child().kind()) < 3) symbols += 2;
      collect(e.child(), vars, occurrences, symbols);
      break;
    default: {
      const int s = strength(e.kind());
      ++symbols;
      if (strength(e.left().kind()) < s) symbols += 2;
      if (strength(e.right().kind()) <= s) symbols += 2;
      collect(e.left(), vars, occurrences, symbols);
      collect(e.right(), vars, occurrences, symbols);
    }
  }
}

// Index one past the parenthesis matching the '(' at `open`, or npos.
std::size_t match_paren(std::string_view s, std::size_t open) {
  int depth = 0;
  for (std::size_t i = open; i < s.size(); ++i) {
    if (s[i] == sym::kOpen) ++depth;
    if (s[i] == sym::kClose && --depth == 0) return i + 1;
  }
  return std::string_view::npos;
}

bool wrapped(std::string_view s) {
  return s.size() >= 2 && s.front() == sym::kOpen &&
         match_paren(s, 0) == s.size();
}

SymbolString strip_one(std::string_view s, std::size_t offset) {
  if (s.empty()) throw ParseError(offset + 1, "empty operand");
  if (wrapped(s)) s = s.substr(1, s.size() - 2);
  if (s.empty()) throw ParseError(offset + 2, "empty parentheses");
  return SymbolString(s);
}

}  // namespace

Expr parse_symbols(const SymbolString& symbols) {
  return Parser(symbols).run();
}

Expr parse(std::string_view text) { return parse_symbols(to_symbols(text)); }

SymbolString render_symbols(const Expr& e) {
  SymbolString out;
  render_into(e, out);
  return out;
}

std::string render(const Expr& e) { return to_text(render_symbols(e)); }

bool evaluate(const Expr& e, const TruthAssignment& t) {
  switch (e.kind()) {
    case ExprKind::Variable: {
      auto v = t.get(e.index());
      if (!v) throw EvaluationError(e.index());
      return *v;
    }
    case ExprKind::Not: return !evaluate(e.child(), t);
    case ExprKind::Or: {
      // Both sides are evaluated so that a missing variable is always reported.
      const bool l = evaluate(e.left(), t);
      const bool r = evaluate(e.right(), t);
      return l || r;
    }
    case ExprKind::And: {
      const bool l = evaluate(e.left(), t);
      const bool r = evaluate(e.right(), t);
      return l && r;
    }
  }
  return false;
}

std::vector<VarIndex> variables(const Expr& e) {
  std::set<VarIndex> vars;
  std::size_t occurrences = 0, symbols = 0;
  collect(e, vars, occurrences, symbols);
  return {vars.begin(), vars.end()};
}

std::size_t length(const Expr& e, LengthMeasure measure) {
  std::set<VarIndex> vars;
  std::size_t occurrences = 0, symbols = 0;
  collect(e, vars, occurrences, symbols);
  switch (measure) {
    case LengthMeasure::SymbolCount: return symbols;
    case LengthMeasure::VariableOccurrences: return occurrences;
    case LengthMeasure::DistinctVariables: return vars.size();
    case LengthMeasure::CodedSymbolCount: return render_symbols(e).size();
  }
  return 0;
}

SymbolString coded_variable(VarIndex index) {
  SymbolString s(1, sym::kVar);
  s.append(index, sym::kDigit);
  return s;
}

Decomposition decompose(std::string_view s) {
  std::size_t offset = 0;
  while (wrapped(s)) {
    s = s.substr(1, s.size() - 2);
    ++offset;
  }
  if (s.empty()) throw ParseError(offset + 1, "empty expression");

  // The root is the last top-level ∨, else the last top-level ∧.
  std::size_t last_or = std::string_view::npos;
  std::size_t last_and = std::string_view::npos;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    switch (s[i]) {
      case sym::kOpen: ++depth; break;
      case sym::kClose:
        if (--depth < 0) throw ParseError(offset + i + 1, "unbalanced ')'");
        break;
      case sym::kOr:
        if (depth == 0) last_or = i;
        break;
      case sym::kAnd:
        if (depth == 0) last_and = i;
        break;
      default: break;
    }
  }
  if (depth != 0) throw ParseError(offset + 1, "unbalanced '('");

  const std::size_t split =
      last_or != std::string_view::npos ? last_or : last_and;
  if (split != std::string_view::npos) {
    return Binary{s[split] == sym::kOr ? Connective::Or : Connective::And,
                  strip_one(s.substr(0, split), offset),
                  strip_one(s.substr(split + 1), offset + split + 1)};
  }
  if (s.front() == sym::kNot) return Negation{strip_one(s.substr(1), offset + 1)};

  if (s.front() == sym::kVar && s.size() >= 2 &&
      std::all_of(s.begin() + 1, s.end(),
                  [](char c) { return c == sym::kDigit; })) {
    return Atom{static_cast<VarIndex>(s.size() - 1)};
  }
  throw ParseError(offset + 1, "not a well-formed expression");
}

}  // namespace boolnet
