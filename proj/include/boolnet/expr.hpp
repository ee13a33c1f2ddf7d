#ifndef BOOLNET_EXPR_HPP_
#define BOOLNET_EXPR_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "boolnet/symbols.hpp"

namespace boolnet {

using VarIndex = std::uint32_t;

enum class ExprKind : std::uint8_t { Variable, Not, Or, And };
enum class Connective : std::uint8_t { Not, Or, And };

// Immutable Boolean expression tree. Copies share structure.
class Expr {
 public:
  static Expr var(VarIndex index);
  static Expr negation(Expr child);
  static Expr disjunction(Expr left, Expr right);
  static Expr conjunction(Expr left, Expr right);

  ExprKind kind() const;
  // Only valid for ExprKind::Variable.
  VarIndex index() const;
  // Operand of a negation.
  const Expr& child() const;
  const Expr& left() const;
  const Expr& right() const;

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

inline Expr operator!(Expr e) { return Expr::negation(std::move(e)); }
inline Expr operator|(Expr a, Expr b) {
  return Expr::disjunction(std::move(a), std::move(b));
}
inline Expr operator&(Expr a, Expr b) {
  return Expr::conjunction(std::move(a), std::move(b));
}

class TruthAssignment {
 public:
  TruthAssignment() = default;
  TruthAssignment(std::initializer_list<std::pair<const VarIndex, bool>> init)
      : values_(init) {}

  void set(VarIndex var, bool value) { values_[var] = value; }
  std::optional<bool> get(VarIndex var) const {
    auto it = values_.find(var);
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(VarIndex var) const { return values_.count(var) != 0; }
  std::size_t size() const { return values_.size(); }
  const std::map<VarIndex, bool>& values() const { return values_; }

  friend bool operator==(const TruthAssignment&,
                         const TruthAssignment&) = default;

 private:
  std::map<VarIndex, bool> values_;
};

class EvaluationError : public std::runtime_error {
 public:
  explicit EvaluationError(VarIndex var)
      : std::runtime_error("no truth value for variable x" +
                           std::to_string(var)),
        var_(var) {}
  VarIndex variable() const { return var_; }

 private:
  VarIndex var_;
};

// Precedence ¬ > ∧ > ∨, binary chains associate to the left.
Expr parse(std::string_view text);
Expr parse_symbols(const SymbolString& symbols);

// Minimal-parenthesis rendering: parse(render(e)) == e.
SymbolString render_symbols(const Expr& e);
std::string render(const Expr& e);

bool evaluate(const Expr& e, const TruthAssignment& t);

// Strictly increasing distinct indices.
std::vector<VarIndex> variables(const Expr& e);

enum class LengthMeasure {
  SymbolCount,          // variables, operators and parentheses, a variable = 1
  VariableOccurrences,  // every occurrence of a variable
  DistinctVariables,
  CodedSymbolCount,  // symbols of the coded rendering, xi = i + 1 symbols
};

std::size_t length(const Expr& e, LengthMeasure measure);

// Symbol string of the coded variable xi: 'x' followed by i digit marks.
SymbolString coded_variable(VarIndex index);

// Top-level split performed by the separating structure.
struct Atom {
  VarIndex index;
  friend bool operator==(const Atom&, const Atom&) = default;
};
struct Negation {
  SymbolString body;
  friend bool operator==(const Negation&, const Negation&) = default;
};
struct Binary {
  Connective op;
  SymbolString left;
  SymbolString right;
  friend bool operator==(const Binary&, const Binary&) = default;
};
using Decomposition = std::variant<Atom, Negation, Binary>;

// Splits a well-formed symbol string at its root connective and strips one
// layer of wrapping parentheses from each component. A single variable yields
// Atom (the base case). Throws ParseError on unbalanced or empty operands.
Decomposition decompose(std::string_view symbols);

// ----------------------------------------------------------------------------

struct Expr::Node {
  ExprKind kind;
  VarIndex index = 0;
  std::optional<Expr> left;
  std::optional<Expr> right;
};

}  // namespace boolnet

#endif  // BOOLNET_EXPR_HPP_
