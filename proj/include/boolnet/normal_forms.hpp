#ifndef BOOLNET_NORMAL_FORMS_HPP_
#define BOOLNET_NORMAL_FORMS_HPP_

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "boolnet/comparison_stats.hpp"
#include "boolnet/expr.hpp"

namespace boolnet {

struct Literal {
  VarIndex var;
  bool negated = false;

  static Literal pos(VarIndex v) { return {v, false}; }
  static Literal neg(VarIndex v) { return {v, true}; }

  friend bool operator==(const Literal&, const Literal&) = default;
};

// Clause order: every positive literal before every negated one, each block
// by increasing index.
inline bool clause_order(const Literal& a, const Literal& b) {
  if (a.negated != b.negated) return !a.negated;
  return a.var < b.var;
}

struct ConjunctionTag {};
struct DisjunctionTag {};

// Literals combined by a single connective, held in clause order without
// duplicates. The only ways in are normalize() and from_normalized().
template <class Tag>
class Clause {
 public:
  // Sorts and deduplicates; sorting comparisons are added to stats.sort_ops.
  static Clause normalize(std::span<const Literal> literals,
                          ComparisonStats* stats = nullptr);
  // Validates an already ordered list; throws std::invalid_argument otherwise.
  static Clause from_normalized(std::vector<Literal> literals);

  const std::vector<Literal>& literals() const { return literals_; }
  std::size_t size() const { return literals_.size(); }

  friend bool operator==(const Clause&, const Clause&) = default;

 private:
  explicit Clause(std::vector<Literal> l) : literals_(std::move(l)) {}
  std::vector<Literal> literals_;
};

using ConjClause = Clause<ConjunctionTag>;
using DisjClause = Clause<DisjunctionTag>;

inline ConjClause normalize_clause(std::span<const Literal> literals,
                                   ComparisonStats* stats = nullptr) {
  return ConjClause::normalize(literals, stats);
}

// Disjunction of conjunctive clauses.
struct DnfExpr {
  std::vector<ConjClause> clauses;
  friend bool operator==(const DnfExpr&, const DnfExpr&) = default;
};

// Conjunction of disjunctive clauses.
struct CnfExpr {
  std::vector<DisjClause> clauses;
  friend bool operator==(const CnfExpr&, const CnfExpr&) = default;
};

inline constexpr std::size_t kDefaultClauseCap = 1'000'000;

struct ConversionOptions {
  std::size_t clause_cap = kDefaultClauseCap;
  // Remove clauses holding a variable together with its negation.
  bool drop_contradictions = false;
};

class ClauseCapExceeded : public std::runtime_error {
 public:
  ClauseCapExceeded(std::size_t requested, std::size_t cap)
      : std::runtime_error("normal form needs " + std::to_string(requested) +
                           " clauses, cap is " + std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}
  std::size_t requested() const { return requested_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t requested_;
  std::size_t cap_;
};

// Negations pushed to the literals, then distribution.
DnfExpr to_dnf(const Expr& e, const ConversionOptions& options = {});
CnfExpr to_cnf(const Expr& e, const ConversionOptions& options = {});

Expr embed(const ConjClause& c);
Expr embed(const DisjClause& c);
Expr embed(const DnfExpr& d);
Expr embed(const CnfExpr& c);

// Highest variable index mentioned, 0 for an empty form.
VarIndex max_variable(const DnfExpr& d);
VarIndex max_variable(const CnfExpr& c);

}  // namespace boolnet

#endif  // BOOLNET_NORMAL_FORMS_HPP_
