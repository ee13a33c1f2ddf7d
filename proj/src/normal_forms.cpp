#include "boolnet/normal_forms.hpp"

#include <algorithm>
#include <limits>

namespace boolnet {

template <class Tag>
Clause<Tag> Clause<Tag>::normalize(std::span<const Literal> literals,
                                   ComparisonStats* stats) {
  if (literals.empty()) throw std::invalid_argument("clause has no literals");
  std::vector<Literal> out(literals.begin(), literals.end());
  std::uint64_t comparisons = 0;
  std::stable_sort(out.begin(), out.end(),
                   [&comparisons](const Literal& a, const Literal& b) {
                     ++comparisons;
                     return clause_order(a, b);
                   });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (stats) stats->sort_ops += comparisons;
  return Clause(std::move(out));
}

template <class Tag>
Clause<Tag> Clause<Tag>::from_normalized(std::vector<Literal> literals) {
  if (literals.empty()) throw std::invalid_argument("clause has no literals");
  for (std::size_t i = 0; i < literals.size(); ++i) {
    if (literals[i].var == 0)
      throw std::invalid_argument("variable indices start at 1");
    if (i > 0 && !clause_order(literals[i - 1], literals[i]))
      throw std::invalid_argument(
          "clause literals out of order or duplicated at position " +
          std::to_string(i + 1));
  }
  return Clause(std::move(literals));
}

template class Clause<ConjunctionTag>;
template class Clause<DisjunctionTag>;

namespace {

using RawClauses = std::vector<std::vector<Literal>>;

// `product_on_and` selects DNF (true) or CNF (false) distribution.
RawClauses distribute(const Expr& e, bool negated, bool product_on_and,
                      const ConversionOptions& options) {
  switch (e.kind()) {
    case ExprKind::Variable:
      return {{Literal{e.index(), negated}}};
    case ExprKind::Not:
      return distribute(e.child(), !negated, product_on_and, options);
    default: break;
  }
  // De Morgan: a negated ∧ behaves as ∨ and vice versa.
  const bool is_and = (e.kind() == ExprKind::And) != negated;
  RawClauses l = distribute(e.left(), negated, product_on_and, options);
  RawClauses r = distribute(e.right(), negated, product_on_and, options);
  if (is_and != product_on_and) {
    if (l.size() + r.size() > options.clause_cap)
      throw ClauseCapExceeded(l.size() + r.size(), options.clause_cap);
    l.insert(l.end(), std::make_move_iterator(r.begin()),
             std::make_move_iterator(r.end()));
    return l;
  }
  // Saturates instead of wrapping on overflow.
  std::size_t requested;
  if (__builtin_mul_overflow(l.size(), r.size(), &requested))
    requested = std::numeric_limits<std::size_t>::max();
  if (requested > options.clause_cap)
    throw ClauseCapExceeded(requested, options.clause_cap);
  RawClauses out;
  out.reserve(requested);
  for (const auto& a : l) {
    for (const auto& b : r) {
      std::vector<Literal> c = a;
      c.insert(c.end(), b.begin(), b.end());
      out.push_back(std::move(c));
    }
  }
  return out;
}

template <class Tag>
bool complementary(const Clause<Tag>& c) {
  // Positive block precedes negative block, each sorted: merge them.
  const auto& lits = c.literals();
  auto split = std::find_if(lits.begin(), lits.end(),
                            [](const Literal& l) { return l.negated; });
  auto p = lits.begin();
  auto n = split;
  while (p != split && n != lits.end()) {
    if (p->var == n->var) return true;
    if (p->var < n->var) ++p; else ++n;
  }
  return false;
}

template <class Tag>
std::vector<Clause<Tag>> finish(RawClauses raw,
                                const ConversionOptions& options) {
  std::vector<Clause<Tag>> out;
  out.reserve(raw.size());
  for (const auto& c : raw) out.push_back(Clause<Tag>::normalize(c));
  if (options.drop_contradictions) {
    std::vector<Clause<Tag>> kept;
    for (auto& c : out)
      if (!complementary(c)) kept.push_back(std::move(c));
    // A form with no clauses has no expression; keep one representative.
    if (kept.empty() && !out.empty()) kept.push_back(std::move(out.front()));
    out = std::move(kept);
  }
  return out;
}

Expr literal_expr(const Literal& l) {
  Expr v = Expr::var(l.var);
  return l.negated ? Expr::negation(std::move(v)) : v;
}

Expr chain(const std::vector<Literal>& lits, bool conjunction) {
  Expr e = literal_expr(lits.front());
  for (std::size_t i = 1; i < lits.size(); ++i) {
    e = conjunction ? Expr::conjunction(std::move(e), literal_expr(lits[i]))
                    : Expr::disjunction(std::move(e), literal_expr(lits[i]));
  }
  return e;
}

template <class C>
Expr fold(const std::vector<C>& clauses, bool conjunction) {
  if (clauses.empty()) throw std::invalid_argument("normal form has no clauses");
  Expr e = embed(clauses.front());
  for (std::size_t i = 1; i < clauses.size(); ++i) {
    e = conjunction ? Expr::conjunction(std::move(e), embed(clauses[i]))
                    : Expr::disjunction(std::move(e), embed(clauses[i]));
  }
  return e;
}

template <class C>
VarIndex max_var(const std::vector<C>& clauses) {
  VarIndex m = 0;
  for (const auto& c : clauses)
    for (const auto& l : c.literals()) m = std::max(m, l.var);
  return m;
}

}  // namespace

DnfExpr to_dnf(const Expr& e, const ConversionOptions& options) {
  return {finish<ConjunctionTag>(distribute(e, false, true, options), options)};
}

CnfExpr to_cnf(const Expr& e, const ConversionOptions& options) {
  return {finish<DisjunctionTag>(distribute(e, false, false, options), options)};
}

Expr embed(const ConjClause& c) { return chain(c.literals(), true); }
Expr embed(const DisjClause& c) { return chain(c.literals(), false); }
Expr embed(const DnfExpr& d) { return fold(d.clauses, false); }
Expr embed(const CnfExpr& c) { return fold(c.clauses, true); }

VarIndex max_variable(const DnfExpr& d) { return max_var(d.clauses); }
VarIndex max_variable(const CnfExpr& c) { return max_var(c.clauses); }

}  // namespace boolnet
