#include "boolnet/random.hpp"

#include <algorithm>

namespace boolnet {

std::vector<std::uint32_t> random_sorted_list(Rng& rng, std::size_t max_len,
                                              std::uint32_t universe) {
  const std::size_t len = rng.below(std::min<std::size_t>(max_len, universe) + 1);
  std::vector<std::uint32_t> out;
  out.reserve(len);
  while (out.size() < len) {
    const auto v = static_cast<std::uint32_t>(rng.between(1, universe));
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Literal random_literal(Rng& rng, VarIndex variables) {
  return Literal{static_cast<VarIndex>(rng.between(1, variables)), rng.coin()};
}

DnfExpr random_dnf(Rng& rng, VarIndex variables, std::size_t max_clauses,
                   std::size_t max_width) {
  DnfExpr d;
  const std::size_t clauses = rng.between(1, max_clauses);
  for (std::size_t c = 0; c < clauses; ++c) {
    std::vector<Literal> lits(rng.between(1, max_width));
    for (auto& l : lits) l = random_literal(rng, variables);
    d.clauses.push_back(normalize_clause(lits));
  }
  return d;
}

DnfExpr random_dnf_with_literals(Rng& rng, VarIndex variables,
                                 std::size_t literals, std::size_t max_width,
                                 ComparisonStats* stats) {
  DnfExpr d;
  std::size_t drawn = 0;
  while (drawn < literals) {
    const std::size_t width =
        std::min<std::size_t>(rng.between(1, max_width), literals - drawn);
    std::vector<Literal> lits(width);
    for (auto& l : lits) l = random_literal(rng, variables);
    d.clauses.push_back(normalize_clause(lits, stats));
    drawn += width;
  }
  return d;
}

CnfExpr pairwise_cnf(std::size_t k) {
  CnfExpr c;
  for (std::size_t i = 1; i <= k; ++i) {
    const Literal pair[] = {Literal::pos(static_cast<VarIndex>(2 * i - 1)),
                            Literal::pos(static_cast<VarIndex>(2 * i))};
    c.clauses.push_back(DisjClause::normalize(pair));
  }
  return c;
}

}  // namespace boolnet
