#include "boolnet/dsat.hpp"

#include <stdexcept>
#include <string>

namespace boolnet {

namespace {

void require_strictly_increasing(std::span<const VarIndex> list,
                                 const char* name) {
  for (std::size_t i = 1; i < list.size(); ++i)
    if (!(list[i - 1] < list[i]))
      throw std::invalid_argument(std::string("list ") + name +
                                  " is not strictly increasing at position " +
                                  std::to_string(i + 1));
}

}  // namespace

FindEqualResult find_equal(std::span<const VarIndex> l,
                           std::span<const VarIndex> m) {
  require_strictly_increasing(l, "L");
  require_strictly_increasing(m, "M");
  FindEqualResult result;
  std::size_t i = 0, j = 0;
  while (i < l.size() && j < m.size()) {
    ++result.stats.comparisons;
    if (l[i] == m[j]) {
      result.match = l[i];
      break;
    }
    if (l[i] < m[j]) ++i; else ++j;
  }
  return result;
}

SatVerdict clause_satisfiable(const ConjClause& c) {
  // One linear pass separates plain from negated variables.
  std::vector<VarIndex> plain, negated;
  for (const Literal& lit : c.literals())
    (lit.negated ? negated : plain).push_back(lit.var);

  FindEqualResult scan = find_equal(plain, negated);
  SatVerdict v;
  v.stats = scan.stats;
  v.stats.clauses_checked = 1;
  v.satisfiable = !scan.match.has_value();
  if (v.satisfiable) {
    TruthAssignment t;
    for (VarIndex x : plain) t.set(x, true);
    for (VarIndex x : negated) t.set(x, false);
    v.witness = std::move(t);
  }
  return v;
}

SatVerdict dnf_satisfiable(const DnfExpr& d, ScanMode mode) {
  SatVerdict result;
  for (std::size_t i = 0; i < d.clauses.size(); ++i) {
    SatVerdict v = clause_satisfiable(d.clauses[i]);
    result.stats += v.stats;
    if (v.satisfiable && !result.satisfiable) {
      result.satisfiable = true;
      result.witness = std::move(v.witness);
      if (mode == ScanMode::EarlyExit) {
        result.stats.aborted_early = i + 1 < d.clauses.size();
        break;
      }
    }
  }
  if (result.witness) {
    for (const auto& c : d.clauses)
      for (const Literal& lit : c.literals())
        if (!result.witness->contains(lit.var)) result.witness->set(lit.var, false);
  }
  return result;
}

CnfVerdict cnf_satisfiable_via_dnf(const CnfExpr& c,
                                   const ConversionOptions& options,
                                   ScanMode mode) {
  const DnfExpr dnf = to_dnf(embed(c), options);
  CnfVerdict out;
  out.input_clauses = c.clauses.size();
  out.output_clauses = dnf.clauses.size();
  out.verdict = dnf_satisfiable(dnf, mode);
  // Witness covers every CNF variable, including ones the DNF clause lost.
  if (out.verdict.witness) {
    for (const auto& clause : c.clauses)
      for (const Literal& lit : clause.literals())
        if (!out.verdict.witness->contains(lit.var))
          out.verdict.witness->set(lit.var, false);
  }
  return out;
}

std::vector<SatVerdict> dnf_satisfiable_batch(std::span<const DnfExpr> batch,
                                              ScanMode mode) {
  std::vector<SatVerdict> out(batch.size());
  const auto n = static_cast<std::int64_t>(batch.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < n; ++i) out[i] = dnf_satisfiable(batch[i], mode);
  return out;
}

}  // namespace boolnet
