#ifndef BOOLNET_DSAT_HPP_
#define BOOLNET_DSAT_HPP_

#include <optional>
#include <span>

#include "boolnet/comparison_stats.hpp"
#include "boolnet/expr.hpp"
#include "boolnet/normal_forms.hpp"

namespace boolnet {

struct FindEqualResult {
  std::optional<VarIndex> match;
  ComparisonStats stats;
};

// Merge scan over two strictly increasing lists: compare the heads, stop on
// equality, otherwise drop the smaller head. Uses at most
// d(L) + d(M) - 1 comparisons, within the 2(d(L) + d(M)) bound.
// Throws std::invalid_argument if either list is not strictly increasing.
FindEqualResult find_equal(std::span<const VarIndex> l,
                           std::span<const VarIndex> m);

struct SatVerdict {
  bool satisfiable = false;
  std::optional<TruthAssignment> witness;
  ComparisonStats stats;
};

// A conjunctive clause is satisfiable iff no variable occurs both plain and
// negated. The witness sets the plain variables to 1 and the negated to 0.
SatVerdict clause_satisfiable(const ConjClause& c);

enum class ScanMode {
  EarlyExit,  // stop at the first satisfiable clause
  FullScan,   // check every clause, for cost measurement
};

// Clauses are checked in order; the witness comes from the first satisfiable
// clause, extended with 0 for the DNF's other variables.
SatVerdict dnf_satisfiable(const DnfExpr& d,
                           ScanMode mode = ScanMode::EarlyExit);

struct CnfVerdict {
  SatVerdict verdict;
  std::size_t input_clauses = 0;
  std::size_t output_clauses = 0;
  double blowup() const {
    return input_clauses == 0
               ? 0.0
               : static_cast<double>(output_clauses) / input_clauses;
  }
};

// Distributes the CNF into a DNF and runs dnf_satisfiable on it. Throws
// ClauseCapExceeded when distribution exceeds the cap.
CnfVerdict cnf_satisfiable_via_dnf(const CnfExpr& c,
                                   const ConversionOptions& options = {},
                                   ScanMode mode = ScanMode::EarlyExit);

// Batch kernel: one verdict per DNF, in input order; parallel over the batch.
std::vector<SatVerdict> dnf_satisfiable_batch(std::span<const DnfExpr> batch,
                                              ScanMode mode = ScanMode::EarlyExit);

}  // namespace boolnet

#endif  // BOOLNET_DSAT_HPP_
