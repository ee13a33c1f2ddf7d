#ifndef BOOLNET_COMPARISON_STATS_HPP_
#define BOOLNET_COMPARISON_STATS_HPP_

#include <cstdint>

namespace boolnet {

// Operation counters for the merge scan and the clause sort.
struct ComparisonStats {
  std::uint64_t comparisons = 0;  // literal-index comparisons in merge scans
  std::uint64_t sort_ops = 0;     // comparisons spent sorting literals
  std::uint64_t clauses_checked = 0;
  bool aborted_early = false;

  ComparisonStats& operator+=(const ComparisonStats& o) {
    comparisons += o.comparisons;
    sort_ops += o.sort_ops;
    clauses_checked += o.clauses_checked;
    aborted_early = aborted_early || o.aborted_early;
    return *this;
  }
  friend bool operator==(const ComparisonStats&,
                         const ComparisonStats&) = default;
};

}  // namespace boolnet

#endif  // BOOLNET_COMPARISON_STATS_HPP_
