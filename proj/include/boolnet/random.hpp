#ifndef BOOLNET_RANDOM_HPP_
#define BOOLNET_RANDOM_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "boolnet/comparison_stats.hpp"
#include "boolnet/normal_forms.hpp"

namespace boolnet {

// mt19937_64 with plain modulo reduction. The std distributions are avoided
// because their output differs between standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  // Uniform-ish in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  // Uniform-ish in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
    return lo + below(hi - lo + 1);
  }
  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

// Strictly increasing list of up to max_len values from [1, universe].
std::vector<std::uint32_t> random_sorted_list(Rng& rng, std::size_t max_len,
                                              std::uint32_t universe);

Literal random_literal(Rng& rng, VarIndex variables);

// 1..max_clauses clauses of width 1..max_width over x1..x<variables>.
DnfExpr random_dnf(Rng& rng, VarIndex variables, std::size_t max_clauses,
                   std::size_t max_width);

// Clauses of width 1..max_width until exactly `literals` literals were drawn
// (before deduplication). Sorting comparisons go to `stats`.
DnfExpr random_dnf_with_literals(Rng& rng, VarIndex variables,
                                 std::size_t literals, std::size_t max_width,
                                 ComparisonStats* stats = nullptr);

// ⋀_{i=1..k} (x_{2i-1} ∨ x_{2i})
CnfExpr pairwise_cnf(std::size_t k);

}  // namespace boolnet

#endif  // BOOLNET_RANDOM_HPP_
