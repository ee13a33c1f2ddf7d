#ifndef BOOLNET_BENCH_HPP_
#define BOOLNET_BENCH_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "boolnet/network.hpp"

namespace boolnet {

// One CSV row. Columns that a scenario does not measure stay 0.
struct BenchRecord {
  std::string scenario;
  std::uint64_t k = 0;
  std::uint64_t n_or_l = 0;
  std::uint64_t cells = 0;
  std::uint64_t trie_nodes = 0;
  std::uint64_t build_ops = 0;
  double fast_path_fraction = 0;
  double query_steps_mean = 0;
  double wall_time_ms = 0;
  std::uint64_t peak_cell_count = 0;
  double growth_ratio = 0;  // cells(n) / cells(n-1)
  std::uint64_t comparisons = 0;
  std::uint64_t sort_ops = 0;
  double fitted_c = 0;  // sort_ops / (L log2 L)
  std::uint64_t output_clauses = 0;
  std::uint64_t violations = 0;
  bool aborted = false;
};

std::string bench_csv_header();
std::string to_csv(const BenchRecord& r);

struct BenchParams {
  VarIndex k = 2;
  std::size_t n_min = 4;
  std::size_t n_max = 9;
  std::vector<std::size_t> literal_counts{100, 1000, 10000};
  std::size_t trials = 5;
  std::size_t k_min = 1;  // cnf-blowup pair count range
  std::size_t k_max = 10;
  std::size_t samples = 0;  // query-path; 0 queries every hosted expression
  std::uint64_t seed = 0;
  FallbackPolicy policy = FallbackPolicy::Oracle;
  CostModel cost_model = CostModel::Unit;
  std::size_t budget = 10'000'000;
  bool wall_time = false;  // off keeps the CSV byte-identical across runs
};

inline constexpr std::string_view kScenarios[] = {"net-growth", "dsat-scaling",
                                                  "cnf-blowup", "query-path"};

// Throws std::invalid_argument for an unknown scenario. A budget overrun is a
// row with aborted set, after which the sweep stops.
std::vector<BenchRecord> run_bench(std::string_view scenario,
                                   const BenchParams& params);

}  // namespace boolnet

#endif  // BOOLNET_BENCH_HPP_
