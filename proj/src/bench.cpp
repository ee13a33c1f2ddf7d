#include "boolnet/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "boolnet/dsat.hpp"
#include "boolnet/oracle.hpp"
#include "boolnet/random.hpp"

namespace boolnet {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

class Stopwatch {
 public:
  explicit Stopwatch(bool enabled)
      : enabled_(enabled), start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    if (!enabled_) return 0;
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point start_;
};

BuildOptions build_options(const BenchParams& p) {
  BuildOptions o;
  o.policy = p.policy;
  o.cost_model = p.cost_model;
  o.node_budget = p.budget;
  return o;
}

void fill_from_network(BenchRecord& r, const Network& net) {
  const NetworkMetrics& m = net.metrics();
  r.cells = m.cells;
  r.trie_nodes = m.trie_nodes;
  r.build_ops = m.build_ops;
  r.fast_path_fraction =
      m.cells ? static_cast<double>(m.fast_path_cells) / m.cells : 0.0;
  r.peak_cell_count = m.cells;
  r.aborted = net.aborted();
}

std::vector<BenchRecord> net_growth(const BenchParams& p) {
  std::vector<BenchRecord> rows;
  std::uint64_t previous = 0;
  for (std::size_t n = std::max<std::size_t>(p.n_min, 2); n <= p.n_max; ++n) {
    Stopwatch watch(p.wall_time);
    const Network net = build_network(p.k, n, build_options(p));
    BenchRecord r{"net-growth", p.k, n};
    fill_from_network(r, net);
    r.growth_ratio = previous ? static_cast<double>(r.cells) / previous : 0.0;
    r.wall_time_ms = watch.ms();
    rows.push_back(r);
    if (net.aborted()) break;
    previous = r.cells;
  }
  return rows;
}

std::vector<BenchRecord> dsat_scaling(const BenchParams& p) {
  std::vector<BenchRecord> rows;
  Rng rng(p.seed);
  for (std::size_t L : p.literal_counts) {
    Stopwatch watch(p.wall_time);
    BenchRecord r{"dsat-scaling", 0, L};
    for (std::size_t t = 0; t < p.trials; ++t) {
      ComparisonStats sort;
      const DnfExpr d = random_dnf_with_literals(rng, 64, L, 8, &sort);
      const SatVerdict v = dnf_satisfiable(d, ScanMode::FullScan);
      std::size_t kept = 0;
      for (const auto& c : d.clauses) kept += c.size();
      r.comparisons = std::max(r.comparisons, v.stats.comparisons);
      r.sort_ops = std::max(r.sort_ops, sort.sort_ops);
      if (v.stats.comparisons > 4 * kept) ++r.violations;
      if (L > 1)
        r.fitted_c = std::max(
            r.fitted_c, static_cast<double>(sort.sort_ops) / (L * std::log2(L)));
    }
    r.wall_time_ms = watch.ms();
    rows.push_back(r);
  }
  return rows;
}

std::vector<BenchRecord> cnf_blowup(const BenchParams& p) {
  std::vector<BenchRecord> rows;
  for (std::size_t k = std::max<std::size_t>(p.k_min, 1); k <= p.k_max; ++k) {
    Stopwatch watch(p.wall_time);
    BenchRecord r{"cnf-blowup", k, k};
    ConversionOptions options;
    options.clause_cap = p.budget;
    try {
      const CnfExpr cnf = pairwise_cnf(k);
      const CnfVerdict v = cnf_satisfiable_via_dnf(cnf, options);
      r.output_clauses = v.output_clauses;
      r.comparisons = v.verdict.stats.comparisons;
      if (v.output_clauses != (std::uint64_t{1} << k)) ++r.violations;
      if (k <= 6 && v.verdict.satisfiable != satisfiable(classify(embed(cnf))))
        ++r.violations;
    } catch (const ClauseCapExceeded&) {
      r.aborted = true;
    }
    r.wall_time_ms = watch.ms();
    rows.push_back(r);
    if (r.aborted) break;
  }
  return rows;
}

std::vector<BenchRecord> query_path(const BenchParams& p) {
  Stopwatch watch(p.wall_time);
  const Network net = build_network(p.k, p.n_max, build_options(p));
  BenchRecord r{"query-path", p.k, p.n_max};
  fill_from_network(r, net);
  const std::uint64_t per_switch =
      p.cost_model == CostModel::Unit ? 1 : Alphabet::size();

  std::vector<std::size_t> picks;
  if (p.samples == 0 || net.cell_count() == 0) {
    for (std::size_t i = 0; i < net.cell_count(); ++i) picks.push_back(i);
  } else {
    Rng rng(p.seed);
    for (std::size_t i = 0; i < p.samples; ++i)
      picks.push_back(rng.below(net.cell_count()));
  }
  std::uint64_t total_steps = 0;
  for (std::size_t i : picks) {
    const SymbolString s = net.expression(i);
    const QueryResult q = net.query_symbols(s, p.cost_model);
    total_steps += q.steps;
    if (q.steps != per_switch * s.size() || !(q.status == net.cell(i).status))
      ++r.violations;
  }
  r.query_steps_mean =
      picks.empty() ? 0.0 : static_cast<double>(total_steps) / picks.size();
  r.wall_time_ms = watch.ms();
  return {r};
}

}  // namespace

std::string bench_csv_header() {
  return "scenario,k,n_or_l,cells,trie_nodes,build_ops,fast_path_fraction,"
         "query_steps_mean,wall_time_ms,peak_cell_count,growth_ratio,"
         "comparisons,sort_ops,fitted_c,output_clauses,violations,aborted";
}

std::string to_csv(const BenchRecord& r) {
  std::string s = r.scenario;
  for (const std::string& f :
       {std::to_string(r.k), std::to_string(r.n_or_l), std::to_string(r.cells),
        std::to_string(r.trie_nodes), std::to_string(r.build_ops),
        fmt(r.fast_path_fraction), fmt(r.query_steps_mean), fmt(r.wall_time_ms),
        std::to_string(r.peak_cell_count), fmt(r.growth_ratio),
        std::to_string(r.comparisons), std::to_string(r.sort_ops),
        fmt(r.fitted_c), std::to_string(r.output_clauses),
        std::to_string(r.violations), std::string(r.aborted ? "1" : "0")}) {
    s.push_back(',');
    s += f;
  }
  return s;
}

std::vector<BenchRecord> run_bench(std::string_view scenario,
                                   const BenchParams& params) {
  if (scenario == "net-growth") return net_growth(params);
  if (scenario == "dsat-scaling") return dsat_scaling(params);
  if (scenario == "cnf-blowup") return cnf_blowup(params);
  if (scenario == "query-path") return query_path(params);
  throw std::invalid_argument("unknown bench scenario '" +
                              std::string(scenario) + "'");
}

}  // namespace boolnet
