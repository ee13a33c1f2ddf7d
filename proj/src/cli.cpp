#include "boolnet/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "boolnet/bench.hpp"
#include "boolnet/dimacs.hpp"
#include "boolnet/dsat.hpp"
#include "boolnet/network_io.hpp"
#include "boolnet/normal_forms.hpp"
#include "boolnet/oracle.hpp"

namespace boolnet {

namespace {

struct CliFailure {
  int code;
  std::string message;
};

std::string variable_name(VarIndex v) { return coded_variable(v); }

VarIndex parse_variable_name(const std::string& name) {
  const SymbolString s = to_symbols(name);
  if (s.size() < 2 || s[0] != sym::kVar ||
      s.find_first_not_of(sym::kDigit, 1) != SymbolString::npos)
    throw CliFailure{kExitUsage, "bad variable name '" + name +
                                     "' (expected x followed by 1s)"};
  return static_cast<VarIndex>(s.size() - 1);
}

TruthAssignment parse_assignments(const std::vector<std::string>& items) {
  TruthAssignment t;
  for (const std::string& item : items) {
    const auto eq = item.find('=');
    const std::string value = eq == std::string::npos ? "" : item.substr(eq + 1);
    if (value != "0" && value != "1")
      throw CliFailure{kExitUsage, "bad assignment '" + item + "' (expected var=0|1)"};
    t.set(parse_variable_name(item.substr(0, eq)), value == "1");
  }
  return t;
}

std::string format_witness(const TruthAssignment& t) {
  std::string s;
  for (const auto& [var, value] : t.values()) {
    if (!s.empty()) s.push_back(' ');
    s += variable_name(var) + "=" + (value ? "1" : "0");
  }
  return s;
}

LengthMeasure parse_measure(const std::string& m) {
  if (m == "a") return LengthMeasure::SymbolCount;
  if (m == "b") return LengthMeasure::VariableOccurrences;
  if (m == "c") return LengthMeasure::DistinctVariables;
  return LengthMeasure::CodedSymbolCount;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliFailure{kExitIo, "cannot open '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes to --out when given, otherwise to `out`.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw CliFailure{kExitIo, "cannot write '" + path + "'"};
  f << text;
}

std::string stats_csv(const SatVerdict& v, std::uint64_t sort_ops,
                      std::size_t in_clauses, std::size_t out_clauses) {
  char blowup[64];
  std::snprintf(blowup, sizeof blowup, "%.6f",
                in_clauses ? static_cast<double>(out_clauses) / in_clauses : 0.0);
  std::ostringstream os;
  os << "answer,comparisons,sort_ops,clauses_checked,aborted_early,"
        "input_clauses,output_clauses,blowup\n"
     << (v.satisfiable ? "SAT" : "UNSAT") << ',' << v.stats.comparisons << ','
     << sort_ops << ',' << v.stats.clauses_checked << ','
     << (v.stats.aborted_early ? 1 : 0) << ',' << in_clauses << ','
     << out_clauses << ',' << blowup << '\n';
  return os.str();
}

template <class C>
std::uint64_t resort_cost(const std::vector<C>& clauses) {
  ComparisonStats s;
  for (const auto& c : clauses) normalize_clause(c.literals(), &s);
  return s.sort_ops;
}

std::string sat_report(const SatVerdict& v, std::uint64_t sort_ops,
                       std::size_t in_clauses, std::size_t out_clauses) {
  std::string s = v.satisfiable ? "SAT\n" : "UNSAT\n";
  if (v.witness) s += "witness " + format_witness(*v.witness) + "\n";
  return s + stats_csv(v, sort_ops, in_clauses, out_clauses);
}

std::string metrics_report(const Network& net) {
  const NetworkMetrics& m = net.metrics();
  std::ostringstream os;
  os << "k=" << net.variable_count() << "\nn=" << net.frontier()
     << "\npolicy=" << policy_name(net.policy()) << "\ncells=" << m.cells
     << "\ntrie_nodes=" << m.trie_nodes << "\nbuild_ops=" << m.build_ops
     << "\nfast_path_cells=" << m.fast_path_cells
     << "\nfallback_cells=" << m.fallback_cells
     << "\nbase_cells=" << m.base_cells
     << "\nunresolved_cells=" << m.unresolved_cells << '\n';
  os << "length,cells,unresolved\n";
  for (std::size_t len = 2; len < m.cells_by_length.size(); ++len)
    os << len << ',' << m.cells_by_length[len] << ','
       << m.unresolved_by_length[len] << '\n';
  return os.str();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Boolean expression satisfiability toolkit"};
  app.require_subcommand(1);

  std::string expr_text, out_path, in_path, net_path, measure, scenario;
  std::vector<std::string> assigns;
  std::string policy = "oracle", cost_model = "unit";
  std::size_t budget = 10'000'000;
  std::uint64_t seed = 0;
  bool as_dimacs = false, drop_contradictions = false, full_scan = false,
       wall_time = false;
  unsigned k = 2;
  std::size_t n = 8;
  BenchParams bench;

  auto add_expr = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("expression", expr_text,
                                "expression, e.g. \"x1∨¬x11\" or \"x1|!x11\"");
    if (required) opt->required();
  };
  auto add_measure = [&](CLI::App* sub) {
    sub->add_option("--measure", measure, "also print the length (a,b,c,d)")
        ->check(CLI::IsMember({"a", "b", "c", "d"}));
  };
  auto add_policy = [&](CLI::App* sub) {
    sub->add_option("--policy", policy, "fallback policy")
        ->check(CLI::IsMember({"oracle", "audit"}));
  };
  auto add_cost = [&](CLI::App* sub) {
    sub->add_option("--cost-model", cost_model, "steps per switch: unit or m")
        ->check(CLI::IsMember({"unit", "m"}));
  };

  auto* eval = app.add_subcommand("eval", "evaluate under an assignment");
  add_expr(eval, true);
  eval->add_option("--assign", assigns, "var=bit, repeatable");
  add_measure(eval);

  auto* classify_cmd = app.add_subcommand("classify", "print 0, 1 or t");
  add_expr(classify_cmd, true);
  add_measure(classify_cmd);

  CLI::App* nf_cmds[2];
  for (int i = 0; i < 2; ++i) {
    nf_cmds[i] = app.add_subcommand(i == 0 ? "dnf" : "cnf",
                                    i == 0 ? "disjunctive normal form"
                                           : "conjunctive normal form");
    add_expr(nf_cmds[i], true);
    nf_cmds[i]->add_flag("--dimacs", as_dimacs, "print in DIMACS style");
    nf_cmds[i]->add_flag("--drop-contradictions", drop_contradictions,
                         "remove complementary clauses");
    nf_cmds[i]->add_option("--budget", budget, "clause cap");
    nf_cmds[i]->add_option("--out", out_path, "output file");
  }

  CLI::App* sat_cmds[2];
  for (int i = 0; i < 2; ++i) {
    sat_cmds[i] = app.add_subcommand(
        i == 0 ? "dsat" : "csat",
        i == 0 ? "satisfiability of a DNF" : "satisfiability of a CNF via DNF");
    add_expr(sat_cmds[i], false);
    sat_cmds[i]->add_option("--in", in_path, "DIMACS-style input file");
    sat_cmds[i]->add_flag("--full-scan", full_scan, "check every clause");
    sat_cmds[i]->add_option("--budget", budget, "clause cap");
    sat_cmds[i]->add_option("--out", out_path, "output file");
  }

  auto* build_cmd = app.add_subcommand("build-net", "build a network file");
  build_cmd->add_option("--k", k, "variable count")->required()->check(
      CLI::Range(1u, 1000u));
  build_cmd->add_option("--n", n, "maximum coded length")->required()->check(
      CLI::Range(std::size_t{2}, std::size_t{64}));
  add_policy(build_cmd);
  build_cmd->add_option("--budget", budget, "trie node budget");
  build_cmd->add_option("--out", out_path, "network file")->required();

  auto* query_cmd = app.add_subcommand("query-net", "look up an expression");
  query_cmd->add_option("--net", net_path, "network file")->required();
  add_expr(query_cmd, true);
  add_cost(query_cmd);

  auto* stats_cmd = app.add_subcommand("net-stats", "network metrics");
  stats_cmd->add_option("--net", net_path, "network file")->required();

  auto* bench_cmd = app.add_subcommand("bench", "run a benchmark scenario");
  bench_cmd->add_option("scenario", scenario, "scenario")
      ->required()
      ->check(CLI::IsMember(
          {"net-growth", "dsat-scaling", "cnf-blowup", "query-path"}));
  bench_cmd->add_option("--k", bench.k, "variable count");
  bench_cmd->add_option("--n-min", bench.n_min, "net-growth first length");
  bench_cmd->add_option("--n-max", bench.n_max, "last length");
  bench_cmd->add_option("--sizes", bench.literal_counts,
                        "dsat-scaling literal counts");
  bench_cmd->add_option("--trials", bench.trials, "dsat-scaling runs per size");
  bench_cmd->add_option("--k-min", bench.k_min, "cnf-blowup first pair count");
  bench_cmd->add_option("--k-max", bench.k_max, "cnf-blowup last pair count");
  bench_cmd->add_option("--samples", bench.samples,
                        "query-path sample size, 0 for all");
  add_policy(bench_cmd);
  add_cost(bench_cmd);
  bench_cmd->add_option("--budget", budget, "node or clause budget");
  bench_cmd->add_option("--out", out_path, "CSV file");
  bench_cmd->add_flag("--wall-time", wall_time, "record wall time");

  for (auto* sub : app.get_subcommands({}))
    sub->add_option("--seed", seed, "random seed (default 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const CostModel model = cost_model == "m" ? CostModel::MUnits : CostModel::Unit;

  try {
    if (*eval) {
      const Expr e = parse(expr_text);
      out << (evaluate(e, parse_assignments(assigns)) ? "1" : "0") << '\n';
      if (!measure.empty())
        out << "length " << length(e, parse_measure(measure)) << '\n';
    } else if (*classify_cmd) {
      const Expr e = parse(expr_text);
      out << status_symbol(classify(e)) << '\n';
      if (!measure.empty())
        out << "length " << length(e, parse_measure(measure)) << '\n';
    } else if (*nf_cmds[0] || *nf_cmds[1]) {
      ConversionOptions options{budget, drop_contradictions};
      const Expr e = parse(expr_text);
      std::ostringstream os;
      if (*nf_cmds[0]) {
        const DnfExpr d = to_dnf(e, options);
        if (as_dimacs) write_dimacs(os, d); else os << render(embed(d)) << '\n';
      } else {
        const CnfExpr c = to_cnf(e, options);
        if (as_dimacs) write_dimacs(os, c); else os << render(embed(c)) << '\n';
      }
      emit(os.str(), out_path, out);
    } else if (*sat_cmds[0] || *sat_cmds[1]) {
      if (expr_text.empty() == in_path.empty())
        throw CliFailure{kExitUsage, "give either an expression or --in FILE"};
      ConversionOptions options{budget, false};
      const ScanMode mode = full_scan ? ScanMode::FullScan : ScanMode::EarlyExit;
      std::string report;
      if (*sat_cmds[0]) {
        DnfExpr d;
        if (!in_path.empty()) {
          std::istringstream in(read_file(in_path));
          d = read_dimacs_dnf(in);
        } else {
          d = to_dnf(parse(expr_text), options);
        }
        const SatVerdict v = dnf_satisfiable(d, mode);
        report = sat_report(v, resort_cost(d.clauses), d.clauses.size(),
                            d.clauses.size());
      } else {
        CnfExpr c;
        if (!in_path.empty()) {
          std::istringstream in(read_file(in_path));
          c = read_dimacs_cnf(in);
        } else {
          c = to_cnf(parse(expr_text), options);
        }
        const CnfVerdict v = cnf_satisfiable_via_dnf(c, options, mode);
        report = sat_report(v.verdict, resort_cost(c.clauses), v.input_clauses,
                            v.output_clauses);
      }
      emit(report, out_path, out);
    } else if (*build_cmd) {
      BuildOptions options;
      options.policy = *policy_from_name(policy);
      options.node_budget = budget;
      const Network net = build_network(k, n, options);
      if (net.aborted())
        throw CliFailure{kExitBudget,
                         "node budget exceeded; complete through length " +
                             std::to_string(net.frontier())};
      std::ostringstream os;
      save_network(net, os);
      emit(os.str(), out_path, out);
      out << "cells=" << net.metrics().cells
          << " trie_nodes=" << net.metrics().trie_nodes << '\n';
    } else if (*query_cmd) {
      std::istringstream in(read_file(net_path));
      const Network net = load_network(in);
      const QueryResult q = net.query(expr_text, model);
      out << status_symbol(q.status) << ' ' << q.steps << '\n';
    } else if (*stats_cmd) {
      std::istringstream in(read_file(net_path));
      out << metrics_report(load_network(in));
    } else if (*bench_cmd) {
      bench.seed = seed;
      bench.policy = *policy_from_name(policy);
      bench.cost_model = model;
      bench.budget = budget;
      bench.wall_time = wall_time;
      const auto rows = run_bench(scenario, bench);
      std::string csv = bench_csv_header() + "\n";
      bool aborted = false;
      for (const auto& r : rows) {
        csv += to_csv(r) + "\n";
        aborted = aborted || r.aborted;
      }
      emit(csv, out_path, out);
      if (aborted) return kExitBudget;
    }
  } catch (const CliFailure& f) {
    err << "error: " << f.message << '\n';
    return f.code;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const DimacsError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const EvaluationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitEvaluation;
  } catch (const VariableCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const ClauseCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const NetworkLoadError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const NotInNetwork& e) {
    err << "error: " << e.what() << '\n';
    return kExitQuery;
  }
  return kExitOk;
}

}  // namespace boolnet
