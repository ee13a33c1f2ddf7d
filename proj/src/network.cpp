#include "boolnet/network.hpp"

#include <exception>
#include <stdexcept>

namespace boolnet {

namespace {

constexpr std::array<std::string_view, 7> kTags = {
    "BaseCase",    "NegSatRule",     "OrSatRule", "AndTautRule",
    "NegTautRule", "OracleFallback", "Unresolved"};

Status from_bits(bool sat, bool taut) {
  if (taut) return Status::Taut;
  return sat ? Status::SatStrict : Status::Unsat;
}

}  // namespace

std::string_view resolution_tag(Resolution r) {
  return kTags[static_cast<std::size_t>(r)];
}

std::optional<Resolution> resolution_from_tag(std::string_view tag) {
  for (std::size_t i = 0; i < kTags.size(); ++i)
    if (kTags[i] == tag) return static_cast<Resolution>(i);
  return std::nullopt;
}

std::string_view policy_name(FallbackPolicy p) {
  return p == FallbackPolicy::Oracle ? "oracle" : "audit";
}

std::optional<FallbackPolicy> policy_from_name(std::string_view name) {
  if (name == "oracle") return FallbackPolicy::Oracle;
  if (name == "audit") return FallbackPolicy::Audit;
  return std::nullopt;
}

Composition compose_status(Connective op, Status left,
                           std::optional<Status> right) {
  if ((op == Connective::Not) == right.has_value())
    throw std::invalid_argument("operand count does not match connective");

  switch (op) {
    case Connective::Not: {
      // sat(¬D) = ¬taut(D), taut(¬D) = ¬sat(D): always fully determined.
      const bool sat = !tautology(left);
      const bool taut = !satisfiable(left);
      return {from_bits(sat, taut),
              taut ? Resolution::NegTautRule : Resolution::NegSatRule};
    }
    case Connective::Or: {
      const bool sat = satisfiable(left) || satisfiable(*right);
      if (!sat) return {Status::Unsat, Resolution::OrSatRule};
      if (tautology(left) || tautology(*right))
        return {Status::Taut, Resolution::OrSatRule};
      return {std::nullopt, Resolution::Unresolved};
    }
    case Connective::And: {
      if (tautology(left) && tautology(*right))
        return {Status::Taut, Resolution::AndTautRule};
      if (!satisfiable(left) || !satisfiable(*right))
        return {Status::Unsat, Resolution::AndTautRule};
      return {std::nullopt, Resolution::Unresolved};
    }
  }
  return {};
}

Network::Network(VarIndex k, std::size_t n, const BuildOptions& options)
    : variable_count_(k),
      requested_length_(n),
      policy_(options.policy),
      cost_model_(options.cost_model),
      parens_(options.parens),
      node_budget_(options.node_budget) {
  Node root;
  root.children.fill(-1);
  nodes_.push_back(root);
  metrics_.trie_nodes = 1;
  metrics_.cells_by_length.assign(n + 1, 0);
  metrics_.unresolved_by_length.assign(n + 1, 0);
}

bool Network::insert(const SymbolString& s, Cell cell) {
  // Count the nodes this path would add before touching the trie.
  std::int32_t node = 0;
  std::size_t depth = 0;
  for (; depth < s.size(); ++depth) {
    const int slot = Alphabet::index_of(s[depth]);
    if (slot < 0) throw ParseError(depth + 1, "symbol not in alphabet");
    const std::int32_t next = nodes_[node].children[slot];
    if (next < 0) break;
    node = next;
  }
  if (nodes_.size() + (s.size() - depth) > node_budget_) return false;

  for (; depth < s.size(); ++depth) {
    Node child;
    child.children.fill(-1);
    child.parent = node;
    child.symbol = s[depth];
    nodes_.push_back(child);
    const auto id = static_cast<std::int32_t>(nodes_.size() - 1);
    nodes_[node].children[Alphabet::index_of(s[depth])] = id;
    node = id;
  }
  if (nodes_[node].cell >= 0)
    throw std::logic_error("expression inserted twice: " + to_text(s));
  nodes_[node].cell = static_cast<std::int32_t>(cells_.size());
  cells_.push_back(cell);
  cell_node_.push_back(node);
  metrics_.trie_nodes = nodes_.size();
  return true;
}

const Cell* Network::find(std::string_view s) const {
  std::int32_t node = 0;
  for (char c : s) {
    const int slot = Alphabet::index_of(c);
    if (slot < 0) return nullptr;
    node = nodes_[node].children[slot];
    if (node < 0) return nullptr;
  }
  const std::int32_t cell = nodes_[node].cell;
  return cell < 0 ? nullptr : &cells_[cell];
}

QueryResult Network::query_symbols(const SymbolString& s,
                                   CostModel model) const {
  if (s.size() > frontier_)
    throw NotInNetwork("expression of length " + std::to_string(s.size()) +
                       " is beyond the frontier " + std::to_string(frontier_));
  const std::uint64_t per_switch =
      model == CostModel::Unit ? 1 : Alphabet::size();
  std::uint64_t steps = 0;
  std::int32_t node = 0;
  for (char c : s) {
    node = nodes_[node].children[Alphabet::index_of(c)];
    steps += per_switch;
    if (node < 0) throw NotInNetwork("no path for " + to_text(s));
  }
  const std::int32_t cell = nodes_[node].cell;
  if (cell < 0) throw NotInNetwork("no cell for " + to_text(s));
  return {cells_[cell].status, cells_[cell].resolved_by, steps};
}

QueryResult Network::query(std::string_view text, CostModel model) const {
  return query_symbols(to_symbols(text), model);
}

QueryResult Network::query(std::string_view text) const {
  return query(text, cost_model_);
}

SymbolString Network::expression(std::size_t i) const {
  SymbolString s;
  for (std::int32_t node = cell_node_.at(i); node > 0;
       node = nodes_[node].parent)
    s.push_back(nodes_[node].symbol);
  return {s.rbegin(), s.rend()};
}

namespace detail {

CellEvaluation evaluate_cell(const Network& net, const SymbolString& s,
                             const BuildOptions& options) {
  const Decomposition d = decompose(s);
  if (std::holds_alternative<Atom>(d))
    return {Cell{Status::SatStrict, Resolution::BaseCase}, 2};

  auto lookup = [&](const SymbolString& part) {
    const Cell* c = net.find(part);
    if (!c)
      throw std::logic_error("component cell missing for " + to_text(part) +
                             " while building " + to_text(s));
    return c->status;
  };

  // Separation scan, one switch walk per component, one automaton step.
  std::uint64_t ops = s.size() + 1;
  Composition comp;
  if (const auto* neg = std::get_if<Negation>(&d)) {
    ops += neg->body.size();
    comp = compose_status(Connective::Not, lookup(neg->body));
  } else {
    const auto& bin = std::get<Binary>(d);
    ops += bin.left.size() + bin.right.size();
    comp = compose_status(bin.op, lookup(bin.left), lookup(bin.right));
  }
  if (comp.resolved()) return {Cell{*comp.status, comp.rule}, ops};

  const Expr e = parse_symbols(s);
  ops += std::uint64_t{1} << variables(e).size();
  const Status truth = classify(e, options.oracle_cap);
  return {Cell{truth, options.policy == FallbackPolicy::Oracle
                          ? Resolution::OracleFallback
                          : Resolution::Unresolved},
          ops};
}

bool commit_cell(Network& net, const SymbolString& s,
                 const CellEvaluation& eval) {
  if (!NetworkAccess::insert(net, s, eval.cell)) return false;
  NetworkMetrics& m = NetworkAccess::metrics(net);
  ++m.cells;
  ++m.cells_by_length[s.size()];
  m.build_ops += eval.ops;
  const Resolution r = eval.cell.resolved_by;
  if (r == Resolution::BaseCase) {
    ++m.base_cells;
  } else if (is_fast_path(r)) {
    ++m.fast_path_cells;
  } else {
    ++m.fallback_cells;
    if (r == Resolution::Unresolved) {
      ++m.unresolved_cells;
      ++m.unresolved_by_length[s.size()];
    }
  }
  return true;
}

}  // namespace detail

Network build_network(VarIndex variable_count, std::size_t max_len,
                      const BuildOptions& options) {
  using detail::NetworkAccess;
  Network net = NetworkAccess::make(variable_count, max_len, options);
  ExpressionEnumerator enumerator(variable_count, max_len,
                                  {options.parens, options.node_budget});
  for (std::size_t len = 2; len <= max_len; ++len) {
    const std::vector<SymbolString>* level = nullptr;
    try {
      level = &enumerator.level(len);
    } catch (const EnumerationAborted&) {
      NetworkAccess::set_aborted(net);
      return net;
    }

    std::vector<detail::CellEvaluation> evals(level->size());
    const auto count = static_cast<std::int64_t>(level->size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 256)
    for (std::int64_t i = 0; i < count; ++i) {
      try {
        evals[i] = detail::evaluate_cell(net, (*level)[i], options);
      } catch (...) {
#pragma omp critical(boolnet_build_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);

    for (std::size_t i = 0; i < level->size(); ++i) {
      if (!detail::commit_cell(net, (*level)[i], evals[i])) {
        NetworkAccess::set_aborted(net);
        return net;
      }
    }
    NetworkAccess::set_frontier(net, len);
  }
  return net;
}

}  // namespace boolnet
