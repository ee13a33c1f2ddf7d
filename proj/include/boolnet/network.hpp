#ifndef BOOLNET_NETWORK_HPP_
#define BOOLNET_NETWORK_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "boolnet/enumerate.hpp"
#include "boolnet/expr.hpp"
#include "boolnet/oracle.hpp"

namespace boolnet {

// How a cell's status was obtained.
enum class Resolution : std::uint8_t {
  BaseCase,     // single variable
  NegSatRule,   // ¬D satisfiable iff D is not a tautology
  OrSatRule,    // D∨H satisfiable iff D or H is
  AndTautRule,  // D∧H tautology iff both are
  NegTautRule,  // ¬D tautology iff D is unsatisfiable
  OracleFallback,
  Unresolved,  // audit policy only; status still taken from the oracle
};

std::string_view resolution_tag(Resolution r);
std::optional<Resolution> resolution_from_tag(std::string_view tag);
inline bool is_fast_path(Resolution r) {
  return r == Resolution::NegSatRule || r == Resolution::OrSatRule ||
         r == Resolution::AndTautRule || r == Resolution::NegTautRule;
}

struct Cell {
  Status status = Status::Unsat;
  Resolution resolved_by = Resolution::BaseCase;
  friend bool operator==(const Cell&, const Cell&) = default;
};

// Outcome of the status automata. `status` is empty when the component
// statuses do not determine the compound (Underdetermined).
struct Composition {
  std::optional<Status> status;
  Resolution rule = Resolution::Unresolved;
  bool resolved() const { return status.has_value(); }
};

// `right` must be present exactly for the binary connectives.
Composition compose_status(Connective op, Status left,
                           std::optional<Status> right = std::nullopt);

enum class FallbackPolicy { Oracle, Audit };
enum class CostModel { Unit, MUnits };

std::string_view policy_name(FallbackPolicy p);
std::optional<FallbackPolicy> policy_from_name(std::string_view name);

struct NetworkMetrics {
  std::uint64_t cells = 0;
  std::uint64_t trie_nodes = 0;  // including the root
  std::uint64_t build_ops = 0;
  std::uint64_t fast_path_cells = 0;
  std::uint64_t fallback_cells = 0;  // OracleFallback and Unresolved
  std::uint64_t base_cells = 0;
  std::uint64_t unresolved_cells = 0;
  std::vector<std::uint64_t> cells_by_length;       // index = coded length
  std::vector<std::uint64_t> unresolved_by_length;  // index = coded length

  friend bool operator==(const NetworkMetrics&,
                         const NetworkMetrics&) = default;
};

struct BuildOptions {
  FallbackPolicy policy = FallbackPolicy::Oracle;
  CostModel cost_model = CostModel::Unit;
  ParenStyle parens = ParenStyle::Production;
  std::size_t node_budget = 10'000'000;
  std::size_t oracle_cap = kDefaultVariableCap;
};

struct QueryResult {
  Status status;
  Resolution resolved_by;
  std::uint64_t steps;
};

class NotInNetwork : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {
class NetworkAccess;
}

// Trie of switching nodes over the alphabet. A node whose root path spells a
// hosted expression carries that expression's cell. Immutable once built.
class Network {
 public:
  VarIndex variable_count() const { return variable_count_; }
  // Every expression of coded length <= frontier() has a cell.
  std::size_t frontier() const { return frontier_; }
  // Length bound that was requested at build time.
  std::size_t requested_length() const { return requested_length_; }
  FallbackPolicy policy() const { return policy_; }
  CostModel cost_model() const { return cost_model_; }
  ParenStyle parens() const { return parens_; }
  bool aborted() const { return aborted_; }
  const NetworkMetrics& metrics() const { return metrics_; }

  // Walks one edge per symbol. Throws ParseError for text outside the
  // alphabet and NotInNetwork when no cell is reached.
  QueryResult query(std::string_view text) const;
  QueryResult query(std::string_view text, CostModel model) const;
  QueryResult query_symbols(const SymbolString& s, CostModel model) const;

  // Cell at the end of the path, or nullptr.
  const Cell* find(std::string_view symbols) const;

  // Cells in insertion order: shortest first, enumeration order inside.
  std::size_t cell_count() const { return cells_.size(); }
  const Cell& cell(std::size_t i) const { return cells_[i]; }
  SymbolString expression(std::size_t i) const;

 private:
  friend class detail::NetworkAccess;

  struct Node {
    std::array<std::int32_t, Alphabet::size()> children;
    std::int32_t parent = -1;
    std::int32_t cell = -1;
    char symbol = 0;
  };

  Network(VarIndex k, std::size_t n, const BuildOptions& options);
  // False, without modifying anything, if the node budget would be exceeded.
  bool insert(const SymbolString& s, Cell cell);

  VarIndex variable_count_;
  std::size_t requested_length_;
  std::size_t frontier_ = 1;
  FallbackPolicy policy_;
  CostModel cost_model_;
  ParenStyle parens_;
  std::size_t node_budget_;
  bool aborted_ = false;
  std::vector<Node> nodes_;
  std::vector<Cell> cells_;
  std::vector<std::int32_t> cell_node_;
  NetworkMetrics metrics_;
};

// Builds the network by induction on length. Cells of one length depend only
// on shorter cells, so each length is evaluated in parallel and inserted in
// enumeration order; the result equals reference::build_network_serial.
// A budget overrun returns a partial network with aborted() set.
Network build_network(VarIndex variable_count, std::size_t max_len,
                      const BuildOptions& options = {});

namespace detail {

// Internal construction surface shared by the builders and the loader.
class NetworkAccess {
 public:
  static Network make(VarIndex k, std::size_t n, const BuildOptions& o) {
    return Network(k, n, o);
  }
  static bool insert(Network& net, const SymbolString& s, Cell c) {
    return net.insert(s, c);
  }
  static NetworkMetrics& metrics(Network& net) { return net.metrics_; }
  static void set_frontier(Network& net, std::size_t f) { net.frontier_ = f; }
  static void set_aborted(Network& net) { net.aborted_ = true; }
};

// Evaluated cell plus the build operations it cost.
struct CellEvaluation {
  Cell cell;
  std::uint64_t ops = 0;
};

// Decompose, look up the components, apply the automata, fall back per
// policy. Reads `net` only.
CellEvaluation evaluate_cell(const Network& net, const SymbolString& s,
                             const BuildOptions& options);

// Inserts and books the cell; false on budget overrun.
bool commit_cell(Network& net, const SymbolString& s,
                 const CellEvaluation& eval);

}  // namespace detail

}  // namespace boolnet

#endif  // BOOLNET_NETWORK_HPP_
