#include "boolnet/reference.hpp"

namespace boolnet::reference {

std::uint64_t count_satisfying_serial(const Expr& e, std::size_t cap) {
  const std::vector<VarIndex> vars = variables(e);
  if (vars.size() > cap) throw VariableCapExceeded(vars.size(), cap);
  const std::size_t v = vars.size();
  std::uint64_t count = 0;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << v); ++a) {
    TruthAssignment t;
    for (std::size_t j = 0; j < v; ++j)
      t.set(vars[j], ((a >> (v - 1 - j)) & 1u) != 0);
    if (evaluate(e, t)) ++count;
  }
  return count;
}

Network build_network_serial(VarIndex variable_count, std::size_t max_len,
                             const BuildOptions& options) {
  using detail::NetworkAccess;
  Network net = NetworkAccess::make(variable_count, max_len, options);
  ExpressionEnumerator enumerator(variable_count, max_len,
                                  {options.parens, options.node_budget});
  try {
    while (auto s = enumerator.next()) {
      if (s->size() - 1 > net.frontier())
        NetworkAccess::set_frontier(net, s->size() - 1);
      if (!detail::commit_cell(net, *s, detail::evaluate_cell(net, *s, options))) {
        NetworkAccess::set_aborted(net);
        return net;
      }
    }
  } catch (const EnumerationAborted& e) {
    NetworkAccess::set_frontier(net, e.complete_length());
    NetworkAccess::set_aborted(net);
    return net;
  }
  NetworkAccess::set_frontier(net, max_len);
  return net;
}

}  // namespace boolnet::reference
