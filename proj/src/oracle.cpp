#include "boolnet/oracle.hpp"

#include <algorithm>

namespace boolnet {

char status_symbol(Status s) {
  switch (s) {
    case Status::Unsat: return '0';
    case Status::SatStrict: return '1';
    case Status::Taut: return 't';
  }
  return '?';
}

std::optional<Status> status_from_symbol(char c) {
  switch (c) {
    case '0': return Status::Unsat;
    case '1': return Status::SatStrict;
    case 't': return Status::Taut;
    default: return std::nullopt;
  }
}

namespace detail {

DenseFormula::DenseFormula(const Expr& e, std::size_t cap)
    : vars_(boolnet::variables(e)) {
  if (vars_.size() > cap) throw VariableCapExceeded(vars_.size(), cap);
  compile(e);
}

std::uint32_t DenseFormula::compile(const Expr& e) {
  Op op{e.kind()};
  switch (e.kind()) {
    case ExprKind::Variable: {
      auto it = std::lower_bound(vars_.begin(), vars_.end(), e.index());
      op.a = static_cast<std::uint32_t>(it - vars_.begin());
      break;
    }
    case ExprKind::Not:
      op.a = compile(e.child());
      break;
    default:
      op.a = compile(e.left());
      op.b = compile(e.right());
  }
  ops_.push_back(op);
  return static_cast<std::uint32_t>(ops_.size() - 1);
}

bool DenseFormula::evaluate(std::uint64_t assignment) const {
  thread_local std::vector<char> value;
  value.resize(ops_.size());
  const std::size_t v = vars_.size();
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    const Op& op = ops_[i];
    switch (op.kind) {
      case ExprKind::Variable:
        value[i] = static_cast<char>((assignment >> (v - 1 - op.a)) & 1u);
        break;
      case ExprKind::Not: value[i] = !value[op.a]; break;
      case ExprKind::Or: value[i] = value[op.a] || value[op.b]; break;
      case ExprKind::And: value[i] = value[op.a] && value[op.b]; break;
    }
  }
  return value.back() != 0;
}

}  // namespace detail

std::uint64_t count_satisfying(const Expr& e, std::size_t cap) {
  const detail::DenseFormula f(e, cap);
  const auto total = static_cast<std::int64_t>(std::uint64_t{1}
                                               << f.variable_count());
  std::uint64_t count = 0;
#pragma omp parallel for reduction(+ : count) schedule(static)
  for (std::int64_t a = 0; a < total; ++a)
    count += f.evaluate(static_cast<std::uint64_t>(a)) ? 1 : 0;
  return count;
}

Status classify(const Expr& e, std::size_t cap) {
  const std::uint64_t total = std::uint64_t{1} << variables(e).size();
  const std::uint64_t n = count_satisfying(e, cap);
  if (n == 0) return Status::Unsat;
  return n == total ? Status::Taut : Status::SatStrict;
}

std::optional<TruthAssignment> find_witness(const Expr& e, std::size_t cap) {
  const detail::DenseFormula f(e, cap);
  const std::size_t v = f.variable_count();
  const std::uint64_t total = std::uint64_t{1} << v;
  for (std::uint64_t a = 0; a < total; ++a) {
    if (!f.evaluate(a)) continue;
    TruthAssignment t;
    for (std::size_t j = 0; j < v; ++j)
      t.set(f.variables()[j], ((a >> (v - 1 - j)) & 1u) != 0);
    return t;
  }
  return std::nullopt;
}

}  // namespace boolnet
