#ifndef BOOLNET_ORACLE_HPP_
#define BOOLNET_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "boolnet/expr.hpp"

namespace boolnet {

// Three-valued classification; the cell symbols are 0, 1 and t.
enum class Status : std::uint8_t { Unsat, SatStrict, Taut };

char status_symbol(Status s);
std::optional<Status> status_from_symbol(char c);
inline bool satisfiable(Status s) { return s != Status::Unsat; }
inline bool tautology(Status s) { return s == Status::Taut; }

inline constexpr std::size_t kDefaultVariableCap = 20;

class VariableCapExceeded : public std::runtime_error {
 public:
  VariableCapExceeded(std::size_t found, std::size_t cap)
      : std::runtime_error("expression has " + std::to_string(found) +
                           " distinct variables, oracle cap is " +
                           std::to_string(cap)),
        found_(found),
        cap_(cap) {}
  std::size_t found() const { return found_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t found_;
  std::size_t cap_;
};

// Exhaustive truth-table oracle. Assignments are visited with the variables
// in ascending order, bits counting up from all-zeros (first variable most
// significant). No clever solving here: it is the ground truth.
Status classify(const Expr& e, std::size_t cap = kDefaultVariableCap);

// Parallel sweep over all 2^v assignments.
std::uint64_t count_satisfying(const Expr& e,
                               std::size_t cap = kDefaultVariableCap);

// Lexicographically first satisfying assignment over variables(e).
std::optional<TruthAssignment> find_witness(
    const Expr& e, std::size_t cap = kDefaultVariableCap);

namespace detail {

// Expression compiled against dense variable slots for the sweep kernels.
class DenseFormula {
 public:
  DenseFormula(const Expr& e, std::size_t cap);
  std::size_t variable_count() const { return vars_.size(); }
  const std::vector<VarIndex>& variables() const { return vars_; }
  // Bit (v-1-j) of `assignment` holds the value of variables()[j].
  bool evaluate(std::uint64_t assignment) const;

 private:
  struct Op {
    ExprKind kind;
    std::uint32_t a = 0;  // slot for variables, operand index otherwise
    std::uint32_t b = 0;
  };
  std::uint32_t compile(const Expr& e);

  std::vector<VarIndex> vars_;
  std::vector<Op> ops_;  // postorder, last is the root
};

}  // namespace detail

}  // namespace boolnet

#endif  // BOOLNET_ORACLE_HPP_
