#ifndef BOOLNET_DIMACS_HPP_
#define BOOLNET_DIMACS_HPP_

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "boolnet/normal_forms.hpp"

namespace boolnet {

class DimacsError : public std::runtime_error {
 public:
  DimacsError(std::size_t line, const std::string& what)
      : std::runtime_error("dimacs line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// "p cnf <vars> <clauses>" followed by signed literals, each clause ended by
// 0. The DNF variant uses "p dnf" with the same body. Lines starting with 'c'
// are comments. Clauses are normalized on read.
CnfExpr read_dimacs_cnf(std::istream& in);
DnfExpr read_dimacs_dnf(std::istream& in);

void write_dimacs(std::ostream& out, const CnfExpr& cnf);
void write_dimacs(std::ostream& out, const DnfExpr& dnf);

}  // namespace boolnet

#endif  // BOOLNET_DIMACS_HPP_
