#include "boolnet/dimacs.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace boolnet {

namespace {

template <class Tag>
std::vector<Clause<Tag>> read_body(std::istream& in, std::string_view kind) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  long long declared_vars = 0, declared_clauses = 0;
  std::vector<Clause<Tag>> clauses;
  std::vector<Literal> pending;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "c") continue;
    if (first == "p") {
      std::string format;
      if (have_header) throw DimacsError(line_no, "second problem line");
      if (!(ls >> format >> declared_vars >> declared_clauses) ||
          format != kind || declared_vars < 0 || declared_clauses < 0)
        throw DimacsError(line_no, "expected 'p " + std::string(kind) +
                                       " <vars> <clauses>'");
      have_header = true;
      continue;
    }
    if (!have_header) throw DimacsError(line_no, "clause before problem line");

    std::istringstream body(line);
    std::string token;
    while (body >> token) {
      long long lit = 0;
      try {
        std::size_t used = 0;
        lit = std::stoll(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        throw DimacsError(line_no, "bad literal '" + token + "'");
      }
      if (lit == 0) {
        if (pending.empty()) throw DimacsError(line_no, "empty clause");
        clauses.push_back(Clause<Tag>::normalize(pending));
        pending.clear();
        continue;
      }
      const long long var = lit < 0 ? -lit : lit;
      if (var > declared_vars)
        throw DimacsError(line_no, "variable " + std::to_string(var) +
                                       " exceeds declared count");
      pending.push_back(Literal{static_cast<VarIndex>(var), lit < 0});
    }
  }
  if (!have_header) throw DimacsError(line_no, "missing problem line");
  if (!pending.empty()) throw DimacsError(line_no, "unterminated clause");
  if (static_cast<long long>(clauses.size()) != declared_clauses)
    throw DimacsError(line_no, "declared " + std::to_string(declared_clauses) +
                                   " clauses, found " +
                                   std::to_string(clauses.size()));
  if (clauses.empty()) throw DimacsError(line_no, "no clauses");
  return clauses;
}

template <class C>
void write_body(std::ostream& out, std::string_view kind, VarIndex vars,
                const std::vector<C>& clauses) {
  out << "p " << kind << ' ' << vars << ' ' << clauses.size() << '\n';
  for (const auto& c : clauses) {
    for (const Literal& l : c.literals())
      out << (l.negated ? "-" : "") << l.var << ' ';
    out << "0\n";
  }
}

}  // namespace

CnfExpr read_dimacs_cnf(std::istream& in) {
  return {read_body<DisjunctionTag>(in, "cnf")};
}

DnfExpr read_dimacs_dnf(std::istream& in) {
  return {read_body<ConjunctionTag>(in, "dnf")};
}

void write_dimacs(std::ostream& out, const CnfExpr& cnf) {
  write_body(out, "cnf", max_variable(cnf), cnf.clauses);
}

void write_dimacs(std::ostream& out, const DnfExpr& dnf) {
  write_body(out, "dnf", max_variable(dnf), dnf.clauses);
}

}  // namespace boolnet
