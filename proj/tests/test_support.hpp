#ifndef BOOLNET_TESTS_TEST_SUPPORT_HPP_
#define BOOLNET_TESTS_TEST_SUPPORT_HPP_

// Test-only helpers that must stay independent of the code under test.

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "boolnet/expr.hpp"
#include "boolnet/random.hpp"

namespace boolnet::testing {

// Calls fn(t) for every assignment of `vars`.
inline void for_each_assignment(const std::vector<VarIndex>& vars,
                                const std::function<void(const TruthAssignment&)>& fn) {
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << vars.size()); ++a) {
    TruthAssignment t;
    for (std::size_t j = 0; j < vars.size(); ++j) t.set(vars[j], (a >> j) & 1u);
    fn(t);
  }
}

inline bool equivalent(const Expr& a, const Expr& b) {
  std::set<VarIndex> vs;
  for (VarIndex v : variables(a)) vs.insert(v);
  for (VarIndex v : variables(b)) vs.insert(v);
  bool same = true;
  for_each_assignment({vs.begin(), vs.end()}, [&](const TruthAssignment& t) {
    if (evaluate(a, t) != evaluate(b, t)) same = false;
  });
  return same;
}

// Random tree over x1..x<vars> with `ops` connectives.
inline Expr random_expr(Rng& rng, VarIndex vars, int ops) {
  if (ops == 0) return Expr::var(static_cast<VarIndex>(rng.between(1, vars)));
  switch (rng.below(3)) {
    case 0: return !random_expr(rng, vars, ops - 1);
    case 1: {
      const int left = static_cast<int>(rng.below(ops));
      return random_expr(rng, vars, left) | random_expr(rng, vars, ops - 1 - left);
    }
    default: {
      const int left = static_cast<int>(rng.below(ops));
      return random_expr(rng, vars, left) & random_expr(rng, vars, ops - 1 - left);
    }
  }
}

// Independent generator for the enumeration language: every tree whose
// minimal rendering fits, rendered with every admissible choice of optional
// operand parentheses, deduplicated by string. Written from the grammar, not
// from the enumerator's length tables.
class GrammarGenerator {
 public:
  GrammarGenerator(VarIndex k, std::size_t n, bool optional_parens)
      : k_(k), n_(n), optional_(optional_parens) {}

  std::set<std::string> all() const {
    std::set<std::string> out;
    for (std::size_t len = 2; len <= n_; ++len)
      for (const auto& s : exact(len)) out.insert(s.text);
    return out;
  }

 private:
  enum Top { kVar, kNot, kAnd, kOr };
  struct Str {
    std::string text;
    Top top;
  };

  // Strings of exactly `len` symbols, built recursively with memo-free
  // recursion (small n only).
  std::vector<Str> exact(std::size_t len) const {
    std::vector<Str> out;
    if (len >= 2 && len - 1 <= k_) out.push_back({"x" + std::string(len - 1, '1'), kVar});
    // ¬ operand
    for (const auto& o : operands(len - 1, {kVar, kNot}, {kAnd, kOr}))
      out.push_back({"!" + o, kNot});
    for (std::size_t a = 1; a + 2 <= len; ++a) {
      const std::size_t b = len - 1 - a;
      for (const auto& l : operands(a, {kVar, kNot, kAnd}, {kOr}))
        for (const auto& r : operands(b, {kVar, kNot}, {kAnd, kOr}))
          out.push_back({l + "&" + r, kAnd});
      for (const auto& l : operands(a, {kVar, kNot, kAnd, kOr}, {}))
        for (const auto& r : operands(b, {kVar, kNot, kAnd}, {kOr}))
          out.push_back({l + "|" + r, kOr});
    }
    return out;
  }

  // Operand strings of length `len`: `bare` tops may appear bare (and, when
  // parens are optional, wrapped); `wrapped` tops must be wrapped.
  std::vector<std::string> operands(std::size_t len, std::set<Top> bare,
                                    std::set<Top> wrapped) const {
    std::vector<std::string> out;
    if (len < 2) return out;
    for (const auto& s : exact(len))
      if (bare.count(s.top)) out.push_back(s.text);
    if (len >= 4) {
      for (const auto& s : exact(len - 2))
        if (wrapped.count(s.top) || (optional_ && bare.count(s.top)))
          out.push_back("(" + s.text + ")");
    }
    return out;
  }

  VarIndex k_;
  std::size_t n_;
  bool optional_;
};

}  // namespace boolnet::testing

#endif  // BOOLNET_TESTS_TEST_SUPPORT_HPP_
