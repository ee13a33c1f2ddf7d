#ifndef BOOLNET_ENUMERATE_HPP_
#define BOOLNET_ENUMERATE_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "boolnet/expr.hpp"

namespace boolnet {

enum class ParenStyle {
  // Any operand of ¬, ∨, ∧ may carry one layer of parentheses, as in the
  // productions ¬(A), (A)∨(B), (A)∧(B). Nested "((A))" is never produced.
  Production,
  // Parentheses only where precedence needs them: one string per tree.
  Minimal,
};

struct EnumerationOptions {
  ParenStyle parens = ParenStyle::Production;
  // Maximum number of strings generated before aborting.
  std::size_t budget = 10'000'000;
};

class EnumerationAborted : public std::runtime_error {
 public:
  EnumerationAborted(std::size_t generated, std::size_t complete_length)
      : std::runtime_error("enumeration budget exceeded after " +
                           std::to_string(generated) + " expressions"),
        generated_(generated),
        complete_length_(complete_length) {}
  std::size_t generated() const { return generated_; }
  // Longest length whose expressions were all generated.
  std::size_t complete_length() const { return complete_length_; }

 private:
  std::size_t generated_;
  std::size_t complete_length_;
};

// Generates every well-formed expression over x1..xk with coded length
// <= max_len, shortest first. Each string appears once.
class ExpressionEnumerator {
 public:
  ExpressionEnumerator(VarIndex variable_count, std::size_t max_len,
                       EnumerationOptions options = {});

  // Stream interface; std::nullopt once exhausted.
  std::optional<SymbolString> next();

  // All expressions of exactly `len` symbols, in stream order.
  const std::vector<SymbolString>& level(std::size_t len);

  std::size_t generated() const { return generated_; }
  std::size_t max_len() const { return max_len_; }

 private:
  enum Kind { kVariable, kNegation, kConjunction, kDisjunction, kKinds };
  using KindSet = std::array<bool, kKinds>;

  void generate_through(std::size_t len);
  void generate(std::size_t len);
  template <class Fn>
  void for_operands(std::size_t len, const KindSet& plain,
                    const KindSet& paren, Fn&& fn) const;
  void add(Kind kind, std::size_t len, SymbolString s);

  VarIndex variable_count_;
  std::size_t max_len_;
  EnumerationOptions options_;
  // by_kind_[kind][len]
  std::array<std::vector<std::vector<SymbolString>>, kKinds> by_kind_;
  std::vector<std::vector<SymbolString>> levels_;
  std::size_t built_ = 1;
  std::size_t generated_ = 0;
  std::size_t cursor_len_ = 2;
  std::size_t cursor_pos_ = 0;
};

std::vector<SymbolString> enumerate_expressions(VarIndex variable_count,
                                                std::size_t max_len,
                                                EnumerationOptions options = {});

}  // namespace boolnet

#endif  // BOOLNET_ENUMERATE_HPP_
