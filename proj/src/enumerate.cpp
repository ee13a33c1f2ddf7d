#include "boolnet/enumerate.hpp"

namespace boolnet {

ExpressionEnumerator::ExpressionEnumerator(VarIndex variable_count,
                                           std::size_t max_len,
                                           EnumerationOptions options)
    : variable_count_(variable_count), max_len_(max_len), options_(options) {
  if (variable_count < 1) throw std::invalid_argument("need at least one variable");
  if (max_len < 2) throw std::invalid_argument("max length must be at least 2");
  for (auto& v : by_kind_) v.resize(max_len + 1);
  levels_.resize(max_len + 1);
}

void ExpressionEnumerator::add(Kind kind, std::size_t len, SymbolString s) {
  if (generated_ >= options_.budget) throw EnumerationAborted(generated_, len - 1);
  ++generated_;
  by_kind_[kind][len].push_back(s);
  levels_[len].push_back(std::move(s));
}

template <class Fn>
void ExpressionEnumerator::for_operands(std::size_t len, const KindSet& plain,
                                        const KindSet& paren, Fn&& fn) const {
  for (int k = 0; k < kKinds; ++k)
    if (plain[k] && len >= 1)
      for (const auto& s : by_kind_[k][len]) fn(s, false);
  for (int k = 0; k < kKinds; ++k)
    if (paren[k] && len >= 3)
      for (const auto& s : by_kind_[k][len - 2]) fn(s, true);
}

void ExpressionEnumerator::generate(std::size_t len) {
  const bool production = options_.parens == ParenStyle::Production;
  constexpr KindSet kAll{true, true, true, true};
  constexpr KindSet kNone{false, false, false, false};
  constexpr KindSet kUnary{true, true, false, false};
  constexpr KindSet kNoOr{true, true, true, false};
  constexpr KindSet kOrOnly{false, false, false, true};
  constexpr KindSet kBinary{false, false, true, true};

  auto operand = [](const SymbolString& s, bool paren) {
    return paren ? sym::kOpen + s + sym::kClose : s;
  };

  if (len - 1 <= variable_count_) add(kVariable, len, coded_variable(len - 1));

  for_operands(len - 1, kUnary, production ? kAll : kBinary,
               [&](const SymbolString& s, bool paren) {
                 add(kNegation, len, sym::kNot + operand(s, paren));
               });

  struct Shape {
    Kind kind;
    char op;
    KindSet left_plain, left_paren, right_plain, right_paren;
  };
  const Shape shapes[] = {
      {kConjunction, sym::kAnd, kNoOr, production ? kAll : kOrOnly, kUnary,
       production ? kAll : kBinary},
      {kDisjunction, sym::kOr, kAll, production ? kAll : kNone, kNoOr,
       production ? kAll : kOrOnly},
  };
  for (const Shape& shape : shapes) {
    for (std::size_t a = 1; a + 2 <= len; ++a) {
      const std::size_t b = len - 1 - a;
      for_operands(a, shape.left_plain, shape.left_paren,
                   [&](const SymbolString& l, bool lp) {
                     const SymbolString head = operand(l, lp) + shape.op;
                     for_operands(b, shape.right_plain, shape.right_paren,
                                  [&](const SymbolString& r, bool rp) {
                                    add(shape.kind, len, head + operand(r, rp));
                                  });
                   });
    }
  }
}

void ExpressionEnumerator::generate_through(std::size_t len) {
  while (built_ < len) generate(++built_);
}

const std::vector<SymbolString>& ExpressionEnumerator::level(std::size_t len) {
  if (len > max_len_) throw std::out_of_range("length beyond enumeration bound");
  generate_through(len);
  return levels_[len];
}

std::optional<SymbolString> ExpressionEnumerator::next() {
  while (cursor_len_ <= max_len_) {
    const auto& lv = level(cursor_len_);
    if (cursor_pos_ < lv.size()) return lv[cursor_pos_++];
    ++cursor_len_;
    cursor_pos_ = 0;
  }
  return std::nullopt;
}

std::vector<SymbolString> enumerate_expressions(VarIndex variable_count,
                                                std::size_t max_len,
                                                EnumerationOptions options) {
  ExpressionEnumerator en(variable_count, max_len, options);
  std::vector<SymbolString> out;
  while (auto s = en.next()) out.push_back(std::move(*s));
  return out;
}

}  // namespace boolnet
