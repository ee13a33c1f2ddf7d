#ifndef BOOLNET_SYMBOLS_HPP_
#define BOOLNET_SYMBOLS_HPP_

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace boolnet {

// A word over the expression alphabet, one byte per symbol. Internally the
// symbols use their ASCII aliases: 'x' variable mark, '1' digit mark,
// '!' negation, '|' disjunction, '&' conjunction, '(' and ')'.
using SymbolString = std::string;

namespace sym {
inline constexpr char kVar = 'x';
inline constexpr char kDigit = '1';
inline constexpr char kNot = '!';
inline constexpr char kOr = '|';
inline constexpr char kAnd = '&';
inline constexpr char kOpen = '(';
inline constexpr char kClose = ')';
}  // namespace sym

// The finite alphabet every expression is written in. Its size is the
// outlet count of a switching node.
struct Alphabet {
  static constexpr std::array<char, 7> symbols = {
      sym::kVar, sym::kDigit, sym::kNot, sym::kOr,
      sym::kAnd, sym::kOpen,  sym::kClose};

  static constexpr std::size_t size() { return symbols.size(); }

  // Outlet index of `c`, or -1 if `c` is not in the alphabet.
  static constexpr int index_of(char c) {
    for (std::size_t i = 0; i < symbols.size(); ++i)
      if (symbols[i] == c) return static_cast<int>(i);
    return -1;
  }
};

class ParseError : public std::runtime_error {
 public:
  // `position` is the 1-based symbol index of the offending symbol
  // (one past the end for unexpected end of input).
  ParseError(std::size_t position, const std::string& what)
      : std::runtime_error("parse error at position " +
                           std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Converts UTF-8 text (canonical ¬ ∨ ∧ or the ASCII aliases ! | &) into a
// symbol string. Throws ParseError on any character outside the alphabet.
SymbolString to_symbols(std::string_view text);

// Canonical UTF-8 rendering of a symbol string.
std::string to_text(const SymbolString& symbols);

}  // namespace boolnet

#endif  // BOOLNET_SYMBOLS_HPP_
