#include "boolnet/symbols.hpp"

namespace boolnet {

namespace {

constexpr std::string_view kNotUtf8 = "\xC2\xAC";      // ¬
constexpr std::string_view kOrUtf8 = "\xE2\x88\xA8";   // ∨
constexpr std::string_view kAndUtf8 = "\xE2\x88\xA7";  // ∧

}  // namespace

SymbolString to_symbols(std::string_view text) {
  SymbolString out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const std::size_t position = out.size() + 1;
    const std::string_view rest = text.substr(i);
    if (rest.starts_with(kNotUtf8)) {
      out.push_back(sym::kNot);
      i += kNotUtf8.size();
    } else if (rest.starts_with(kOrUtf8)) {
      out.push_back(sym::kOr);
      i += kOrUtf8.size();
    } else if (rest.starts_with(kAndUtf8)) {
      out.push_back(sym::kAnd);
      i += kAndUtf8.size();
    } else if (Alphabet::index_of(text[i]) >= 0) {
      out.push_back(text[i]);
      ++i;
    } else {
      throw ParseError(position, "symbol not in alphabet");
    }
  }
  return out;
}

std::string to_text(const SymbolString& symbols) {
  std::string out;
  out.reserve(symbols.size() * 2);
  for (char c : symbols) {
    switch (c) {
      case sym::kNot: out += kNotUtf8; break;
      case sym::kOr: out += kOrUtf8; break;
      case sym::kAnd: out += kAndUtf8; break;
      default: out.push_back(c); break;
    }
  }
  return out;
}

}  // namespace boolnet
