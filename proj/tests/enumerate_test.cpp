#include <gtest/gtest.h>

#include <set>

#include "boolnet/enumerate.hpp"
#include "test_support.hpp"

namespace boolnet {
namespace {

TEST(Enumerate, ShortestBounds) {
  EXPECT_EQ(enumerate_expressions(1, 2), (std::vector<SymbolString>{"x1"}));
  EXPECT_EQ(enumerate_expressions(1, 3), (std::vector<SymbolString>{"x1", "!x1"}));
}

TEST(Enumerate, RejectsBadBounds) {
  EXPECT_THROW(ExpressionEnumerator(0, 5), std::invalid_argument);
  EXPECT_THROW(ExpressionEnumerator(1, 1), std::invalid_argument);
}

// Counts frozen from the independent grammar generator (run below as well).
TEST(Enumerate, CountForOneVariableLengthSeven) {
  const auto all = enumerate_expressions(1, 7);
  EXPECT_EQ(all.size(), 28u);
  EXPECT_EQ(testing::GrammarGenerator(1, 7, true).all().size(), 28u);
}

TEST(Enumerate, MatchesIndependentGenerator) {
  for (bool production : {true, false}) {
    for (std::size_t n = 2; n <= 9; ++n) {
      EnumerationOptions o;
      o.parens = production ? ParenStyle::Production : ParenStyle::Minimal;
      const auto got = enumerate_expressions(1, n, o);
      const std::set<std::string> unique(got.begin(), got.end());
      EXPECT_EQ(unique.size(), got.size()) << "duplicates at n=" << n;
      EXPECT_EQ(unique, testing::GrammarGenerator(1, n, production).all())
          << "n=" << n << " production=" << production;
    }
  }
  EXPECT_EQ(enumerate_expressions(2, 9).size(),
            testing::GrammarGenerator(2, 9, true).all().size());
}

TEST(Enumerate, NondecreasingLengthWithinBound) {
  const auto all = enumerate_expressions(3, 10);
  for (std::size_t i = 0; i < all.size(); ++i) {
    EXPECT_LE(all[i].size(), 10u);
    if (i) EXPECT_LE(all[i - 1].size(), all[i].size());
  }
}

TEST(Enumerate, MinimalStyleIsOneStringPerTree) {
  EnumerationOptions o;
  o.parens = ParenStyle::Minimal;
  for (const auto& s : enumerate_expressions(2, 10, o))
    EXPECT_EQ(render_symbols(parse_symbols(s)), s);
}

TEST(Enumerate, ProductionStyleHostsParenthesizedOperands) {
  const auto all = enumerate_expressions(2, 11);
  const std::set<std::string> set(all.begin(), all.end());
  for (const char* s : {"!(x1)", "(x1)|(x11)", "(x1)&(x11)", "x1|!x1", "x1&!x1",
                        "!(x1|x11)", "(x1|x11)&x1"})
    EXPECT_TRUE(set.count(s)) << s;
  EXPECT_FALSE(set.count("(x1)"));
  EXPECT_FALSE(set.count("((x1))|x1"));
}

TEST(Enumerate, StreamMatchesLevels) {
  ExpressionEnumerator en(2, 8);
  std::vector<SymbolString> streamed;
  while (auto s = en.next()) streamed.push_back(*s);
  EXPECT_EQ(streamed, enumerate_expressions(2, 8));
  EXPECT_EQ(en.generated(), streamed.size());
}

TEST(Enumerate, BudgetAbortReportsPartialCount) {
  EnumerationOptions o;
  o.budget = 20;
  try {
    enumerate_expressions(2, 10, o);
    FAIL() << "expected EnumerationAborted";
  } catch (const EnumerationAborted& e) {
    EXPECT_EQ(e.generated(), 20u);
    // k=2 has 10 strings of length <= 5 and 13 of length 6.
    EXPECT_EQ(e.complete_length(), 5u);
  }
}

}  // namespace
}  // namespace boolnet
