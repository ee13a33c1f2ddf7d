#include <gtest/gtest.h>

#include "boolnet/enumerate.hpp"
#include "boolnet/oracle.hpp"
#include "boolnet/reference.hpp"
#include "test_support.hpp"

namespace boolnet {
namespace {

const Expr x = Expr::var(1);
const Expr y = Expr::var(2);

TEST(Classify, SmallExamples) {
  EXPECT_EQ(classify(x | !x), Status::Taut);
  EXPECT_EQ(classify(x & !x), Status::Unsat);
  EXPECT_EQ(classify(x), Status::SatStrict);
}

TEST(Classify, StatusSymbols) {
  EXPECT_EQ(status_symbol(Status::Unsat), '0');
  EXPECT_EQ(status_symbol(Status::SatStrict), '1');
  EXPECT_EQ(status_symbol(Status::Taut), 't');
  EXPECT_EQ(status_from_symbol('t'), Status::Taut);
  EXPECT_EQ(status_from_symbol('2'), std::nullopt);
}

TEST(Classify, VariableCap) {
  Expr wide = Expr::var(1);
  for (VarIndex v = 2; v <= 21; ++v) wide = wide | Expr::var(v);
  try {
    classify(wide);
    FAIL() << "expected VariableCapExceeded";
  } catch (const VariableCapExceeded& e) {
    EXPECT_EQ(e.found(), 21u);
    EXPECT_EQ(e.cap(), 20u);
  }
  EXPECT_EQ(classify(wide, 21), Status::SatStrict);
}

TEST(CountSatisfying, Examples) {
  EXPECT_EQ(count_satisfying(x & !x), 0u);
  EXPECT_EQ(count_satisfying(x | y), 3u);
  // 2^5 sweep by hand: first clause is contradictory; second fixes
  // u=1,x=0,z=1,y=0,w=1 → exactly one assignment.
  const Expr a = parse(
      "(x111∧¬x111∧x11111∧¬x1111∧x1111)∨(x1∧¬x111∧x11111∧¬x1111∧x11)");
  EXPECT_EQ(count_satisfying(a), 1u);
}

TEST(CountSatisfying, ParallelMatchesSerialReference) {
  Rng rng(5);
  for (int i = 0; i < 300; ++i) {
    const Expr e = testing::random_expr(rng, 9, static_cast<int>(rng.below(12)));
    EXPECT_EQ(count_satisfying(e), reference::count_satisfying_serial(e));
  }
}

TEST(FindWitness, Examples) {
  EXPECT_EQ(find_witness(x & !x), std::nullopt);
  EXPECT_EQ(find_witness(x | !x), (TruthAssignment{{1, false}}));
  // u ∧ ¬x ∧ ¬z ∧ ¬y ∧ w with u=1, w=2, x=3, y=4, z=5
  const auto w = find_witness(parse("x1∧¬x111∧¬x11111∧¬x1111∧x11"));
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, (TruthAssignment{{1, true}, {2, true}, {3, false}, {4, false}, {5, false}}));
}

TEST(FindWitness, LexicographicOrderFirstVariableMostSignificant) {
  // x1 ∨ x2 is first satisfied by x1=0, x2=1.
  EXPECT_EQ(find_witness(x | y), (TruthAssignment{{1, false}, {2, true}}));
}

TEST(OracleProperty, ThresholdsWitnessAndDoubleNegation) {
  for (const auto& s : enumerate_expressions(4, 9)) {
    const Expr e = parse_symbols(s);
    const Status st = classify(e);
    const std::uint64_t n = count_satisfying(e);
    const std::uint64_t total = std::uint64_t{1} << variables(e).size();
    EXPECT_EQ(st == Status::Unsat, n == 0);
    EXPECT_EQ(st == Status::Taut, n == total);
    EXPECT_EQ(classify(!!e), st);
    const auto w = find_witness(e);
    EXPECT_EQ(w.has_value(), st != Status::Unsat);
    if (w) EXPECT_TRUE(evaluate(e, *w));
  }
}

}  // namespace
}  // namespace boolnet
