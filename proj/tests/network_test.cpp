#include <gtest/gtest.h>

#include <sstream>

#include "boolnet/network.hpp"
#include "boolnet/network_io.hpp"
#include "boolnet/reference.hpp"
#include "test_support.hpp"

namespace boolnet {
namespace {

constexpr Status kU = Status::Unsat, kS = Status::SatStrict, kT = Status::Taut;

TEST(ComposeStatus, NegationAlwaysResolves) {
  auto c = compose_status(Connective::Not, kS);
  EXPECT_EQ(c.status, kS);
  EXPECT_EQ(c.rule, Resolution::NegSatRule);
  c = compose_status(Connective::Not, kU);
  EXPECT_EQ(c.status, kT);
  EXPECT_EQ(c.rule, Resolution::NegTautRule);
  c = compose_status(Connective::Not, kT);
  EXPECT_EQ(c.status, kU);
  EXPECT_EQ(c.rule, Resolution::NegSatRule);
}

TEST(ComposeStatus, ConjunctionTable) {
  EXPECT_EQ(compose_status(Connective::And, kT, kT).status, kT);
  EXPECT_EQ(compose_status(Connective::And, kT, kT).rule, Resolution::AndTautRule);
  EXPECT_FALSE(compose_status(Connective::And, kS, kS).resolved());
  EXPECT_FALSE(compose_status(Connective::And, kT, kS).resolved());
  EXPECT_FALSE(compose_status(Connective::And, kS, kT).resolved());
  for (Status s : {kU, kS, kT}) {
    EXPECT_EQ(compose_status(Connective::And, kU, s).status, kU);
    EXPECT_EQ(compose_status(Connective::And, s, kU).status, kU);
  }
}

TEST(ComposeStatus, DisjunctionTable) {
  EXPECT_EQ(compose_status(Connective::Or, kU, kU).status, kU);
  EXPECT_EQ(compose_status(Connective::Or, kU, kU).rule, Resolution::OrSatRule);
  EXPECT_FALSE(compose_status(Connective::Or, kS, kS).resolved());
  EXPECT_FALSE(compose_status(Connective::Or, kU, kS).resolved());
  EXPECT_FALSE(compose_status(Connective::Or, kS, kU).resolved());
  for (Status s : {kU, kS, kT}) {
    EXPECT_EQ(compose_status(Connective::Or, kT, s).status, kT);
    EXPECT_EQ(compose_status(Connective::Or, s, kT).status, kT);
  }
}

TEST(ComposeStatus, OperandCountChecked) {
  EXPECT_THROW(compose_status(Connective::Not, kS, kS), std::invalid_argument);
  EXPECT_THROW(compose_status(Connective::Or, kS), std::invalid_argument);
}

// Whenever the automata resolve, every pair of concrete expressions with
// those statuses must agree with the oracle.
TEST(ComposeStatus, SoundAgainstOracleOnRepresentatives) {
  const std::vector<std::pair<Expr, Status>> reps = {
      {parse("x1&!x1"), kU}, {parse("x11&!x11&x1"), kU},
      {parse("x1"), kS},     {parse("!x11"), kS},
      {parse("x1&x11"), kS}, {parse("x1|!x1"), kT},
      {parse("x11|!x11|x1"), kT}};
  for (const auto& [a, sa] : reps) {
    ASSERT_EQ(classify(a), sa);
    const auto n = compose_status(Connective::Not, sa);
    EXPECT_EQ(n.status, classify(!a));
    for (const auto& [b, sb] : reps) {
      const auto o = compose_status(Connective::Or, sa, sb);
      if (o.resolved()) EXPECT_EQ(o.status, classify(a | b));
      const auto c = compose_status(Connective::And, sa, sb);
      if (c.resolved()) EXPECT_EQ(c.status, classify(a & b));
    }
  }
  // The underdetermined case really is: x∧x vs x∧¬x.
  EXPECT_NE(classify(parse("x1&x1")), classify(parse("x1&!x1")));
}

TEST(ResolutionTags, RoundTrip) {
  for (int i = 0; i <= static_cast<int>(Resolution::Unresolved); ++i) {
    const auto r = static_cast<Resolution>(i);
    EXPECT_EQ(resolution_from_tag(resolution_tag(r)), r);
  }
  EXPECT_EQ(resolution_from_tag("Bogus"), std::nullopt);
}

TEST(Build, OneVariableLengthThree) {
  const Network net = build_network(1, 3);
  ASSERT_EQ(net.metrics().cells, 2u);
  EXPECT_EQ(*net.find("x1"), (Cell{kS, Resolution::BaseCase}));
  EXPECT_EQ(*net.find("!x1"), (Cell{kS, Resolution::NegSatRule}));
  EXPECT_EQ(classify(parse("¬x1")), kS);
  EXPECT_EQ(net.metrics().base_cells, 1u);
  EXPECT_EQ(net.metrics().build_ops, 2u + (3 + 1 + 2));
}

TEST(Build, ExcludedMiddleIsTautology) {
  const Network net = build_network(1, 6);
  EXPECT_EQ(net.query("x1∨¬x1").status, kT);
  EXPECT_EQ(classify(parse("x1∨¬x1")), kT);
  EXPECT_EQ(net.query("x1∧¬x1").status, kU);
}

TEST(Build, OraclePolicyMatchesOracleEverywhere) {
  const Network net = build_network(2, 8);
  EXPECT_FALSE(net.aborted());
  EXPECT_EQ(net.frontier(), 8u);
  for (std::size_t i = 0; i < net.cell_count(); ++i)
    EXPECT_EQ(net.cell(i).status, classify(parse_symbols(net.expression(i))))
        << to_text(net.expression(i));
}

TEST(Build, EveryHostedComponentExists) {
  const Network net = build_network(2, 9);
  for (std::size_t i = 0; i < net.cell_count(); ++i) {
    const Decomposition d = decompose(net.expression(i));
    if (const auto* n = std::get_if<Negation>(&d)) EXPECT_TRUE(net.find(n->body));
    if (const auto* b = std::get_if<Binary>(&d)) {
      EXPECT_TRUE(net.find(b->left));
      EXPECT_TRUE(net.find(b->right));
    }
  }
}

TEST(Build, ParallelEqualsSerialReference) {
  for (auto policy : {FallbackPolicy::Oracle, FallbackPolicy::Audit}) {
    BuildOptions o;
    o.policy = policy;
    const Network a = build_network(3, 11, o);
    const Network b = reference::build_network_serial(3, 11, o);
    ASSERT_EQ(a.cell_count(), b.cell_count());
    EXPECT_EQ(a.metrics(), b.metrics());
    EXPECT_EQ(a.frontier(), b.frontier());
    for (std::size_t i = 0; i < a.cell_count(); ++i) {
      EXPECT_EQ(a.expression(i), b.expression(i));
      EXPECT_EQ(a.cell(i), b.cell(i));
    }
  }
}

// Audit accounting: a cell is Unresolved exactly when the component
// statuses leave the compound open under the four rules.
TEST(Build, AuditUnresolvedExactlyWhereRulesAreSilent) {
  BuildOptions o;
  o.policy = FallbackPolicy::Audit;
  for (VarIndex k : {1u, 2u}) {
    const Network net = build_network(k, 9, o);
    EXPECT_EQ(net.metrics().fast_path_cells + net.metrics().fallback_cells +
                  net.metrics().base_cells,
              net.metrics().cells);
    std::uint64_t unresolved = 0;
    for (std::size_t i = 0; i < net.cell_count(); ++i) {
      const SymbolString s = net.expression(i);
      const Cell& c = net.cell(i);
      EXPECT_EQ(c.status, classify(parse_symbols(s))) << to_text(s);
      bool open = false;
      const Decomposition d = decompose(s);
      if (const auto* b = std::get_if<Binary>(&d)) {
        const Status l = classify(parse_symbols(b->left));
        const Status r = classify(parse_symbols(b->right));
        if (b->op == Connective::And)
          open = l != kU && r != kU && !(l == kT && r == kT);
        else
          open = (l != kU || r != kU) && l != kT && r != kT;
      }
      EXPECT_EQ(c.resolved_by == Resolution::Unresolved, open) << to_text(s);
      unresolved += open;
      EXPECT_NE(c.resolved_by, Resolution::OracleFallback);
    }
    EXPECT_EQ(net.metrics().unresolved_cells, unresolved);
  }
}

TEST(Build, BudgetAbortLeavesConsistentPartialNetwork) {
  BuildOptions o;
  o.node_budget = 200;
  const Network net = build_network(2, 10, o);
  EXPECT_TRUE(net.aborted());
  EXPECT_LE(net.metrics().trie_nodes, 200u);
  EXPECT_LT(net.frontier(), 10u);
  const Network full = build_network(2, net.frontier());
  for (std::size_t i = 0; i < full.cell_count(); ++i)
    EXPECT_TRUE(net.find(full.expression(i)));
  const Network serial = reference::build_network_serial(2, 10, o);
  EXPECT_EQ(serial.metrics(), net.metrics());
  EXPECT_EQ(serial.frontier(), net.frontier());
}

TEST(Query, StepCounts) {
  const Network net = build_network(1, 7);
  auto q = net.query("x1");
  EXPECT_EQ(q.status, kS);
  EXPECT_EQ(q.steps, 2u);
  q = net.query("¬x1");
  EXPECT_EQ(q.status, kS);
  EXPECT_EQ(q.steps, 3u);
  q = net.query("x1∧¬x1");
  EXPECT_EQ(q.status, kU);
  EXPECT_EQ(q.steps, 6u);
  EXPECT_EQ(net.query("x1∧¬x1", CostModel::MUnits).steps, 6u * Alphabet::size());
}

TEST(Query, NotInNetwork) {
  const Network net = build_network(1, 5);
  EXPECT_THROW(net.query("x1∧¬¬x1"), NotInNetwork);  // beyond frontier
  EXPECT_THROW(net.query("x11"), NotInNetwork);       // k = 1
  EXPECT_THROW(net.query("x1∧"), NotInNetwork);       // prefix only
  EXPECT_THROW(net.query("y"), ParseError);
}

TEST(Metrics, SmallNetworksAndGrowth) {
  EXPECT_EQ(build_network(1, 2).metrics().cells, 1u);
  EXPECT_EQ(build_network(1, 3).metrics().cells, 2u);
  std::uint64_t previous = build_network(2, 5).metrics().cells;
  for (std::size_t n = 6; n <= 10; ++n) {
    const std::uint64_t cells = build_network(2, n).metrics().cells;
    EXPECT_GE(static_cast<double>(cells) / previous, 2.0) << "n=" << n;
    previous = cells;
  }
  const auto& h = build_network(2, 12).metrics().cells_by_length;
  for (std::size_t len = 5; len + 1 < h.size(); ++len) EXPECT_LT(h[len], h[len + 1]);
}

std::string saved(const Network& net) {
  std::ostringstream os;
  save_network(net, os);
  return os.str();
}

Network loaded(const std::string& text) {
  std::istringstream in(text);
  return load_network(in);
}

TEST(Persistence, RoundTripSmall) {
  const Network net = build_network(1, 3);
  const std::string text = saved(net);
  EXPECT_TRUE(text.starts_with("BOOLNET v1 k=1 n=3 policy=oracle\nx1 1 BaseCase\n¬x1 1 NegSatRule\n"));
  const Network back = loaded(text);
  EXPECT_EQ(back.query("x1").status, net.query("x1").status);
  EXPECT_EQ(back.query("¬x1").status, net.query("¬x1").status);
  EXPECT_EQ(back.metrics(), net.metrics());
}

TEST(Persistence, RoundTripAuditNetwork) {
  BuildOptions o;
  o.policy = FallbackPolicy::Audit;
  const Network net = build_network(2, 8, o);
  const Network back = loaded(saved(net));
  EXPECT_EQ(back.metrics(), net.metrics());
  EXPECT_EQ(back.policy(), FallbackPolicy::Audit);
  for (std::size_t i = 0; i < net.cell_count(); ++i) {
    EXPECT_EQ(back.expression(i), net.expression(i));
    EXPECT_EQ(back.cell(i), net.cell(i));
  }
}

TEST(Persistence, Errors) {
  const std::string text = saved(build_network(1, 4));
  auto kind_of = [](const std::string& t) {
    try {
      loaded(t);
    } catch (const NetworkLoadError& e) {
      return static_cast<int>(e.kind());
    }
    return -1;
  };
  EXPECT_EQ(kind_of(text.substr(0, text.size() / 2)),
            static_cast<int>(NetworkLoadError::Kind::Checksum));
  EXPECT_EQ(kind_of(""), static_cast<int>(NetworkLoadError::Kind::Checksum));
  std::string v2 = text;
  v2[9] = '2';
  EXPECT_EQ(kind_of(v2), static_cast<int>(NetworkLoadError::Kind::Version));
  std::string flipped = text;
  flipped[text.find(" 1 BaseCase") + 1] = '0';
  EXPECT_EQ(kind_of(flipped), static_cast<int>(NetworkLoadError::Kind::Checksum));

  BuildOptions o;
  o.node_budget = 50;
  std::ostringstream os;
  EXPECT_THROW(save_network(build_network(2, 10, o), os), std::invalid_argument);
}

TEST(Persistence, SingleByteCorruptionDetected) {
  const std::string text = saved(build_network(2, 7));
  Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    std::string bad = text;
    const std::size_t at = rng.below(bad.size());
    bad[at] = static_cast<char>(bad[at] ^ static_cast<char>(rng.between(1, 255)));
    EXPECT_THROW(loaded(bad), NetworkLoadError) << "offset " << at;
  }
}

}  // namespace
}  // namespace boolnet
