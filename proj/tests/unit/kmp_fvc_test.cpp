// SPDX-License-Identifier: Apache-2.0

#include <random>

#include <gtest/gtest.h>

#include "support/brute_force.hpp"
#include "support/fixtures.hpp"
#include "vcmatch/kmp_fvc.hpp"
#include "vcmatch/oracle.hpp"

namespace vcmatch {
namespace {

using testing::con;
using testing::instance;
using testing::named;
using testing::var;

using Positions = std::vector<std::size_t>;

// Representative of `x` computed from explicit components: the component's
// constant, else its least variable.
Symbol brute_representative(const testing::BruteGraph& g, std::uint32_t x)
{
  const GraphNode node{NodeClass::variable, x};
  const auto      it = g.component.find(node);
  if (it == g.component.end()) return Symbol::variable(x);
  std::optional<std::uint32_t> least;
  for (const GraphNode& n : g.members[it->second]) {
    if (n.cls == NodeClass::constant) return Symbol::constant(n.id);
    if (n.cls == NodeClass::variable && (!least || n.id < *least)) least = n.id;
  }
  return Symbol::variable(*least);
}

TEST(ConditionState, LeastVariableRepresents)
{
  ConditionState state(2);
  EXPECT_EQ(state.add_condition(Symbol::variable(1), Symbol::variable(0)), Validity::valid);
  EXPECT_EQ(state.representative(Symbol::variable(1)), Symbol::variable(0));
  EXPECT_EQ(state.members(0).size(), 2U);
}

TEST(ConditionState, TwoConstantsAreInvalid)
{
  ConditionState state(1);
  EXPECT_EQ(state.add_condition(Symbol::variable(0), Symbol::constant(0)), Validity::valid);
  EXPECT_EQ(state.representative(Symbol::variable(0)), Symbol::constant(0));
  EXPECT_EQ(state.add_condition(Symbol::variable(0), Symbol::constant(1)), Validity::invalid);
}

TEST(ConditionState, ResetClearsEverything)
{
  ConditionState state(2);
  state.add_condition(Symbol::variable(0), Symbol::constant(0));
  state.add_edge(Symbol::variable(1), Symbol::variable(0));
  state.reset();
  EXPECT_EQ(state.representative(Symbol::variable(0)), Symbol::variable(0));
  EXPECT_FALSE(state.prime_anchor(0).has_value());
}

TEST(ShiftingConditionTable, SevenSixComponents)
{
  auto       in    = instance("AABaaCbC");
  const auto table = build_table(in.pattern);
  ASSERT_TRUE(table.valid(7, 6));
  const ConditionEntry e = table.entry(7, 6);
  const auto A = var(in, 'A'), B = var(in, 'B'), C = var(in, 'C');
  const auto a = con(in, 'a'), b = con(in, 'b');

  EXPECT_EQ(e.representative.at(A), Symbol::variable(A));
  EXPECT_EQ(e.representative.at(B), Symbol::variable(A));
  EXPECT_EQ(e.representative.at(C), Symbol::constant(a));
  // A' joins {A, B}; B' joins {a, C}; C' joins {b}.
  const auto anchor_a = e.prime_anchor.at(A);
  EXPECT_TRUE(anchor_a == Symbol::variable(A) || anchor_a == Symbol::variable(B));
  const auto anchor_b = e.prime_anchor.at(B);
  EXPECT_TRUE(anchor_b == Symbol::constant(a) || anchor_b == Symbol::variable(C));
  EXPECT_EQ(e.prime_anchor.at(C), Symbol::constant(b));
  EXPECT_EQ(e.members.at(A), (std::vector<std::uint32_t>{A, B}));

  const auto g = testing::brute_graph(in.pattern, 7, 6);
  EXPECT_TRUE(g.valid);
  EXPECT_TRUE(g.connected({NodeClass::variable, A}, {NodeClass::primed, A}));
  EXPECT_TRUE(g.connected({NodeClass::variable, B}, {NodeClass::primed, A}));
  EXPECT_TRUE(g.connected({NodeClass::constant, a}, {NodeClass::primed, B}));
  EXPECT_TRUE(g.connected({NodeClass::constant, a}, {NodeClass::variable, C}));
  EXPECT_TRUE(g.connected({NodeClass::constant, b}, {NodeClass::primed, C}));
  EXPECT_FALSE(g.connected({NodeClass::constant, a}, {NodeClass::constant, b}));
}

TEST(ShiftingConditionTable, SevenThreeIsValid)
{
  const auto in    = instance("AABaaCbC");
  const auto table = build_table(in.pattern);
  EXPECT_TRUE(table.valid(7, 3));
}

TEST(ShiftingConditionTable, ConstantClashIsInvalid)
{
  const auto in    = instance("ab");
  const auto table = build_table(in.pattern);
  EXPECT_FALSE(table.valid(2, 1));
  EXPECT_FALSE(table.entry(2, 1).valid);
}

TEST(ShiftingConditionTable, ZeroShiftIsAlwaysValid)
{
  const auto in    = instance("AbBaCA");
  const auto table = build_table(in.pattern);
  for (std::size_t k = 1; k <= in.pattern.size(); ++k) {
    const auto e = table.entry(k, 0);
    EXPECT_TRUE(e.valid);
    EXPECT_TRUE(e.representative.empty());
    EXPECT_TRUE(e.prime_anchor.empty());
  }
}

TEST(ShiftingConditionTable, OutOfRange)
{
  const auto in    = instance("AB");
  const auto table = build_table(in.pattern);
  EXPECT_THROW(table.valid(3, 0), std::out_of_range);
  EXPECT_THROW(table.valid(2, 2), std::out_of_range);
  EXPECT_THROW(table.valid(0, 0), std::out_of_range);
}

TEST(ShiftingConditionTable, AgreesWithExplicitComponents)
{
  std::mt19937_64 rng(41);
  for (int round = 0; round < 400; ++round) {
    const auto raw   = testing::random_instance(rng, 4, 3, 12, 1);
    const auto in    = instance(raw.pattern);
    const auto table = build_table(in.pattern);
    const auto& p    = in.pattern;
    for (std::size_t k = 1; k <= p.size(); ++k) {
      for (std::size_t j = 0; j < k; ++j) {
        const auto g = testing::brute_graph(p, k, j);
        ASSERT_EQ(table.valid(k, j), g.valid) << raw.pattern << " k=" << k << " j=" << j;
        if (!g.valid) continue;
        const auto e = table.entry(k, j);
        for (const auto& [x, rep] : e.representative) EXPECT_EQ(rep, brute_representative(g, x));
        for (const auto& [x, anchor] : e.prime_anchor) {
          const GraphNode node = anchor.is_constant() ? GraphNode{NodeClass::constant, anchor.id}
                                                      : GraphNode{NodeClass::variable, anchor.id};
          EXPECT_TRUE(g.connected({NodeClass::primed, x}, node));
        }
        for (std::size_t i = 0; i < j; ++i)
          if (p[i].is_variable()) EXPECT_TRUE(e.prime_anchor.contains(p[i].id));
      }
    }
  }
}

TEST(FvcBitmaps, Examples)
{
  auto         in    = instance("AABaaCbC");
  const auto   table = build_table(in.pattern);
  const auto   bits  = build_bitmaps(in.pattern, table);
  const auto   A = var(in, 'A'), B = var(in, 'B'), C = var(in, 'C');
  const auto   a = con(in, 'a'), b = con(in, 'b');
  EXPECT_FALSE(bits.s(7, B, A, 6));
  EXPECT_TRUE(bits.s(7, A, B, 6));
  EXPECT_TRUE(bits.r(7, C, a, 6));
  EXPECT_FALSE(bits.r(7, C, b, 6));
  for (std::size_t k = 1; k <= 8; ++k) {
    EXPECT_TRUE(bits.v(k, 0));
    for (const auto x : {A, B, C})
      for (const auto p : {a, b}) EXPECT_TRUE(bits.r(k, x, p, 0));
  }
  EXPECT_THROW(bits.r(7, 42, a, 0), std::invalid_argument);
}

TEST(FvcBitmaps, AgreeWithDefinitions)
{
  std::mt19937_64 rng(43);
  for (int round = 0; round < 300; ++round) {
    const auto raw   = testing::random_instance(rng, 3, 3, 10, 1);
    const auto in    = instance(raw.pattern);
    const auto& p    = in.pattern;
    const auto table = build_table(p);
    const auto bits  = build_bitmaps(p, table, 8);
    const auto foreign = static_cast<std::uint32_t>(p.constants().size() + 5);
    for (std::size_t k = 1; k <= p.size(); ++k) {
      for (std::size_t j = 0; j < k; ++j) {
        const auto g = testing::brute_graph(p, k, j);
        ASSERT_EQ(bits.v(k, j), g.valid);
        for (const auto x : p.variables()) {
          const Symbol rep = g.valid ? brute_representative(g, x) : Symbol::variable(x);
          for (const auto c : p.constants())
            EXPECT_EQ(bits.r(k, x, c, j), g.valid && !(rep.is_constant() && rep.id != c));
          EXPECT_EQ(bits.r(k, x, foreign, j), g.valid && !rep.is_constant());
          for (const auto y : p.variables())
            if (x != y) EXPECT_EQ(bits.s(k, x, y, j), g.valid && rep != Symbol::variable(y));
        }
      }
    }
  }
}

TEST(FailureFvc, FirstVectorShiftsBySix)
{
  auto             in = instance("AABaaCbC");
  const FvcMatcher matcher(in.pattern);
  const auto       got = failure_fvc(matcher, 7, named(in, {{'A', 'b'}, {'B', 'b'}, {'C', 'a'}}));
  EXPECT_EQ(got.resume, 6U);
  EXPECT_EQ(got.succeeding, named(in, {{'A', 'b'}, {'B', 'a'}, {'C', 'b'}}));
}

TEST(FailureFvc, SecondVectorShiftsByThree)
{
  auto             in = instance("AABaaCbC");
  const FvcMatcher matcher(in.pattern);
  const auto       got = failure_fvc(matcher, 7, named(in, {{'A', 'b'}, {'B', 'a'}, {'C', 'a'}}));
  EXPECT_EQ(got.resume, 3U);
  EXPECT_EQ(got.succeeding, named(in, {{'A', 'a'}, {'B', 'b'}}));
}

TEST(FailureFvc, WorkedVectorsAgreeWithBruteForce)
{
  auto             in = instance("AABaaCbC");
  const FvcMatcher matcher(in.pattern);
  for (const auto& pi : {named(in, {{'A', 'b'}, {'B', 'b'}, {'C', 'a'}}), named(in, {{'A', 'b'}, {'B', 'a'}, {'C', 'a'}})})
    EXPECT_EQ(failure_fvc(matcher, 7, pi), testing::brute_failure(in.pattern, 7, pi, MatchMode::fvc));
}

TEST(FailureFvc, VariableFreeIsBorder)
{
  const auto       in = instance("abab");
  const FvcMatcher matcher(in.pattern);
  const auto       got = matcher.failure(4, {});
  EXPECT_EQ(got.resume, 2U);
  EXPECT_TRUE(got.succeeding.empty());
}

TEST(FailureFvc, DomainMustMatchPrefix)
{
  auto             in = instance("AABaaCbC");
  const FvcMatcher matcher(in.pattern);
  EXPECT_THROW(matcher.failure(7, named(in, {{'A', 'b'}})), std::invalid_argument);
  EXPECT_THROW(matcher.failure(2, named(in, {{'A', 'b'}, {'B', 'b'}})), std::invalid_argument);
  EXPECT_THROW(matcher.failure(0, {}), std::invalid_argument);
  EXPECT_THROW(matcher.failure(9, {}), std::invalid_argument);
}

TEST(FailureFvc, ForeignConstantsUseTheForeignColumn)
{
  auto             in = instance("AaA");
  const FvcMatcher matcher(in.pattern);
  // A -> z: shift 1 would need A' ~ A, fine; shift 2 forces A = a.
  const auto pi = named(in, {{'A', 'z'}});
  EXPECT_EQ(matcher.failure(3, pi), testing::brute_failure(in.pattern, 3, pi, MatchMode::fvc));
}

TEST(FailureFvc, EqualsBruteForce)
{
  std::mt19937_64 rng(47);
  for (int round = 0; round < 600; ++round) {
    const auto raw = testing::random_instance(rng, 3, 3, 10, 1);
    const auto in  = instance(raw.pattern);
    const FvcMatcher matcher(in.pattern, round % 2 ? 8 : 64);
    for (std::size_t k = 1; k <= in.pattern.size(); ++k) {
      for (int draw = 0; draw < 4; ++draw) {
        const auto alphabet = static_cast<std::uint32_t>(in.pattern.constants().size() + 2);
        const auto pi       = testing::random_prefix_substitution(rng, in.pattern, k, alphabet, false);
        ASSERT_EQ(matcher.failure(k, *pi), testing::brute_failure(in.pattern, k, *pi, MatchMode::fvc))
            << raw.pattern << " k=" << k;
      }
    }
  }
}

TEST(MatchFvc, Examples)
{
  const auto first = instance("ABAb", "ababbbb");
  EXPECT_EQ(match_fvc(first.pattern, first.text).positions, (Positions{1, 2, 4}));
  const auto regression = instance("AABaaCbC", "bbaaaabbb");
  EXPECT_TRUE(match_fvc(regression.pattern, regression.text).positions.empty());
  const auto exact = instance("ab", "abab");
  EXPECT_EQ(match_fvc(exact.pattern, exact.text).positions, (Positions{1, 3}));
  const auto short_text = instance("ABC", "ab");
  EXPECT_TRUE(match_fvc(short_text.pattern, short_text.text).positions.empty());
}

TEST(MatchFvc, WitnessesEqualOracle)
{
  const auto in = instance("ABAb", "ababbbb");
  EXPECT_EQ(match_fvc(in.pattern, in.text, 16, true), naive_all(in.pattern, in.text, MatchMode::fvc, true));
}

TEST(MatchFvc, ValidityFollowsBorderArrayForVariableFreePatterns)
{
  std::mt19937_64 rng(53);
  for (int round = 0; round < 300; ++round) {
    const auto raw   = testing::random_instance(rng, 0, 2, 20, 1);
    const auto in    = instance(raw.pattern);
    const auto table = build_table(in.pattern);
    std::vector<std::uint32_t> ids;
    for (const Symbol s : in.pattern.symbols()) ids.push_back(s.id);
    const auto border = testing::border_array(ids);
    for (std::size_t k = 1; k <= in.pattern.size(); ++k) {
      std::size_t best = 0;
      for (std::size_t j = 0; j < k; ++j)
        if (table.valid(k, j)) best = j;
      EXPECT_EQ(best, border[k]) << raw.pattern << " k=" << k;
    }
  }
}

}  // namespace
}  // namespace vcmatch
