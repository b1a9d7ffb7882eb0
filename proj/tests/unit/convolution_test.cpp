// SPDX-License-Identifier: Apache-2.0

#include <random>

#include <gtest/gtest.h>

#include "support/brute_force.hpp"
#include "support/fixtures.hpp"
#include "vcmatch/convolution.hpp"
#include "vcmatch/oracle.hpp"

namespace vcmatch {
namespace {

using testing::instance;
using testing::var;

using Positions = std::vector<std::size_t>;

IntSeq plain_correlation(const IntSeq& a, const IntSeq& b)
{
  IntSeq out(a.size() - b.size() + 1, 0);
  for (std::size_t j = 0; j < out.size(); ++j)
    for (std::size_t i = 0; i < b.size(); ++i) out[j] += a[i + j] * b[i];
  return out;
}

WindowMask mask_of(std::initializer_list<int> bits)
{
  WindowMask out;
  for (const int b : bits) out.push_back(b != 0);
  return out;
}

TEST(Correlate, HandArithmetic)
{
  EXPECT_EQ(correlate(IntSeq{1, 2, 3}, IntSeq{1, 1}), (IntSeq{3, 5}));
}

TEST(Correlate, IdentityKernel)
{
  const IntSeq a{4, 0, 9, 2, 7};
  EXPECT_EQ(correlate(a, IntSeq{1}), a);
}

TEST(Correlate, EncodedTextAgainstIndicator)
{
  const IntSeq text{1, 1, 2, 3, 2, 3};  // aabcbc
  const IntSeq p_b{0, 0, 1, 1, 0};      // B in AaBBb
  EXPECT_EQ(plain_correlation(text, p_b), (IntSeq{5, 5}));
  EXPECT_EQ(correlate(text, p_b), (IntSeq{5, 5}));
  EXPECT_EQ(correlate_direct(text, p_b), (IntSeq{5, 5}));
}

TEST(Correlate, ShapeErrors)
{
  EXPECT_THROW(correlate(IntSeq{1}, IntSeq{1, 1}), std::invalid_argument);
  EXPECT_THROW(correlate(IntSeq{1, 2}, IntSeq{}), std::invalid_argument);
}

TEST(Correlate, ValueBoundIsEnforced)
{
  EXPECT_THROW(correlate(IntSeq{kCorrelationValueLimit, 1}, IntSeq{1}), OverflowRisk);
  EXPECT_THROW(correlate(IntSeq{-1, 1}, IntSeq{1}), OverflowRisk);
  const IntSeq huge(4096, kCorrelationValueLimit - 1);
  EXPECT_THROW(correlate(huge, huge), OverflowRisk);
  EXPECT_THROW(correlate_direct(huge, huge), OverflowRisk);
}

TEST(Correlate, LargeValuesStayExact)
{
  const IntSeq big(64, kCorrelationValueLimit - 1);
  const auto   expected = 64 * (kCorrelationValueLimit - 1) * (kCorrelationValueLimit - 1);
  EXPECT_EQ(correlate(big, big), (IntSeq{expected}));
  EXPECT_EQ(correlate_direct(big, big), (IntSeq{expected}));

  std::mt19937_64 rng(13);
  for (int round = 0; round < 50; ++round) {
    const std::size_t n = 1 + rng() % 400;
    const std::size_t m = 1 + rng() % n;
    IntSeq a(n), b(m);
    for (auto& v : a) v = static_cast<std::int64_t>(rng() % kCorrelationValueLimit);
    for (auto& v : b) v = static_cast<std::int64_t>(rng() % kCorrelationValueLimit);
    EXPECT_EQ(correlate(a, b), plain_correlation(a, b));
  }
}

TEST(Correlate, MatchesDirectSummation)
{
  std::mt19937_64 rng(101);
  for (int round = 0; round < 500; ++round) {
    const std::size_t n   = 1 + rng() % 300;
    const std::size_t m   = 1 + rng() % n;
    const std::int64_t hi = std::int64_t{1} << (rng() % 12);
    IntSeq a(n), b(m);
    for (auto& v : a) v = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi));
    for (auto& v : b) v = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi));
    const IntSeq expected = plain_correlation(a, b);
    EXPECT_EQ(correlate(a, b), expected);
    EXPECT_EQ(correlate_direct(a, b), expected);
  }
}

TEST(Correlate, LongInputsUseSeveralBlocks)
{
  std::mt19937_64 rng(7);
  IntSeq a(5000), b(37);
  for (auto& v : a) v = static_cast<std::int64_t>(rng() % 50);
  for (auto& v : b) v = static_cast<std::int64_t>(rng() % 2);
  EXPECT_EQ(correlate(a, b), plain_correlation(a, b));
}

TEST(WildcardMask, Examples)
{
  const auto in = instance("AaBBb", "aabcbc");
  EXPECT_EQ(wildcard_mask(in.pattern, in.text), mask_of({1, 0}));

  const auto all_vars = instance("AB", "abca");
  EXPECT_EQ(wildcard_mask(all_vars.pattern, all_vars.text), mask_of({1, 1, 1}));

  const auto exact = instance("ab", "abab");
  EXPECT_EQ(wildcard_mask(exact.pattern, exact.text), mask_of({1, 0, 1}));
}

TEST(VariableConsistent, Examples)
{
  const auto in = instance("AaBBb", "aabcbc");
  EXPECT_EQ(variable_consistent(in.pattern, in.text, var(in, 'B')), mask_of({0, 0}));
  EXPECT_EQ(variable_consistent(in.pattern, in.text, var(in, 'A')), mask_of({1, 1}));

  const auto twice = instance("AA", "aa");
  EXPECT_EQ(variable_consistent(twice.pattern, twice.text, var(twice, 'A')), mask_of({1}));
}

TEST(VariableConsistent, UnknownVariable)
{
  const auto in = instance("Ab", "abab");
  EXPECT_THROW(variable_consistent(in.pattern, in.text, 9), std::invalid_argument);
}

TEST(ConvMatchAll, Examples)
{
  const auto first = instance("ABAb", "ababbbb");
  EXPECT_EQ(conv_match_all(first.pattern, first.text, MatchMode::fvc).positions, (Positions{1, 2, 4}));
  EXPECT_EQ(conv_match_all(first.pattern, first.text, MatchMode::pvc).positions, (Positions{1, 2}));

  const auto none = instance("AaBBb", "aabcbc");
  EXPECT_TRUE(conv_match_all(none.pattern, none.text, MatchMode::fvc).positions.empty());
  EXPECT_TRUE(conv_match_all(none.pattern, none.text, MatchMode::pvc).positions.empty());

  const auto exact = instance("ab", "abab");
  EXPECT_EQ(conv_match_all(exact.pattern, exact.text, MatchMode::pvc).positions, (Positions{1, 3}));
}

TEST(ConvMatchAll, WitnessesAndDirectMethod)
{
  const auto in     = instance("ABAb", "ababbbb");
  const auto report = conv_match_all(in.pattern, in.text, MatchMode::fvc, {CorrelationMethod::direct, true});
  EXPECT_EQ(report, naive_all(in.pattern, in.text, MatchMode::fvc, true));
}

// k * sum(a_i^2) == (sum a_i)^2 exactly when all a_i are equal.
TEST(SquaredSumIdentity, ExhaustiveSmallTuples)
{
  std::size_t exceptions = 0;
  for (std::size_t k = 1; k <= 4; ++k) {
    std::vector<std::int64_t> a(k, 0);
    for (;;) {
      std::int64_t sum = 0, squares = 0;
      bool         equal = true;
      for (const auto v : a) {
        sum += v;
        squares += v * v;
        equal = equal && v == a.front();
      }
      if ((static_cast<std::int64_t>(k) * squares == sum * sum) != equal) ++exceptions;
      std::size_t i = 0;
      while (i < k && ++a[i] > 8) a[i++] = 0;
      if (i == k) break;
    }
  }
  EXPECT_EQ(exceptions, 0U);
}

// Per window: constants match as wildcards and the variable-only restriction
// function-matches the aligned text, which must agree with the window oracle.
TEST(ConvMatchAll, DecompositionAgreesWithWindowOracle)
{
  std::mt19937_64 rng(29);
  for (int round = 0; round < 500; ++round) {
    const auto raw = testing::random_instance(rng, 3, 3, 8, 24);
    const auto in  = instance(raw.pattern, raw.text);
    if (in.pattern.size() > in.text.size()) continue;
    const WindowMask mask = wildcard_mask(in.pattern, in.text);
    for (std::size_t i = 0; i < mask.size(); ++i) {
      bool wildcard = true;
      for (std::size_t j = 0; j < in.pattern.size(); ++j)
        if (in.pattern[j].is_constant() && in.pattern[j].id != in.text[i + j]) wildcard = false;
      ASSERT_EQ(mask[i], wildcard);

      // Restriction to variable positions, as its own pattern and text.
      std::vector<Symbol>        vars_only;
      std::vector<std::uint32_t> aligned;
      for (std::size_t j = 0; j < in.pattern.size(); ++j) {
        if (in.pattern[j].is_variable()) {
          vars_only.push_back(in.pattern[j]);
          aligned.push_back(in.text[i + j]);
        }
      }
      for (const MatchMode mode : {MatchMode::fvc, MatchMode::pvc}) {
        bool restricted = true;
        if (!vars_only.empty())
          restricted = window_match(PatternString(vars_only), TextString(aligned), 1, mode).has_value();
        EXPECT_EQ(wildcard && restricted, window_match(in.pattern, in.text, i + 1, mode).has_value());
      }
    }
  }
}

TEST(ConvMatchAll, EqualsNaiveOnRandomInstances)
{
  std::mt19937_64 rng(31);
  for (int round = 0; round < 2000; ++round) {
    const auto raw = testing::random_instance(rng, 4, 4, 12, 64);
    const auto in  = instance(raw.pattern, raw.text);
    for (const MatchMode mode : {MatchMode::fvc, MatchMode::pvc}) {
      ASSERT_EQ(conv_match_all(in.pattern, in.text, mode).positions,
                naive_all(in.pattern, in.text, mode).positions)
          << raw.pattern << " / " << raw.text << " / " << to_string(mode);
    }
  }
}

}  // namespace
}  // namespace vcmatch
