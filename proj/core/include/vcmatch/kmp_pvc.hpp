// SPDX-License-Identifier: Apache-2.0

#ifndef VCMATCH_KMP_PVC_HPP
#define VCMATCH_KMP_PVC_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "vcmatch/bit_rows.hpp"
#include "vcmatch/match_report.hpp"
#include "vcmatch/shifting_graph.hpp"
#include "vcmatch/substitution.hpp"
#include "vcmatch/symbols.hpp"

namespace vcmatch {

/// Connectivity of one shifting graph under the injective reading.
/// `partners` maps every node with at least one neighbour in its component to
/// the other nodes of that component (the node itself is not included);
/// nodes that are absent have no partners. Empty when injectively invalid.
struct PartnerEntry {
  bool                                          injectively_valid = false;
  std::map<GraphNode, std::vector<GraphNode>>   partners;
};

/// Injective-validity table for all 0 <= j < k <= m. A graph is injectively
/// valid when no component holds two constants, two variables or two primed
/// variables, so every component has at most one node of each class and an
/// edge is merged in constant time.
///
/// Each entry differs from (k-1, j-1) by one edge; per valid entry only the
/// class slots of each node's component are kept. Keeps a reference to the
/// pattern, which must outlive the table.
class InjectiveConditionTable {
public:
  explicit InjectiveConditionTable(const PatternString& pattern);

  std::size_t pattern_length() const noexcept { return m_; }

  bool injectively_valid(std::size_t k, std::size_t j) const;
  PartnerEntry entry(std::size_t k, std::size_t j) const;

  static constexpr std::int32_t kNone = -1;

  /// Local-numbering accessors for valid entries. Each returns a local index
  /// or kNone.
  std::int32_t variable_constant(std::size_t k, std::size_t j, std::size_t x) const noexcept
  {
    return slots(k, j)[x];
  }
  std::int32_t variable_prime(std::size_t k, std::size_t j, std::size_t x) const noexcept
  {
    return slots(k, j)[variable_count_ + x];
  }
  std::int32_t constant_prime(std::size_t k, std::size_t j, std::size_t c) const noexcept
  {
    return slots(k, j)[2 * variable_count_ + c];
  }
  /// Unprimed partner of a primed prefix variable: the component's constant
  /// when it has one, else its variable. Encoded as a variable index v or as
  /// variable_count + c for constant c.
  std::int32_t prime_partner(std::size_t k, std::size_t j, std::size_t x) const noexcept
  {
    return slots(k, j)[2 * variable_count_ + constant_count_ + x];
  }

private:
  std::size_t index(std::size_t k, std::size_t j) const noexcept { return k * (k - 1) / 2 + j; }
  const std::int32_t* slots(std::size_t k, std::size_t j) const noexcept
  {
    return slots_.data() + index(k, j) * stride_;
  }

  const PatternString*      pattern_;
  std::size_t               m_;
  std::size_t               variable_count_;
  std::size_t               constant_count_;
  std::size_t               stride_;
  std::vector<std::uint8_t> valid_;
  std::vector<std::int32_t> slots_;
};

InjectiveConditionTable build_injective_table(const PatternString& pattern);

/// Bit rows for the PVC failure function. For row k, bit j is
///  v_inj:    G_{k,j} is injectively valid;
///  t[x][p]:  injectively valid, x is not tied to a constant other than p,
///            and x and p are not tied to two different primed variables.
/// The trailing foreign column stands for constants outside the pattern.
class TBitmaps {
public:
  TBitmaps(const PatternString& pattern, const InjectiveConditionTable& table,
           unsigned chunk_width = kMachineWordBits);

  unsigned chunk_width() const noexcept { return v_.chunk_width(); }
  std::size_t foreign_column() const noexcept { return constant_count_; }

  std::span<const BitRows::Word> v_row(std::size_t k) const noexcept { return v_.row(k, 0); }
  std::span<const BitRows::Word> t_row(std::size_t k, std::size_t x, std::size_t column) const noexcept
  {
    return t_.row(k, x * (constant_count_ + 1) + column);
  }

  bool v(std::size_t k, std::size_t j) const noexcept { return v_.test(k, 0, j); }
  bool t(std::size_t k, std::uint32_t variable, std::uint32_t constant, std::size_t j) const;

private:
  const PatternString* pattern_;
  std::size_t          constant_count_;
  BitRows              v_;
  BitRows              t_;
};

TBitmaps build_t_bitmaps(const PatternString& pattern, const InjectiveConditionTable& table,
                         unsigned chunk_width = kMachineWordBits);

/// Extended KMP matcher for PVC-matching.
class PvcMatcher {
public:
  explicit PvcMatcher(PatternString pattern, unsigned chunk_width = kMachineWordBits);

  PvcMatcher(const PvcMatcher&)            = delete;
  PvcMatcher& operator=(const PvcMatcher&) = delete;

  const PatternString& pattern() const noexcept { return pattern_; }
  const InjectiveConditionTable& table() const noexcept { return table_; }
  const TBitmaps& bitmaps() const noexcept { return bitmaps_; }

  /// As FvcMatcher::failure, for an injective preceding function. Throws
  /// std::invalid_argument when `preceding` is not injective or its domain
  /// differs from the prefix variables.
  FailureResult failure(std::size_t k, const Substitution& preceding) const;

  MatchReport match(const TextString& text, bool with_witnesses = false) const;

  struct Scratch {
    std::vector<BitRows::Word> bits;
    std::vector<std::int64_t>  image;
  };

  std::size_t failure_local(std::size_t k, std::vector<std::int64_t>& image, Scratch& scratch) const;

private:
  std::size_t column_of(std::int64_t constant) const noexcept;

  PatternString           pattern_;
  InjectiveConditionTable table_;
  TBitmaps                bitmaps_;
};

FailureResult failure_pvc(const PvcMatcher& matcher, std::size_t k, const Substitution& preceding);

MatchReport match_pvc(const PatternString& pattern, const TextString& text,
                      unsigned chunk_width = kMachineWordBits, bool with_witnesses = false);

}  // namespace vcmatch

#endif  // VCMATCH_KMP_PVC_HPP
