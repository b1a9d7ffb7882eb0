// SPDX-License-Identifier: Apache-2.0

#ifndef VCMATCH_KMP_FVC_HPP
#define VCMATCH_KMP_FVC_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "vcmatch/bit_rows.hpp"
#include "vcmatch/match_report.hpp"
#include "vcmatch/shifting_graph.hpp"
#include "vcmatch/substitution.hpp"
#include "vcmatch/symbols.hpp"

namespace vcmatch {

/// Component summary of one shifting graph, in global ids.
///
/// Every component has a representative: its constant if it holds one,
/// otherwise its least variable. `representative` maps each suffix variable
/// to the representative of its component; `prime_anchor` maps each primed
/// prefix variable to some unprimed node of its component; `members` is the
/// inverse of `representative` restricted to variable representatives.
/// All three are empty for invalid entries.
struct ConditionEntry {
  bool                                                valid = false;
  std::map<std::uint32_t, Symbol>                     representative;
  std::map<std::uint32_t, Symbol>                     prime_anchor;
  std::map<std::uint32_t, std::vector<std::uint32_t>> members;
};

/// Mutable component state for one chain of shifting graphs. Nodes use the
/// pattern's local numbering: Symbol::variable(v) is the v-th distinct
/// variable of the pattern and Symbol::constant(c) its c-th distinct constant.
class ConditionState {
public:
  explicit ConditionState(std::size_t variable_count);

  /// Resets to the edgeless graph.
  void reset();

  /// Connects the components of `a` and `b`. Returns invalid iff that joins
  /// two distinct constants, in which case the state is unspecified.
  Validity add_condition(Symbol a, Symbol b);

  /// Adds the edge between the suffix symbol and the primed copy of the
  /// prefix symbol (a constant prefix symbol stands for itself).
  Validity add_edge(Symbol suffix_symbol, Symbol prefix_symbol);

  /// Constants are their own representatives.
  Symbol representative(Symbol node) const;
  std::span<const std::uint32_t> members(std::uint32_t variable) const;
  std::optional<Symbol> prime_anchor(std::uint32_t variable) const;

private:
  std::vector<Symbol>                     representative_;
  std::vector<std::vector<std::uint32_t>> members_;
  std::vector<std::optional<Symbol>>      prime_anchor_;
};

/// Condition entries for all 0 <= j < k <= m. Entry (k, j) extends
/// (k-1, j-1) by a single edge, so each diagonal k - j = d is built as one
/// incremental chain. Keeps a reference to the pattern, which must outlive
/// the table.
class ShiftingConditionTable {
public:
  explicit ShiftingConditionTable(const PatternString& pattern);

  std::size_t pattern_length() const noexcept { return m_; }
  std::size_t variable_count() const noexcept { return variable_count_; }

  bool valid(std::size_t k, std::size_t j) const;
  ConditionEntry entry(std::size_t k, std::size_t j) const;

  /// Local-numbering accessors; only meaningful for valid entries.
  Symbol representative(std::size_t k, std::size_t j, std::size_t variable) const noexcept;
  std::optional<Symbol> prime_anchor(std::size_t k, std::size_t j, std::size_t variable) const noexcept;

private:
  std::size_t index(std::size_t k, std::size_t j) const noexcept { return k * (k - 1) / 2 + j; }
  std::int32_t encode(Symbol local) const noexcept;
  Symbol decode(std::int32_t code) const noexcept;

  const PatternString*      pattern_;
  std::size_t               m_;
  std::size_t               variable_count_;
  std::vector<std::uint8_t> valid_;
  std::vector<std::int32_t> representative_;  // variable_count_ codes per entry
  std::vector<std::int32_t> prime_anchor_;    // variable_count_ codes per entry, -1 if unset
};

ShiftingConditionTable build_table(const PatternString& pattern);

/// Bit rows for the FVC failure function. For row k, bit j is
///  v:              G_{k,j} is valid;
///  r[x][p]:        valid, and x is not tied to a constant other than p;
///  s[x][y]:        valid, and the representative of x is not y.
/// Columns p cover the pattern's constants plus one trailing "foreign" column
/// for constants that do not occur in the pattern.
class FvcBitmaps {
public:
  FvcBitmaps(const PatternString& pattern, const ShiftingConditionTable& table,
             unsigned chunk_width = kMachineWordBits);

  unsigned chunk_width() const noexcept { return v_.chunk_width(); }
  std::size_t foreign_column() const noexcept { return constant_count_; }
  std::size_t words(std::size_t k) const noexcept { return v_.words(k); }

  std::span<const BitRows::Word> v_row(std::size_t k) const noexcept { return v_.row(k, 0); }
  std::span<const BitRows::Word> r_row(std::size_t k, std::size_t x, std::size_t column) const noexcept
  {
    return r_.row(k, x * (constant_count_ + 1) + column);
  }
  std::span<const BitRows::Word> s_row(std::size_t k, std::size_t x, std::size_t y) const noexcept
  {
    return s_.row(k, x * variable_count_ + y);
  }

  /// Bit queries in global ids; a constant outside the pattern selects the
  /// foreign column.
  bool v(std::size_t k, std::size_t j) const noexcept { return v_.test(k, 0, j); }
  bool r(std::size_t k, std::uint32_t variable, std::uint32_t constant, std::size_t j) const;
  bool s(std::size_t k, std::uint32_t x, std::uint32_t y, std::size_t j) const;

private:
  const PatternString* pattern_;
  std::size_t          variable_count_;
  std::size_t          constant_count_;
  BitRows              v_;
  BitRows              r_;
  BitRows              s_;
};

FvcBitmaps build_bitmaps(const PatternString& pattern, const ShiftingConditionTable& table,
                         unsigned chunk_width = kMachineWordBits);

/// Extended KMP matcher for FVC-matching. Preprocessing is done once in the
/// constructor; match() and failure() are const and may run concurrently.
class FvcMatcher {
public:
  explicit FvcMatcher(PatternString pattern, unsigned chunk_width = kMachineWordBits);

  FvcMatcher(const FvcMatcher&)            = delete;
  FvcMatcher& operator=(const FvcMatcher&) = delete;

  const PatternString& pattern() const noexcept { return pattern_; }
  const ShiftingConditionTable& table() const noexcept { return table_; }
  const FvcBitmaps& bitmaps() const noexcept { return bitmaps_; }

  /// Longest shift after a mismatch following a matched prefix of length k
  /// under `preceding`, whose domain must be exactly the variables of that
  /// prefix. Throws std::invalid_argument otherwise.
  FailureResult failure(std::size_t k, const Substitution& preceding) const;

  MatchReport match(const TextString& text, bool with_witnesses = false) const;

  struct Scratch {
    std::vector<BitRows::Word> bits;
    std::vector<std::int64_t>  image;
  };

  /// Fast path on dense images indexed by local variable (-1 = unbound).
  /// Rewrites `image` to the succeeding function and returns the shift.
  std::size_t failure_local(std::size_t k, std::vector<std::int64_t>& image, Scratch& scratch) const;

private:
  std::size_t column_of(std::int64_t constant) const noexcept;

  PatternString          pattern_;
  ShiftingConditionTable table_;
  FvcBitmaps             bitmaps_;
};

FailureResult failure_fvc(const FvcMatcher& matcher, std::size_t k, const Substitution& preceding);

MatchReport match_fvc(const PatternString& pattern, const TextString& text,
                      unsigned chunk_width = kMachineWordBits, bool with_witnesses = false);

}  // namespace vcmatch

#endif  // VCMATCH_KMP_FVC_HPP
