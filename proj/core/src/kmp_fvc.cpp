// SPDX-License-Identifier: Apache-2.0

#include "vcmatch/kmp_fvc.hpp"

#include <algorithm>
#include <stdexcept>

#include "kmp_scan.hpp"

namespace vcmatch {

namespace {

Symbol to_global(const PatternString& pattern, Symbol local)
{
  return local.is_variable() ? Symbol::variable(pattern.variables()[local.id])
                             : Symbol::constant(pattern.constants()[local.id]);
}

void check_entry_index(std::size_t m, std::size_t k, std::size_t j)
{
  if (k < 1 || k > m || j >= k) throw std::out_of_range("shifting table index out of range");
}

}  // namespace

// ---------------------------------------------------------------------------
// ConditionState

ConditionState::ConditionState(std::size_t variable_count)
    : representative_(variable_count), members_(variable_count), prime_anchor_(variable_count)
{
  reset();
}

void ConditionState::reset()
{
  for (std::size_t v = 0; v < representative_.size(); ++v) {
    representative_[v] = Symbol::variable(static_cast<std::uint32_t>(v));
    members_[v].assign(1, static_cast<std::uint32_t>(v));
    prime_anchor_[v].reset();
  }
}

Symbol ConditionState::representative(Symbol node) const
{
  return node.is_constant() ? node : representative_.at(node.id);
}

std::span<const std::uint32_t> ConditionState::members(std::uint32_t variable) const
{
  return members_.at(variable);
}

std::optional<Symbol> ConditionState::prime_anchor(std::uint32_t variable) const
{
  return prime_anchor_.at(variable);
}

Validity ConditionState::add_condition(Symbol a, Symbol b)
{
  const Symbol ra = representative(a);
  const Symbol rb = representative(b);
  if (ra == rb) return Validity::valid;
  if (ra.is_constant() && rb.is_constant()) return Validity::invalid;

  Symbol winner;
  Symbol loser;
  if (ra.is_constant() || rb.is_constant()) {
    winner = ra.is_constant() ? ra : rb;
    loser  = ra.is_constant() ? rb : ra;
  } else {
    winner = std::min(ra, rb);
    loser  = std::max(ra, rb);
  }

  auto& moved = members_[loser.id];
  for (const std::uint32_t z : moved) representative_[z] = winner;
  if (winner.is_variable()) {
    auto& kept = members_[winner.id];
    kept.insert(kept.end(), moved.begin(), moved.end());
  }
  moved.clear();
  return Validity::valid;
}

Validity ConditionState::add_edge(Symbol suffix_symbol, Symbol prefix_symbol)
{
  if (prefix_symbol.is_constant()) return add_condition(prefix_symbol, suffix_symbol);

  auto& anchor = prime_anchor_[prefix_symbol.id];
  if (!anchor) {
    anchor = suffix_symbol;
    return Validity::valid;
  }
  if (*anchor == suffix_symbol) return Validity::valid;
  return add_condition(*anchor, suffix_symbol);
}

// ---------------------------------------------------------------------------
// ShiftingConditionTable

ShiftingConditionTable::ShiftingConditionTable(const PatternString& pattern)
    : pattern_(&pattern), m_(pattern.size()), variable_count_(pattern.variables().size())
{
  const std::size_t entries = m_ * (m_ + 1) / 2;
  valid_.assign(entries, 0);
  representative_.assign(entries * variable_count_, -1);
  prime_anchor_.assign(entries * variable_count_, -1);

  const std::vector<Symbol> symbols = detail::local_symbols(pattern);
  ConditionState            state(variable_count_);

  for (std::size_t shift = 1; shift <= m_; ++shift) {
    state.reset();
    for (std::size_t j = 0; shift + j <= m_; ++j) {
      const std::size_t k = shift + j;
      if (j > 0 && state.add_edge(symbols[k - 1], symbols[j - 1]) == Validity::invalid) break;

      const std::size_t at = index(k, j);
      valid_[at]           = 1;
      for (std::size_t v = 0; v < variable_count_; ++v) {
        const auto x      = static_cast<std::uint32_t>(v);
        const auto anchor = state.prime_anchor(x);
        representative_[at * variable_count_ + v] = encode(state.representative(Symbol::variable(x)));
        prime_anchor_[at * variable_count_ + v]   = anchor ? encode(*anchor) : -1;
      }
    }
  }
}

std::int32_t ShiftingConditionTable::encode(Symbol local) const noexcept
{
  return static_cast<std::int32_t>(local.is_variable() ? local.id : variable_count_ + local.id);
}

Symbol ShiftingConditionTable::decode(std::int32_t code) const noexcept
{
  const auto c = static_cast<std::uint32_t>(code);
  return c < variable_count_ ? Symbol::variable(c)
                             : Symbol::constant(c - static_cast<std::uint32_t>(variable_count_));
}

bool ShiftingConditionTable::valid(std::size_t k, std::size_t j) const
{
  check_entry_index(m_, k, j);
  return valid_[index(k, j)] != 0;
}

Symbol ShiftingConditionTable::representative(std::size_t k, std::size_t j, std::size_t variable) const noexcept
{
  return decode(representative_[index(k, j) * variable_count_ + variable]);
}

std::optional<Symbol> ShiftingConditionTable::prime_anchor(std::size_t k, std::size_t j,
                                                           std::size_t variable) const noexcept
{
  const std::int32_t code = prime_anchor_[index(k, j) * variable_count_ + variable];
  if (code < 0) return std::nullopt;
  return decode(code);
}

ConditionEntry ShiftingConditionTable::entry(std::size_t k, std::size_t j) const
{
  ConditionEntry out;
  out.valid = valid(k, j);
  if (!out.valid) return out;

  const PatternString& p         = *pattern_;
  const auto           variables = p.variables();

  std::vector<bool> in_suffix(variable_count_, false);
  for (std::size_t pos = k - j; pos < k; ++pos)
    if (p[pos].is_variable()) in_suffix[*p.variable_index(p[pos].id)] = true;

  for (std::size_t v = 0; v < variable_count_; ++v) {
    if (in_suffix[v]) {
      const Symbol rep = representative(k, j, v);
      out.representative.emplace(variables[v], to_global(p, rep));
      if (rep.is_variable()) out.members[variables[rep.id]].push_back(variables[v]);
    }
    if (const auto anchor = prime_anchor(k, j, v)) out.prime_anchor.emplace(variables[v], to_global(p, *anchor));
  }
  for (auto& [rep, members] : out.members) std::sort(members.begin(), members.end());
  return out;
}

ShiftingConditionTable build_table(const PatternString& pattern)
{
  return ShiftingConditionTable(pattern);
}

// ---------------------------------------------------------------------------
// FvcBitmaps

FvcBitmaps::FvcBitmaps(const PatternString& pattern, const ShiftingConditionTable& table, unsigned chunk_width)
    : pattern_(&pattern),
      variable_count_(pattern.variables().size()),
      constant_count_(pattern.constants().size()),
      v_(pattern.size(), 1, chunk_width),
      r_(pattern.size(), variable_count_ * (constant_count_ + 1), chunk_width),
      s_(pattern.size(), variable_count_ * variable_count_, chunk_width)
{
  const std::size_t m       = pattern.size();
  const std::size_t columns = constant_count_ + 1;
  for (std::size_t k = 1; k <= m; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (!table.valid(k, j)) continue;
      v_.set(k, 0, j);
      for (std::size_t x = 0; x < variable_count_; ++x) {
        const Symbol rep = table.representative(k, j, x);
        if (rep.is_constant()) {
          r_.set(k, x * columns + rep.id, j);
        } else {
          for (std::size_t c = 0; c < columns; ++c) r_.set(k, x * columns + c, j);
        }
        for (std::size_t y = 0; y < variable_count_; ++y)
          if (!(rep.is_variable() && rep.id == y)) s_.set(k, x * variable_count_ + y, j);
      }
    }
  }
}

bool FvcBitmaps::r(std::size_t k, std::uint32_t variable, std::uint32_t constant, std::size_t j) const
{
  const auto x = pattern_->variable_index(variable);
  if (!x) throw std::invalid_argument("variable does not occur in the pattern");
  const std::size_t column = pattern_->constant_index(constant).value_or(foreign_column());
  return r_.test(k, *x * (constant_count_ + 1) + column, j);
}

bool FvcBitmaps::s(std::size_t k, std::uint32_t x, std::uint32_t y, std::size_t j) const
{
  const auto lx = pattern_->variable_index(x);
  const auto ly = pattern_->variable_index(y);
  if (!lx || !ly) throw std::invalid_argument("variable does not occur in the pattern");
  return s_.test(k, *lx * variable_count_ + *ly, j);
}

FvcBitmaps build_bitmaps(const PatternString& pattern, const ShiftingConditionTable& table, unsigned chunk_width)
{
  return FvcBitmaps(pattern, table, chunk_width);
}

// ---------------------------------------------------------------------------
// FvcMatcher

FvcMatcher::FvcMatcher(PatternString pattern, unsigned chunk_width)
    : pattern_(std::move(pattern)), table_(pattern_), bitmaps_(pattern_, table_, chunk_width)
{
}

std::size_t FvcMatcher::column_of(std::int64_t constant) const noexcept
{
  return pattern_.constant_index(static_cast<std::uint32_t>(constant)).value_or(bitmaps_.foreign_column());
}

std::size_t FvcMatcher::failure_local(std::size_t k, std::vector<std::int64_t>& image, Scratch& scratch) const
{
  const auto v_row = bitmaps_.v_row(k);
  auto&      bits  = scratch.bits;
  bits.assign(v_row.begin(), v_row.end());

  const std::size_t bound = pattern_.variables_in_prefix(k);
  for (std::size_t x = 0; x < bound; ++x) and_into(bits, bitmaps_.r_row(k, x, column_of(image[x])));
  for (std::size_t x = 0; x < bound; ++x)
    for (std::size_t y = 0; y < bound; ++y)
      if (x != y && image[x] != image[y]) and_into(bits, bitmaps_.s_row(k, x, y));

  // Bit 0 always survives: the empty shift imposes no condition.
  const std::size_t j = highest_set_bit(bits, bitmaps_.chunk_width()).value_or(0);

  auto& next = scratch.image;
  next.assign(image.size(), detail::kUnbound);
  const std::size_t next_bound = pattern_.variables_in_prefix(j);
  for (std::size_t x = 0; x < next_bound; ++x) {
    const Symbol anchor = *table_.prime_anchor(k, j, x);
    next[x]             = anchor.is_constant() ? pattern_.constants()[anchor.id] : image[anchor.id];
  }
  image.swap(next);
  return j;
}

FailureResult FvcMatcher::failure(std::size_t k, const Substitution& preceding) const
{
  std::vector<std::int64_t> image = detail::image_from(pattern_, k, preceding);
  Scratch                   scratch;
  const std::size_t         j = failure_local(k, image, scratch);
  return {j, detail::substitution_from(pattern_, image)};
}

MatchReport FvcMatcher::match(const TextString& text, bool with_witnesses) const
{
  Scratch scratch;
  return detail::kmp_scan(pattern_, text, false, with_witnesses,
                          [&](std::size_t k, std::vector<std::int64_t>& image) {
                            return failure_local(k, image, scratch);
                          });
}

FailureResult failure_fvc(const FvcMatcher& matcher, std::size_t k, const Substitution& preceding)
{
  return matcher.failure(k, preceding);
}

MatchReport match_fvc(const PatternString& pattern, const TextString& text, unsigned chunk_width,
                      bool with_witnesses)
{
  if (pattern.size() > text.size()) return {};
  return FvcMatcher(pattern, chunk_width).match(text, with_witnesses);
}

}  // namespace vcmatch
