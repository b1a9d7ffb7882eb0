// SPDX-License-Identifier: Apache-2.0

#include "vcmatch/kmp_pvc.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "kmp_scan.hpp"

namespace vcmatch {

namespace {

// Components of an injectively valid shifting graph hold at most one node
// per class. Node numbering: variable v -> v, primed v -> V + v,
// constant c -> 2V + c.
class PartnerState {
public:
  PartnerState(std::size_t variables, std::size_t constants)
      : variables_(variables), constants_(constants), component_(2 * variables + constants),
        slots_(component_.size())
  {
    reset();
  }

  void reset()
  {
    std::iota(component_.begin(), component_.end(), std::size_t{0});
    for (std::size_t node = 0; node < slots_.size(); ++node) {
      slots_[node] = {};
      if (node < variables_) {
        slots_[node].variable = static_cast<std::int32_t>(node);
      } else if (node < 2 * variables_) {
        slots_[node].prime = static_cast<std::int32_t>(node - variables_);
      } else {
        slots_[node].constant = static_cast<std::int32_t>(node - 2 * variables_);
      }
    }
  }

  // Edge between suffix symbol P[k] and the primed prefix symbol P'[j]; both
  // in local numbering.
  bool add_edge(Symbol suffix_symbol, Symbol prefix_symbol)
  {
    const std::size_t u = suffix_symbol.is_variable() ? suffix_symbol.id : 2 * variables_ + suffix_symbol.id;
    const std::size_t w =
        prefix_symbol.is_variable() ? variables_ + prefix_symbol.id : 2 * variables_ + prefix_symbol.id;
    if (u == w) return true;
    return merge(component_[u], component_[w]);
  }

  struct Slots {
    std::int32_t constant = InjectiveConditionTable::kNone;
    std::int32_t variable = InjectiveConditionTable::kNone;
    std::int32_t prime    = InjectiveConditionTable::kNone;
  };

  const Slots& of_variable(std::size_t x) const { return slots_[component_[x]]; }
  const Slots& of_prime(std::size_t x) const { return slots_[component_[variables_ + x]]; }
  const Slots& of_constant(std::size_t c) const { return slots_[component_[2 * variables_ + c]]; }

private:
  bool merge(std::size_t into, std::size_t from)
  {
    if (into == from) return true;
    Slots&       a = slots_[into];
    const Slots& b = slots_[from];
    if ((a.constant >= 0 && b.constant >= 0) || (a.variable >= 0 && b.variable >= 0)
        || (a.prime >= 0 && b.prime >= 0))
      return false;

    if (b.constant >= 0) {
      a.constant                                                      = b.constant;
      component_[2 * variables_ + static_cast<std::size_t>(b.constant)] = into;
    }
    if (b.variable >= 0) {
      a.variable                                         = b.variable;
      component_[static_cast<std::size_t>(b.variable)] = into;
    }
    if (b.prime >= 0) {
      a.prime                                                    = b.prime;
      component_[variables_ + static_cast<std::size_t>(b.prime)] = into;
    }
    return true;
  }

  std::size_t              variables_;
  std::size_t              constants_;
  std::vector<std::size_t> component_;
  std::vector<Slots>       slots_;
};

}  // namespace

// ---------------------------------------------------------------------------
// InjectiveConditionTable

InjectiveConditionTable::InjectiveConditionTable(const PatternString& pattern)
    : pattern_(&pattern),
      m_(pattern.size()),
      variable_count_(pattern.variables().size()),
      constant_count_(pattern.constants().size()),
      stride_(3 * variable_count_ + constant_count_)
{
  const std::size_t entries = m_ * (m_ + 1) / 2;
  valid_.assign(entries, 0);
  slots_.assign(entries * stride_, kNone);

  const std::vector<Symbol> symbols = detail::local_symbols(pattern);
  PartnerState              state(variable_count_, constant_count_);
  const auto                V = static_cast<std::int32_t>(variable_count_);

  for (std::size_t shift = 1; shift <= m_; ++shift) {
    state.reset();
    for (std::size_t j = 0; shift + j <= m_; ++j) {
      const std::size_t k = shift + j;
      if (j > 0 && !state.add_edge(symbols[k - 1], symbols[j - 1])) break;

      const std::size_t at = index(k, j);
      valid_[at]           = 1;
      std::int32_t* out    = slots_.data() + at * stride_;
      for (std::size_t x = 0; x < variable_count_; ++x) {
        out[x]                   = state.of_variable(x).constant;
        out[variable_count_ + x] = state.of_variable(x).prime;
      }
      for (std::size_t c = 0; c < constant_count_; ++c) out[2 * variable_count_ + c] = state.of_constant(c).prime;
      for (std::size_t x = 0; x < variable_count_; ++x) {
        const auto& slots = state.of_prime(x);
        std::int32_t partner = kNone;
        if (slots.constant >= 0) {
          partner = V + slots.constant;
        } else if (slots.variable >= 0) {
          partner = slots.variable;
        }
        out[2 * variable_count_ + constant_count_ + x] = partner;
      }
    }
  }
}

bool InjectiveConditionTable::injectively_valid(std::size_t k, std::size_t j) const
{
  if (k < 1 || k > m_ || j >= k) throw std::out_of_range("shifting table index out of range");
  return valid_[index(k, j)] != 0;
}

PartnerEntry InjectiveConditionTable::entry(std::size_t k, std::size_t j) const
{
  PartnerEntry out;
  out.injectively_valid = injectively_valid(k, j);
  if (!out.injectively_valid) return out;

  const PatternString& p = *pattern_;
  const std::size_t    V = variable_count_;
  const std::size_t    C = constant_count_;

  // Rebuild components from the stored slots with a throwaway union-find.
  std::vector<std::size_t> parent(2 * V + C);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };

  for (std::size_t x = 0; x < V; ++x) {
    if (const auto c = variable_constant(k, j, x); c >= 0) unite(x, 2 * V + static_cast<std::size_t>(c));
    if (const auto q = variable_prime(k, j, x); q >= 0) unite(x, V + static_cast<std::size_t>(q));
    if (const auto partner = prime_partner(k, j, x); partner >= 0) {
      const auto node = static_cast<std::size_t>(partner) < V ? static_cast<std::size_t>(partner)
                                                               : 2 * V + (static_cast<std::size_t>(partner) - V);
      unite(V + x, node);
    }
  }
  for (std::size_t c = 0; c < C; ++c)
    if (const auto q = constant_prime(k, j, c); q >= 0) unite(2 * V + c, V + static_cast<std::size_t>(q));

  auto to_node = [&](std::size_t node) -> GraphNode {
    if (node < V) return {NodeClass::variable, p.variables()[node]};
    if (node < 2 * V) return {NodeClass::primed, p.variables()[node - V]};
    return {NodeClass::constant, p.constants()[node - 2 * V]};
  };

  for (std::size_t a = 0; a < parent.size(); ++a) {
    std::vector<GraphNode> others;
    for (std::size_t b = 0; b < parent.size(); ++b)
      if (a != b && find(a) == find(b)) others.push_back(to_node(b));
    if (others.empty()) continue;
    std::sort(others.begin(), others.end());
    out.partners.emplace(to_node(a), std::move(others));
  }
  return out;
}

InjectiveConditionTable build_injective_table(const PatternString& pattern)
{
  return InjectiveConditionTable(pattern);
}

// ---------------------------------------------------------------------------
// TBitmaps

TBitmaps::TBitmaps(const PatternString& pattern, const InjectiveConditionTable& table, unsigned chunk_width)
    : pattern_(&pattern),
      constant_count_(pattern.constants().size()),
      v_(pattern.size(), 1, chunk_width),
      t_(pattern.size(), pattern.variables().size() * (constant_count_ + 1), chunk_width)
{
  const std::size_t m       = pattern.size();
  const std::size_t V       = pattern.variables().size();
  const std::size_t columns = constant_count_ + 1;
  for (std::size_t k = 1; k <= m; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (!table.injectively_valid(k, j)) continue;
      v_.set(k, 0, j);
      for (std::size_t x = 0; x < V; ++x) {
        const std::int32_t tied_constant = table.variable_constant(k, j, x);
        const std::int32_t tied_prime    = table.variable_prime(k, j, x);
        for (std::size_t column = 0; column < columns; ++column) {
          if (tied_constant >= 0 && static_cast<std::size_t>(tied_constant) != column) continue;
          if (tied_prime >= 0 && column < constant_count_) {
            const std::int32_t other = table.constant_prime(k, j, column);
            if (other >= 0 && other != tied_prime) continue;
          }
          t_.set(k, x * columns + column, j);
        }
      }
    }
  }
}

bool TBitmaps::t(std::size_t k, std::uint32_t variable, std::uint32_t constant, std::size_t j) const
{
  const auto x = pattern_->variable_index(variable);
  if (!x) throw std::invalid_argument("variable does not occur in the pattern");
  const std::size_t column = pattern_->constant_index(constant).value_or(foreign_column());
  return t_.test(k, *x * (constant_count_ + 1) + column, j);
}

TBitmaps build_t_bitmaps(const PatternString& pattern, const InjectiveConditionTable& table, unsigned chunk_width)
{
  return TBitmaps(pattern, table, chunk_width);
}

// ---------------------------------------------------------------------------
// PvcMatcher

PvcMatcher::PvcMatcher(PatternString pattern, unsigned chunk_width)
    : pattern_(std::move(pattern)), table_(pattern_), bitmaps_(pattern_, table_, chunk_width)
{
}

std::size_t PvcMatcher::column_of(std::int64_t constant) const noexcept
{
  return pattern_.constant_index(static_cast<std::uint32_t>(constant)).value_or(bitmaps_.foreign_column());
}

std::size_t PvcMatcher::failure_local(std::size_t k, std::vector<std::int64_t>& image, Scratch& scratch) const
{
  const auto v_row = bitmaps_.v_row(k);
  auto&      bits  = scratch.bits;
  bits.assign(v_row.begin(), v_row.end());

  const std::size_t bound = pattern_.variables_in_prefix(k);
  for (std::size_t x = 0; x < bound; ++x) and_into(bits, bitmaps_.t_row(k, x, column_of(image[x])));

  const std::size_t j = highest_set_bit(bits, bitmaps_.chunk_width()).value_or(0);

  const auto V    = static_cast<std::int32_t>(pattern_.variables().size());
  auto&      next = scratch.image;
  next.assign(image.size(), detail::kUnbound);
  const std::size_t next_bound = pattern_.variables_in_prefix(j);
  for (std::size_t x = 0; x < next_bound; ++x) {
    const std::int32_t partner = table_.prime_partner(k, j, x);
    next[x] = partner >= V ? pattern_.constants()[static_cast<std::size_t>(partner - V)]
                           : image[static_cast<std::size_t>(partner)];
  }
  image.swap(next);
  return j;
}

FailureResult PvcMatcher::failure(std::size_t k, const Substitution& preceding) const
{
  if (!preceding.is_injective()) throw std::invalid_argument("preceding function must be injective");
  std::vector<std::int64_t> image = detail::image_from(pattern_, k, preceding);
  Scratch                   scratch;
  const std::size_t         j = failure_local(k, image, scratch);
  return {j, detail::substitution_from(pattern_, image)};
}

MatchReport PvcMatcher::match(const TextString& text, bool with_witnesses) const
{
  Scratch scratch;
  return detail::kmp_scan(pattern_, text, true, with_witnesses,
                          [&](std::size_t k, std::vector<std::int64_t>& image) {
                            return failure_local(k, image, scratch);
                          });
}

FailureResult failure_pvc(const PvcMatcher& matcher, std::size_t k, const Substitution& preceding)
{
  return matcher.failure(k, preceding);
}

MatchReport match_pvc(const PatternString& pattern, const TextString& text, unsigned chunk_width,
                      bool with_witnesses)
{
  if (pattern.size() > text.size()) return {};
  return PvcMatcher(pattern, chunk_width).match(text, with_witnesses);
}

}  // namespace vcmatch
