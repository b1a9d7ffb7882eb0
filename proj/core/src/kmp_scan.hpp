// SPDX-License-Identifier: Apache-2.0

#ifndef VCMATCH_SRC_KMP_SCAN_HPP
#define VCMATCH_SRC_KMP_SCAN_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "vcmatch/match_report.hpp"
#include "vcmatch/substitution.hpp"
#include "vcmatch/symbols.hpp"

namespace vcmatch::detail {

inline constexpr std::int64_t kUnbound = -1;

/// Pattern symbols renumbered by first appearance within the pattern.
inline std::vector<Symbol> local_symbols(const PatternString& pattern)
{
  std::vector<Symbol> out;
  out.reserve(pattern.size());
  for (const Symbol s : pattern.symbols()) {
    const auto local = s.is_variable() ? *pattern.variable_index(s.id) : *pattern.constant_index(s.id);
    out.push_back({s.kind, static_cast<std::uint32_t>(local)});
  }
  return out;
}

/// Dense image indexed by local variable number. The domain of `pi` must be
/// exactly the variables of the prefix of length k.
inline std::vector<std::int64_t> image_from(const PatternString& pattern, std::size_t k,
                                            const Substitution& pi)
{
  if (k < 1 || k > pattern.size()) throw std::invalid_argument("prefix length out of range");
  const std::size_t bound = pattern.variables_in_prefix(k);
  if (pi.size() != bound) throw std::invalid_argument("substitution domain differs from prefix variables");

  std::vector<std::int64_t> image(pattern.variables().size(), kUnbound);
  for (const auto& [variable, constant] : pi.bindings()) {
    const auto local = pattern.variable_index(variable);
    if (!local || *local >= bound)
      throw std::invalid_argument("substitution domain differs from prefix variables");
    image[*local] = constant;
  }
  return image;
}

inline Substitution substitution_from(const PatternString& pattern, const std::vector<std::int64_t>& image)
{
  Substitution pi;
  const auto   variables = pattern.variables();
  for (std::size_t v = 0; v < image.size(); ++v)
    if (image[v] != kUnbound) pi.extend(variables[v], static_cast<std::uint32_t>(image[v]), false);
  return pi;
}

/// KMP-style scan shared by both extended matchers. `failure(k, image)`
/// rewrites `image` to the succeeding function and returns the shift.
template <class Failure>
MatchReport kmp_scan(const PatternString& pattern, const TextString& text, bool injective,
                     bool with_witnesses, Failure&& failure)
{
  MatchReport       report;
  const std::size_t m = pattern.size();
  const std::size_t n = text.size();
  if (m > n) return report;

  // Local variable numbers for each pattern position, -1 for constants.
  std::vector<std::int64_t> local(m, -1);
  for (std::size_t j = 0; j < m; ++j)
    if (pattern[j].is_variable()) local[j] = static_cast<std::int64_t>(*pattern.variable_index(pattern[j].id));

  std::vector<std::int64_t> image(pattern.variables().size(), kUnbound);
  // owner[c] = local variable bound to constant c; only maintained for PVC.
  std::vector<std::int64_t> owner(injective ? text.id_bound() : 0, kUnbound);

  auto rebuild_owner = [&] {
    std::fill(owner.begin(), owner.end(), kUnbound);
    for (std::size_t v = 0; v < image.size(); ++v)
      if (image[v] != kUnbound) owner[static_cast<std::size_t>(image[v])] = static_cast<std::int64_t>(v);
  };

  auto shift = [&](std::size_t k) {
    const std::size_t j = failure(k, image);
    if (injective) rebuild_owner();
    return j;
  };

  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t c = text[i];
    for (;;) {
      bool advance;
      if (local[k] < 0) {
        advance = pattern[k].id == c;
      } else {
        auto& bound = image[static_cast<std::size_t>(local[k])];
        if (bound != kUnbound) {
          advance = bound == c;
        } else if (injective && owner[c] != kUnbound) {
          advance = false;
        } else {
          bound = c;
          if (injective) owner[c] = local[k];
          advance = true;
        }
      }
      if (advance) {
        ++k;
        break;
      }
      if (k == 0) break;
      k = shift(k);
    }

    if (k == m) {
      const std::size_t position = i + 2 - m;
      report.positions.push_back(position);
      if (with_witnesses) report.witnesses.emplace(position, substitution_from(pattern, image));
      k = shift(m);
    }
  }
  return report;
}

}  // namespace vcmatch::detail

#endif  // VCMATCH_SRC_KMP_SCAN_HPP
