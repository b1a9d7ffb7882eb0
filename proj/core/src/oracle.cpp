// SPDX-License-Identifier: Apache-2.0

#include "vcmatch/oracle.hpp"

#include <stdexcept>
#include <string>

namespace vcmatch {

std::optional<Substitution> window_match(const PatternString& pattern, const TextString& text,
                                         std::size_t start, MatchMode mode)
{
  const std::size_t m = pattern.size();
  if (start < 1 || m > text.size() || start > text.size() - m + 1)
    throw std::out_of_range("window start " + std::to_string(start) + " out of range");

  const bool   injective = is_injective(mode);
  Substitution pi;
  for (std::size_t j = 0; j < m; ++j) {
    const Symbol        p = pattern[j];
    const std::uint32_t t = text[start - 1 + j];
    if (p.is_constant()) {
      if (p.id != t) return std::nullopt;
    } else if (pi.extend(p.id, t, injective) == ExtendResult::conflict) {
      return std::nullopt;
    }
  }
  return pi;
}

MatchReport naive_all(const PatternString& pattern, const TextString& text, MatchMode mode,
                      bool with_witnesses)
{
  MatchReport report;
  if (pattern.size() > text.size()) return report;
  const std::size_t last = text.size() - pattern.size() + 1;
  for (std::size_t i = 1; i <= last; ++i) {
    auto witness = window_match(pattern, text, i, mode);
    if (!witness) continue;
    report.positions.push_back(i);
    if (with_witnesses) report.witnesses.emplace(i, std::move(*witness));
  }
  return report;
}

}  // namespace vcmatch
