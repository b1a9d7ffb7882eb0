// SPDX-License-Identifier: Apache-2.0

#ifndef VCMATCH_ORACLE_HPP
#define VCMATCH_ORACLE_HPP

#include <cstddef>
#include <optional>

#include "vcmatch/match_report.hpp"
#include "vcmatch/substitution.hpp"
#include "vcmatch/symbols.hpp"

namespace vcmatch {

/// Decides whether `pattern` matches the window of `text` starting at the
/// 1-based position `start`, binding variables greedily from left to right.
/// Each variable's image is forced by its first occurrence, so the greedy
/// binding fails only if no substitution exists.
///
/// Returns the witness on success. Throws std::out_of_range when the window
/// does not fit in the text.
std::optional<Substitution> window_match(const PatternString& pattern, const TextString& text,
                                         std::size_t start, MatchMode mode);

/// All 1-based positions where `pattern` matches, by checking every window.
MatchReport naive_all(const PatternString& pattern, const TextString& text, MatchMode mode,
                      bool with_witnesses = false);

}  // namespace vcmatch

#endif  // VCMATCH_ORACLE_HPP
