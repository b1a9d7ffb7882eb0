// SPDX-License-Identifier: Apache-2.0

#ifndef VCMATCH_MATCH_REPORT_HPP
#define VCMATCH_MATCH_REPORT_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "vcmatch/substitution.hpp"

namespace vcmatch {

/// Result of a matching pass: 1-based start positions in increasing order,
/// plus a witness substitution per position when requested. Witnesses are
/// restricted to the variables that occur in the pattern.
struct MatchReport {
  std::vector<std::size_t>              positions;
  std::map<std::size_t, Substitution>   witnesses;

  friend bool operator==(const MatchReport&, const MatchReport&) = default;
};

}  // namespace vcmatch

#endif  // VCMATCH_MATCH_REPORT_HPP
