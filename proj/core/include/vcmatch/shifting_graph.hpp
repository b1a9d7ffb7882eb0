// SPDX-License-Identifier: Apache-2.0

#ifndef VCMATCH_SHIFTING_GRAPH_HPP
#define VCMATCH_SHIFTING_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <cstdint>

#include "vcmatch/substitution.hpp"

namespace vcmatch {

// For a prefix length k and a candidate shift j < k, the (k, j)-shifting
// graph links each symbol of the suffix P[k-j+1..k] with the aligned symbol
// of the prefix P[1..j], where prefix variables are renamed to primed copies
// so they are distinct from suffix variables. A shift j is usable after a
// mismatch iff the current substitution labels every component uniformly.

enum class NodeClass : std::uint8_t { constant, variable, primed };

/// A shifting-graph node. `id` is a constant id for NodeClass::constant and a
/// variable id otherwise.
struct GraphNode {
  NodeClass     cls = NodeClass::constant;
  std::uint32_t id  = 0;

  friend constexpr auto operator<=>(const GraphNode&, const GraphNode&) = default;
};

enum class Validity : std::uint8_t { valid, invalid };

/// Output of a failure function: resume after the first `resume` pattern
/// symbols, which match the text under `succeeding`.
struct FailureResult {
  std::size_t  resume = 0;
  Substitution succeeding;

  friend bool operator==(const FailureResult&, const FailureResult&) = default;
};

}  // namespace vcmatch

#endif  // VCMATCH_SHIFTING_GRAPH_HPP
