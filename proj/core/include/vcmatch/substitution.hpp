// SPDX-License-Identifier: Apache-2.0

#ifndef VCMATCH_SUBSTITUTION_HPP
#define VCMATCH_SUBSTITUTION_HPP

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vcmatch/symbols.hpp"

namespace vcmatch {

/// Raised when a substitution is applied to a string containing a variable
/// outside its domain.
class UndefinedVariable : public std::out_of_range {
public:
  explicit UndefinedVariable(std::uint32_t variable);
  std::uint32_t variable() const noexcept { return variable_; }

private:
  std::uint32_t variable_;
};

enum class ExtendResult : std::uint8_t { ok, conflict };

/// Partial map from variable ids to constant ids, together with its inverse.
/// The inverse is kept in lockstep with the forward map so injectivity checks
/// are a lookup.
class Substitution {
public:
  Substitution() = default;
  /// Builds a map from (variable, constant) pairs. Throws std::invalid_argument
  /// when a variable is listed twice with different images.
  Substitution(std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> bindings);

  std::optional<std::uint32_t> image(std::uint32_t variable) const;
  bool contains(std::uint32_t variable) const { return forward_.contains(variable); }

  /// Variables currently mapped to `constant`.
  const std::set<std::uint32_t>& preimage(std::uint32_t constant) const;

  /// Binds `variable` to `constant` unless that contradicts an existing
  /// binding, or, when `injective`, another variable already owns `constant`.
  /// On conflict the map is left unchanged.
  ExtendResult extend(std::uint32_t variable, std::uint32_t constant, bool injective);

  void clear() noexcept;

  std::size_t size() const noexcept { return forward_.size(); }
  bool empty() const noexcept { return forward_.empty(); }
  bool is_injective() const noexcept;

  const std::map<std::uint32_t, std::uint32_t>& bindings() const noexcept { return forward_; }
  const std::map<std::uint32_t, std::set<std::uint32_t>>& inverse() const noexcept { return inverse_; }

  friend bool operator==(const Substitution& a, const Substitution& b) { return a.forward_ == b.forward_; }

private:
  std::map<std::uint32_t, std::uint32_t>           forward_;
  std::map<std::uint32_t, std::set<std::uint32_t>> inverse_;
};

inline ExtendResult extend_mapping(Substitution& pi, std::uint32_t variable, std::uint32_t constant,
                                   bool injective)
{
  return pi.extend(variable, constant, injective);
}

/// Position-wise image of `symbols` under `pi`: variables are replaced by
/// their images, constants are kept. Throws UndefinedVariable.
std::vector<Symbol> apply_substitution(const Substitution& pi, std::span<const Symbol> symbols);

}  // namespace vcmatch

#endif  // VCMATCH_SUBSTITUTION_HPP
