// SPDX-License-Identifier: Apache-2.0

#include "vcmatch/substitution.hpp"

#include <string>

namespace vcmatch {

UndefinedVariable::UndefinedVariable(std::uint32_t variable)
    : std::out_of_range("variable " + std::to_string(variable) + " is outside the substitution's domain"),
      variable_(variable)
{
}

Substitution::Substitution(std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> bindings)
{
  for (const auto& [variable, constant] : bindings) {
    if (extend(variable, constant, false) == ExtendResult::conflict)
      throw std::invalid_argument("conflicting bindings for variable " + std::to_string(variable));
  }
}

std::optional<std::uint32_t> Substitution::image(std::uint32_t variable) const
{
  const auto it = forward_.find(variable);
  if (it == forward_.end()) return std::nullopt;
  return it->second;
}

const std::set<std::uint32_t>& Substitution::preimage(std::uint32_t constant) const
{
  static const std::set<std::uint32_t> empty;
  const auto it = inverse_.find(constant);
  return it == inverse_.end() ? empty : it->second;
}

ExtendResult Substitution::extend(std::uint32_t variable, std::uint32_t constant, bool injective)
{
  if (const auto it = forward_.find(variable); it != forward_.end())
    return it->second == constant ? ExtendResult::ok : ExtendResult::conflict;
  if (injective && !preimage(constant).empty()) return ExtendResult::conflict;
  forward_.emplace(variable, constant);
  inverse_[constant].insert(variable);
  return ExtendResult::ok;
}

void Substitution::clear() noexcept
{
  forward_.clear();
  inverse_.clear();
}

bool Substitution::is_injective() const noexcept
{
  for (const auto& [constant, variables] : inverse_)
    if (variables.size() > 1) return false;
  return true;
}

std::vector<Symbol> apply_substitution(const Substitution& pi, std::span<const Symbol> symbols)
{
  std::vector<Symbol> out;
  out.reserve(symbols.size());
  for (const Symbol s : symbols) {
    if (s.is_constant()) {
      out.push_back(s);
      continue;
    }
    const auto image = pi.image(s.id);
    if (!image) throw UndefinedVariable(s.id);
    out.push_back(Symbol::constant(*image));
  }
  return out;
}

}  // namespace vcmatch
