// SPDX-License-Identifier: Apache-2.0

#ifndef VCMATCH_TESTS_FIXTURES_HPP
#define VCMATCH_TESTS_FIXTURES_HPP

#include <initializer_list>
#include <string_view>
#include <utility>

#include "vcmatch/substitution.hpp"
#include "vcmatch/symbols.hpp"

namespace vcmatch::testing {

inline ClassifiedInput instance(std::string_view pattern, std::string_view text = {})
{
  return classify_input(pattern, text);
}

inline std::uint32_t var(const ClassifiedInput& in, char byte)
{
  return in.symbols.find_variable(static_cast<unsigned char>(byte)).value().id;
}

/// Constant id for a byte, interning it when it is new to the instance.
inline std::uint32_t con(ClassifiedInput& in, char byte)
{
  return in.symbols.intern_constant(static_cast<unsigned char>(byte)).id;
}

/// Substitution written with bytes, e.g. {{'A', 'b'}, {'B', 'a'}}.
inline Substitution named(ClassifiedInput& in, std::initializer_list<std::pair<char, char>> bindings)
{
  Substitution pi;
  for (const auto& [x, c] : bindings) pi.extend(var(in, x), con(in, c), false);
  return pi;
}

}  // namespace vcmatch::testing

#endif  // VCMATCH_TESTS_FIXTURES_HPP
