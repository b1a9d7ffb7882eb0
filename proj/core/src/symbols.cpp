// SPDX-License-Identifier: Apache-2.0

#include "vcmatch/symbols.hpp"

#include <algorithm>

namespace vcmatch {

std::string_view to_string(MatchMode mode) noexcept
{
  return mode == MatchMode::pvc ? "pvc" : "fvc";
}

std::optional<MatchMode> parse_match_mode(std::string_view text) noexcept
{
  if (text == "fvc") return MatchMode::fvc;
  if (text == "pvc") return MatchMode::pvc;
  return std::nullopt;
}

Symbol SymbolTable::intern_constant(unsigned char byte)
{
  if (constant_ids_[byte] == kUnset) {
    constant_ids_[byte] = static_cast<std::int32_t>(constant_bytes_.size());
    constant_bytes_.push_back(byte);
  }
  return Symbol::constant(static_cast<std::uint32_t>(constant_ids_[byte]));
}

Symbol SymbolTable::intern_variable(unsigned char byte)
{
  if (variable_ids_[byte] == kUnset) {
    variable_ids_[byte] = static_cast<std::int32_t>(variable_bytes_.size());
    variable_bytes_.push_back(byte);
  }
  return Symbol::variable(static_cast<std::uint32_t>(variable_ids_[byte]));
}

std::optional<Symbol> SymbolTable::find_constant(unsigned char byte) const noexcept
{
  if (constant_ids_[byte] == kUnset) return std::nullopt;
  return Symbol::constant(static_cast<std::uint32_t>(constant_ids_[byte]));
}

std::optional<Symbol> SymbolTable::find_variable(unsigned char byte) const noexcept
{
  if (variable_ids_[byte] == kUnset) return std::nullopt;
  return Symbol::variable(static_cast<std::uint32_t>(variable_ids_[byte]));
}

unsigned char SymbolTable::byte_of(Symbol s) const
{
  const auto& bytes = s.is_constant() ? constant_bytes_ : variable_bytes_;
  return bytes.at(s.id);
}

std::string SymbolTable::render(std::span<const Symbol> symbols) const
{
  std::string out;
  out.reserve(symbols.size());
  for (const Symbol& s : symbols) out.push_back(static_cast<char>(byte_of(s)));
  return out;
}

PatternString::PatternString(std::vector<Symbol> symbols) : symbols_(std::move(symbols))
{
  if (symbols_.empty()) throw InvalidInput("pattern must contain at least one symbol");

  prefix_variables_.reserve(symbols_.size() + 1);
  prefix_variables_.push_back(0);
  for (std::size_t pos = 0; pos < symbols_.size(); ++pos) {
    const Symbol s = symbols_[pos];
    if (s.is_variable()) {
      if (s.id >= variable_local_.size()) variable_local_.resize(s.id + 1, -1);
      if (variable_local_[s.id] < 0) {
        variable_local_[s.id] = static_cast<std::int32_t>(variables_.size());
        variables_.push_back(s.id);
        positions_.emplace_back();
      }
      positions_[static_cast<std::size_t>(variable_local_[s.id])].push_back(pos);
    } else {
      ++constant_positions_;
      if (s.id >= constant_local_.size()) constant_local_.resize(s.id + 1, -1);
      if (constant_local_[s.id] < 0) {
        constant_local_[s.id] = static_cast<std::int32_t>(constants_.size());
        constants_.push_back(s.id);
      }
    }
    prefix_variables_.push_back(variables_.size());
  }
}

std::size_t PatternString::occurrence_count(std::uint32_t variable) const noexcept
{
  return occurrences(variable).size();
}

std::span<const std::size_t> PatternString::occurrences(std::uint32_t variable) const noexcept
{
  const auto local = variable_index(variable);
  if (!local) return {};
  return positions_[*local];
}

std::optional<std::size_t> PatternString::variable_index(std::uint32_t variable) const noexcept
{
  if (variable >= variable_local_.size() || variable_local_[variable] < 0) return std::nullopt;
  return static_cast<std::size_t>(variable_local_[variable]);
}

std::optional<std::size_t> PatternString::constant_index(std::uint32_t constant) const noexcept
{
  if (constant >= constant_local_.size() || constant_local_[constant] < 0) return std::nullopt;
  return static_cast<std::size_t>(constant_local_[constant]);
}

std::uint32_t TextString::id_bound() const noexcept
{
  if (constants_.empty()) return 0;
  return *std::max_element(constants_.begin(), constants_.end()) + 1;
}

VariableCharset make_charset(std::string_view bytes)
{
  VariableCharset set;
  for (char c : bytes) set.set(static_cast<unsigned char>(c));
  return set;
}

VariableCharset default_variable_charset()
{
  VariableCharset set;
  for (unsigned c = 'A'; c <= 'Z'; ++c) set.set(c);
  return set;
}

ClassifiedInput classify_input(std::string_view raw_pattern,
                               std::string_view raw_text,
                               const VariableCharset& variables)
{
  if (raw_pattern.empty()) throw InvalidInput("pattern must not be empty");

  SymbolTable         table;
  std::vector<Symbol> pattern;
  pattern.reserve(raw_pattern.size());
  for (char c : raw_pattern) {
    const auto byte = static_cast<unsigned char>(c);
    pattern.push_back(variables.test(byte) ? table.intern_variable(byte)
                                           : table.intern_constant(byte));
  }

  std::vector<std::uint32_t> text;
  text.reserve(raw_text.size());
  for (char c : raw_text) text.push_back(table.intern_constant(static_cast<unsigned char>(c)).id);

  return {std::move(table), PatternString(std::move(pattern)), TextString(std::move(text))};
}

}  // namespace vcmatch
