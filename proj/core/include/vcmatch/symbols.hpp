// SPDX-License-Identifier: Apache-2.0

#ifndef VCMATCH_SYMBOLS_HPP
#define VCMATCH_SYMBOLS_HPP

#include <array>
#include <bitset>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vcmatch {

/// Raised for inputs that cannot be turned into a well-formed instance.
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

enum class SymbolKind : std::uint8_t { constant, variable };

/// A constant or a variable, identified by a dense id within its kind's
/// registry. Constant ids and variable ids never collide because the kind is
/// part of the identity.
struct Symbol {
  SymbolKind    kind = SymbolKind::constant;
  std::uint32_t id   = 0;

  static constexpr Symbol constant(std::uint32_t id) noexcept
  {
    return {SymbolKind::constant, id};
  }
  static constexpr Symbol variable(std::uint32_t id) noexcept
  {
    return {SymbolKind::variable, id};
  }

  constexpr bool is_constant() const noexcept { return kind == SymbolKind::constant; }
  constexpr bool is_variable() const noexcept { return kind == SymbolKind::variable; }

  friend constexpr auto operator<=>(const Symbol&, const Symbol&) = default;
};

/// Which flavour of matching is requested: FVC allows any function from
/// variables to symbols, PVC requires it to be injective.
enum class MatchMode : std::uint8_t { fvc, pvc };

constexpr bool is_injective(MatchMode mode) noexcept { return mode == MatchMode::pvc; }

std::string_view to_string(MatchMode mode) noexcept;
std::optional<MatchMode> parse_match_mode(std::string_view text) noexcept;

/// Byte <-> id registries for constants and variables. Ids are assigned in
/// order of first registration.
class SymbolTable {
public:
  Symbol intern_constant(unsigned char byte);
  Symbol intern_variable(unsigned char byte);

  std::optional<Symbol> find_constant(unsigned char byte) const noexcept;
  std::optional<Symbol> find_variable(unsigned char byte) const noexcept;

  std::size_t constant_count() const noexcept { return constant_bytes_.size(); }
  std::size_t variable_count() const noexcept { return variable_bytes_.size(); }

  /// Byte that was registered for the symbol. Throws std::out_of_range for
  /// unknown ids.
  unsigned char byte_of(Symbol s) const;

  std::string render(std::span<const Symbol> symbols) const;

private:
  static constexpr std::int32_t kUnset = -1;

  std::array<std::int32_t, 256> constant_ids_ = make_unset();
  std::array<std::int32_t, 256> variable_ids_ = make_unset();
  std::vector<unsigned char>    constant_bytes_;
  std::vector<unsigned char>    variable_bytes_;

  static constexpr std::array<std::int32_t, 256> make_unset() noexcept
  {
    std::array<std::int32_t, 256> a{};
    a.fill(kUnset);
    return a;
  }
};

/// A pattern over constants and variables, with the per-variable occurrence
/// data every backend needs. Positions are 0-based internally; the public
/// match positions elsewhere are 1-based.
///
/// Constants and variables are additionally numbered locally (0, 1, ...) in
/// order of first appearance in the pattern; the matchers index their tables
/// by these local numbers.
class PatternString {
public:
  /// Throws InvalidInput when `symbols` is empty.
  explicit PatternString(std::vector<Symbol> symbols);

  std::size_t size() const noexcept { return symbols_.size(); }
  const Symbol& operator[](std::size_t pos) const noexcept { return symbols_[pos]; }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }

  /// Constant ids occurring in the pattern, in first-appearance order.
  std::span<const std::uint32_t> constants() const noexcept { return constants_; }
  /// Variable ids occurring in the pattern, in first-appearance order.
  std::span<const std::uint32_t> variables() const noexcept { return variables_; }

  std::size_t occurrence_count(std::uint32_t variable) const noexcept;
  std::span<const std::size_t> occurrences(std::uint32_t variable) const noexcept;
  std::size_t constant_position_count() const noexcept { return constant_positions_; }

  std::optional<std::size_t> variable_index(std::uint32_t variable) const noexcept;
  std::optional<std::size_t> constant_index(std::uint32_t constant) const noexcept;

  /// Number of distinct variables in the prefix of length `k`. Since local
  /// variable indices follow first appearance, those variables are exactly
  /// the local indices [0, result).
  std::size_t variables_in_prefix(std::size_t k) const noexcept { return prefix_variables_[k]; }

  bool has_variables() const noexcept { return !variables_.empty(); }

private:
  std::vector<Symbol>                   symbols_;
  std::vector<std::uint32_t>            constants_;
  std::vector<std::uint32_t>            variables_;
  std::vector<std::int32_t>             variable_local_;  // by variable id
  std::vector<std::int32_t>             constant_local_;  // by constant id
  std::vector<std::vector<std::size_t>> positions_;       // by local variable index
  std::vector<std::size_t>              prefix_variables_;
  std::size_t                           constant_positions_ = 0;
};

/// A text over constants only.
class TextString {
public:
  TextString() = default;
  explicit TextString(std::vector<std::uint32_t> constants) : constants_(std::move(constants)) {}

  std::size_t size() const noexcept { return constants_.size(); }
  bool empty() const noexcept { return constants_.empty(); }
  std::uint32_t operator[](std::size_t pos) const noexcept { return constants_[pos]; }
  std::span<const std::uint32_t> constants() const noexcept { return constants_; }

  /// One past the largest constant id in the text (0 for an empty text).
  std::uint32_t id_bound() const noexcept;

private:
  std::vector<std::uint32_t> constants_;
};

/// Bytes that denote variables in a raw pattern.
using VariableCharset = std::bitset<256>;

VariableCharset make_charset(std::string_view bytes);
/// ASCII 'A'..'Z'.
VariableCharset default_variable_charset();

struct ClassifiedInput {
  SymbolTable   symbols;
  PatternString pattern;
  TextString    text;
};

/// Splits raw bytes into a pattern and a text. Pattern bytes in `variables`
/// become variables; every other pattern byte and every text byte is a
/// constant. Pattern symbols are registered before text symbols, so the
/// pattern's constants get the smallest constant ids.
///
/// Throws InvalidInput for an empty pattern.
ClassifiedInput classify_input(std::string_view raw_pattern,
                               std::string_view raw_text,
                               const VariableCharset& variables = default_variable_charset());

}  // namespace vcmatch

#endif  // VCMATCH_SYMBOLS_HPP
