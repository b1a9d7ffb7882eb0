// SPDX-License-Identifier: Apache-2.0

#ifndef VCMATCH_BIT_ROWS_HPP
#define VCMATCH_BIT_ROWS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace vcmatch {

/// Bits per machine word.
inline constexpr unsigned kMachineWordBits = 64;

/// Returns true for the chunk widths the bitmaps accept: 8, 16, 32, 64.
bool is_supported_chunk_width(unsigned width) noexcept;

/// A family of bit rows indexed by (k, row) where row k has exactly k bits,
/// 1 <= k <= max_k. Bit j of a row lives in word j / chunk_width at offset
/// j % chunk_width; each word carries chunk_width payload bits.
///
/// Rows start all-zero.
class BitRows {
public:
  using Word = std::uint64_t;

  BitRows() = default;
  /// Throws std::invalid_argument for an unsupported chunk width.
  BitRows(std::size_t max_k, std::size_t rows_per_k, unsigned chunk_width);

  unsigned chunk_width() const noexcept { return chunk_width_; }
  std::size_t max_k() const noexcept { return max_k_; }
  std::size_t rows_per_k() const noexcept { return rows_per_k_; }
  std::size_t words(std::size_t k) const noexcept { return (k + chunk_width_ - 1) / chunk_width_; }

  std::span<Word> row(std::size_t k, std::size_t index) noexcept
  {
    return {storage_.data() + offset(k, index), words(k)};
  }
  std::span<const Word> row(std::size_t k, std::size_t index) const noexcept
  {
    return {storage_.data() + offset(k, index), words(k)};
  }

  void set(std::size_t k, std::size_t index, std::size_t j) noexcept
  {
    storage_[offset(k, index) + j / chunk_width_] |= Word{1} << (j % chunk_width_);
  }
  bool test(std::size_t k, std::size_t index, std::size_t j) const noexcept
  {
    return (storage_[offset(k, index) + j / chunk_width_] >> (j % chunk_width_)) & 1U;
  }

private:
  std::size_t offset(std::size_t k, std::size_t index) const noexcept
  {
    return k_offsets_[k] + index * words(k);
  }

  unsigned                 chunk_width_ = kMachineWordBits;
  std::size_t              max_k_       = 0;
  std::size_t              rows_per_k_  = 0;
  std::vector<std::size_t> k_offsets_;
  std::vector<Word>        storage_;
};

/// Word-at-a-time AND of `source` into `target`.
void and_into(std::span<BitRows::Word> target, std::span<const BitRows::Word> source) noexcept;

/// Index of the highest set bit in a row of `chunk_width`-bit words, scanning
/// from the top word down.
std::optional<std::size_t> highest_set_bit(std::span<const BitRows::Word> row,
                                           unsigned chunk_width) noexcept;

}  // namespace vcmatch

#endif  // VCMATCH_BIT_ROWS_HPP
