// SPDX-License-Identifier: Apache-2.0

#include "vcmatch/bit_rows.hpp"

#include <bit>
#include <stdexcept>

namespace vcmatch {

bool is_supported_chunk_width(unsigned width) noexcept
{
  return width == 8 || width == 16 || width == 32 || width == 64;
}

BitRows::BitRows(std::size_t max_k, std::size_t rows_per_k, unsigned chunk_width)
    : chunk_width_(chunk_width), max_k_(max_k), rows_per_k_(rows_per_k), k_offsets_(max_k + 2, 0)
{
  if (!is_supported_chunk_width(chunk_width)) throw std::invalid_argument("unsupported chunk width");
  for (std::size_t k = 1; k <= max_k; ++k) k_offsets_[k + 1] = k_offsets_[k] + rows_per_k * words(k);
  storage_.assign(k_offsets_[max_k + 1], 0);
}

void and_into(std::span<BitRows::Word> target, std::span<const BitRows::Word> source) noexcept
{
  for (std::size_t w = 0; w < target.size(); ++w) target[w] &= source[w];
}

std::optional<std::size_t> highest_set_bit(std::span<const BitRows::Word> row, unsigned chunk_width) noexcept
{
  for (std::size_t w = row.size(); w-- > 0;) {
    if (row[w] == 0) continue;
    const auto top = static_cast<std::size_t>(std::bit_width(row[w])) - 1;
    return w * chunk_width + top;
  }
  return std::nullopt;
}

}  // namespace vcmatch
