// SPDX-License-Identifier: Apache-2.0

#ifndef VCMATCH_CONVOLUTION_HPP
#define VCMATCH_CONVOLUTION_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "vcmatch/match_report.hpp"
#include "vcmatch/symbols.hpp"

namespace vcmatch {

using IntSeq = std::vector<std::int64_t>;

/// One flag per window; element i - 1 describes the window starting at the
/// 1-based text position i.
using WindowMask = std::vector<bool>;

/// Raised when a correlation cannot be guaranteed exact by the floating-point
/// transform. Callers may retry with CorrelationMethod::direct.
class OverflowRisk : public std::range_error {
public:
  using std::range_error::range_error;
};

/// Inputs to the transform must stay strictly below this value.
inline constexpr std::int64_t kCorrelationValueLimit = std::int64_t{1} << 26;

enum class CorrelationMethod : std::uint8_t { fft, direct };

/// R[j] = sum_i a[i + j] * b[i] for 0 <= j <= |a| - |b|.
///
/// The text side is cut into overlapping blocks whose length is the smallest
/// power of two >= 2|b|; each block is correlated with one complex FFT pair
/// and the results are rounded to the nearest integer. When the worst-case
/// rounding error of a single transform could reach 1/4, values are split
/// into 13-bit limbs that are correlated separately and recombined exactly.
///
/// Throws std::invalid_argument unless 1 <= |b| <= |a|, and OverflowRisk when
/// a value is negative or >= kCorrelationValueLimit, when some R[j] could
/// exceed 64 bits, or when even the limb transforms cannot be kept exact.
IntSeq correlate(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

/// Same contract as correlate(), computed by direct O(|a||b|) summation.
/// Throws OverflowRisk only if a result would not fit in 64 bits.
IntSeq correlate_direct(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

IntSeq correlate(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                 CorrelationMethod method);

/// Windows where every constant of the pattern equals the aligned text
/// symbol, i.e. where the pattern with variables replaced by don't-cares
/// matches. Uses one correlation per distinct pattern constant.
WindowMask wildcard_mask(const PatternString& pattern, const TextString& text,
                         CorrelationMethod method = CorrelationMethod::fft);

/// Windows where all text symbols aligned with occurrences of `variable` are
/// equal. Throws std::invalid_argument if `variable` is not in the pattern.
WindowMask variable_consistent(const PatternString& pattern, const TextString& text,
                               std::uint32_t variable,
                               CorrelationMethod method = CorrelationMethod::fft);

struct ConvOptions {
  CorrelationMethod method         = CorrelationMethod::fft;
  bool              with_witnesses = false;
};

/// Convolution-based matcher: wildcard mask, then the squared-sum test per
/// variable, then (PVC only) pairwise distinct variable images.
MatchReport conv_match_all(const PatternString& pattern, const TextString& text, MatchMode mode,
                           const ConvOptions& options = {});

}  // namespace vcmatch

#endif  // VCMATCH_CONVOLUTION_HPP
