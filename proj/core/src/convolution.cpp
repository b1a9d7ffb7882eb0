// SPDX-License-Identifier: Apache-2.0

#include "vcmatch/convolution.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <utility>

namespace vcmatch {

namespace {

using Complex = std::complex<double>;
__extension__ typedef __int128 Wide;

// Iterative radix-2 transform of a fixed power-of-two size.
class Fft {
public:
  explicit Fft(std::size_t size) : size_(size), reversed_(size), roots_(size / 2)
  {
    const int bits = std::countr_zero(size);
    for (std::size_t i = 0; i < size; ++i) {
      std::size_t r = 0;
      for (int b = 0; b < bits; ++b)
        if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (bits - 1 - b);
      reversed_[i] = r;
    }
    // Roots are evaluated directly rather than by repeated multiplication.
    for (std::size_t i = 0; i < roots_.size(); ++i) {
      const double angle = -2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(size);
      roots_[i] = {std::cos(angle), std::sin(angle)};
    }
  }

  std::size_t size() const noexcept { return size_; }

  void forward(std::vector<Complex>& data) const { transform(data, false); }

  void inverse(std::vector<Complex>& data) const
  {
    transform(data, true);
    const double scale = 1.0 / static_cast<double>(size_);
    for (auto& v : data) v *= scale;
  }

private:
  void transform(std::vector<Complex>& data, bool invert) const
  {
    for (std::size_t i = 0; i < size_; ++i)
      if (i < reversed_[i]) std::swap(data[i], data[reversed_[i]]);

    for (std::size_t len = 2; len <= size_; len <<= 1) {
      const std::size_t half   = len / 2;
      const std::size_t stride = size_ / len;
      for (std::size_t start = 0; start < size_; start += len) {
        for (std::size_t k = 0; k < half; ++k) {
          Complex w = roots_[k * stride];
          if (invert) w = std::conj(w);
          const Complex u = data[start + k];
          const Complex v = data[start + k + half] * w;
          data[start + k]        = u + v;
          data[start + k + half] = u - v;
        }
      }
    }
  }

  std::size_t              size_;
  std::vector<std::size_t> reversed_;
  std::vector<Complex>     roots_;
};

void check_shapes(std::span<const std::int64_t> a, std::span<const std::int64_t> b)
{
  if (b.empty()) throw std::invalid_argument("correlation kernel must be non-empty");
  if (b.size() > a.size()) throw std::invalid_argument("correlation kernel longer than input");
}

std::int64_t checked_max(std::span<const std::int64_t> values)
{
  std::int64_t hi = 0;
  for (const std::int64_t v : values) {
    if (v < 0) throw OverflowRisk("correlation inputs must be non-negative");
    hi = std::max(hi, v);
  }
  return hi;
}

// 0/1 indicator of a predicate over the text symbols.
IntSeq indicator(std::span<const std::uint32_t> values, auto&& predicate)
{
  IntSeq out(values.size());
  std::transform(values.begin(), values.end(), out.begin(),
                 [&](std::uint32_t v) { return predicate(v) ? std::int64_t{1} : std::int64_t{0}; });
  return out;
}

IntSeq pattern_indicator(const PatternString& pattern, Symbol target)
{
  IntSeq out(pattern.size(), 0);
  for (std::size_t j = 0; j < pattern.size(); ++j)
    if (pattern[j] == target) out[j] = 1;
  return out;
}

// Dense positive codes 1..|Sigma_T| for the text symbols, by first appearance.
struct TextEncoding {
  IntSeq                     codes;
  IntSeq                     squares;
  std::vector<std::uint32_t> decode;  // code -> constant id; decode[0] unused

  explicit TextEncoding(const TextString& text)
  {
    std::vector<std::int64_t> code_of(text.id_bound(), 0);
    decode.push_back(0);
    codes.reserve(text.size());
    squares.reserve(text.size());
    for (const std::uint32_t c : text.constants()) {
      if (code_of[c] == 0) {
        code_of[c] = static_cast<std::int64_t>(decode.size());
        decode.push_back(c);
      }
      codes.push_back(code_of[c]);
      squares.push_back(code_of[c] * code_of[c]);
    }
  }
};

// Per-variable correlations T (x) P_x and T^2 (x) P_x.
struct VariableSums {
  std::size_t occurrences;
  IntSeq      sum;
  IntSeq      sum_of_squares;
};

VariableSums variable_sums(const PatternString& pattern, const TextEncoding& encoding,
                           std::uint32_t variable, CorrelationMethod method)
{
  const IntSeq kernel = pattern_indicator(pattern, Symbol::variable(variable));
  return {pattern.occurrence_count(variable), correlate(encoding.codes, kernel, method),
          correlate(encoding.squares, kernel, method)};
}

bool all_equal(const VariableSums& sums, std::size_t window)
{
  const Wide count = static_cast<Wide>(sums.occurrences);
  const Wide total = sums.sum[window];
  return count * static_cast<Wide>(sums.sum_of_squares[window]) == total * total;
}

constexpr std::int64_t kLimbBase = std::int64_t{1} << 13;

std::size_t block_size(std::size_t n, std::size_t m)
{
  return std::min(std::bit_ceil(2 * m), std::bit_ceil(n));
}

// Worst-case rounding error of a double FFT product is bounded by
// ||a||_2 ||b||_2 eps log2(L) up to a small constant.
double rounding_error_bound(std::int64_t max_a, std::int64_t max_b, std::size_t block, std::size_t m)
{
  return 4.0 * static_cast<double>(max_a) * static_cast<double>(max_b)
         * std::sqrt(static_cast<double>(block) * static_cast<double>(m))
         * std::max(1.0, std::log2(static_cast<double>(block))) * 0x1p-53;
}

std::pair<IntSeq, IntSeq> split_limbs(std::span<const std::int64_t> values)
{
  IntSeq high(values.size()), low(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    high[i] = values[i] / kLimbBase;
    low[i]  = values[i] % kLimbBase;
  }
  return {std::move(high), std::move(low)};
}

// Overlap-save correlation with one transform size; exactness is the
// caller's responsibility.
IntSeq transform_correlate(std::span<const std::int64_t> a, std::span<const std::int64_t> b)
{
  const std::size_t n     = a.size();
  const std::size_t m     = b.size();
  const std::size_t block = block_size(n, m);
  const Fft         fft(block);

  std::vector<Complex> kernel(block);
  for (std::size_t i = 0; i < m; ++i) kernel[i] = static_cast<double>(b[m - 1 - i]);
  fft.forward(kernel);

  const std::size_t outputs = n - m + 1;
  const std::size_t step    = block - m + 1;
  IntSeq            result(outputs);

  std::vector<Complex> work(block);
  for (std::size_t start = 0; start < outputs; start += step) {
    std::fill(work.begin(), work.end(), Complex{});
    const std::size_t available = std::min(block, n - start);
    for (std::size_t i = 0; i < available; ++i) work[i] = static_cast<double>(a[start + i]);
    fft.forward(work);
    for (std::size_t i = 0; i < block; ++i) work[i] *= kernel[i];
    fft.inverse(work);
    const std::size_t produced = std::min(step, outputs - start);
    for (std::size_t t = 0; t < produced; ++t)
      result[start + t] = std::llround(work[t + m - 1].real());
  }
  return result;
}

}  // namespace

IntSeq correlate(std::span<const std::int64_t> a, std::span<const std::int64_t> b)
{
  check_shapes(a, b);
  const std::int64_t max_a = checked_max(a);
  const std::int64_t max_b = checked_max(b);
  if (max_a >= kCorrelationValueLimit || max_b >= kCorrelationValueLimit)
    throw OverflowRisk("correlation input value exceeds 2^26");

  const std::size_t m     = b.size();
  const std::size_t block = block_size(a.size(), m);

  const Wide sum_b = std::accumulate(b.begin(), b.end(), Wide{0});
  if (static_cast<Wide>(max_a) * sum_b > static_cast<Wide>(INT64_MAX))
    throw OverflowRisk("correlation result exceeds 64 bits");

  if (rounding_error_bound(max_a, max_b, block, m) < 0.25) return transform_correlate(a, b);

  // Split every value into 13-bit limbs, correlate limb by limb and recombine.
  if (rounding_error_bound(kLimbBase - 1, kLimbBase - 1, block, m) >= 0.25)
    throw OverflowRisk("transform rounding error may exceed 1/4");

  const auto [a_high, a_low] = split_limbs(a);
  const auto [b_high, b_low] = split_limbs(b);
  const bool a_split = max_a >= kLimbBase;
  const bool b_split = max_b >= kLimbBase;

  IntSeq       result = transform_correlate(a_low, b_low);
  const IntSeq zero(result.size(), 0);
  const IntSeq hh = a_split && b_split ? transform_correlate(a_high, b_high) : zero;
  const IntSeq hl = a_split ? transform_correlate(a_high, b_low) : zero;
  const IntSeq lh = b_split ? transform_correlate(a_low, b_high) : zero;
  for (std::size_t j = 0; j < result.size(); ++j)
    result[j] += (hh[j] * kLimbBase + hl[j] + lh[j]) * kLimbBase;
  return result;
}

IntSeq correlate_direct(std::span<const std::int64_t> a, std::span<const std::int64_t> b)
{
  check_shapes(a, b);
  checked_max(a);
  checked_max(b);

  const std::size_t outputs = a.size() - b.size() + 1;
  IntSeq            result(outputs);
  for (std::size_t j = 0; j < outputs; ++j) {
    Wide acc = 0;
    for (std::size_t i = 0; i < b.size(); ++i)
      acc += static_cast<Wide>(a[i + j]) * static_cast<Wide>(b[i]);
    if (acc > static_cast<Wide>(INT64_MAX)) throw OverflowRisk("correlation result exceeds 64 bits");
    result[j] = static_cast<std::int64_t>(acc);
  }
  return result;
}

IntSeq correlate(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                 CorrelationMethod method)
{
  return method == CorrelationMethod::fft ? correlate(a, b) : correlate_direct(a, b);
}

WindowMask wildcard_mask(const PatternString& pattern, const TextString& text, CorrelationMethod method)
{
  const std::size_t m = pattern.size();
  const std::size_t n = text.size();
  if (m > n) return {};

  IntSeq mismatches(n - m + 1, 0);
  for (const std::uint32_t p : pattern.constants()) {
    const IntSeq differs = indicator(text.constants(), [p](std::uint32_t c) { return c != p; });
    const IntSeq hits    = correlate(differs, pattern_indicator(pattern, Symbol::constant(p)), method);
    for (std::size_t i = 0; i < hits.size(); ++i) mismatches[i] += hits[i];
  }

  WindowMask mask(mismatches.size());
  for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = mismatches[i] == 0;
  return mask;
}

WindowMask variable_consistent(const PatternString& pattern, const TextString& text,
                               std::uint32_t variable, CorrelationMethod method)
{
  if (!pattern.variable_index(variable))
    throw std::invalid_argument("variable does not occur in the pattern");
  if (pattern.size() > text.size()) return {};

  const TextEncoding encoding(text);
  const VariableSums sums = variable_sums(pattern, encoding, variable, method);
  WindowMask         mask(sums.sum.size());
  for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = all_equal(sums, i);
  return mask;
}

MatchReport conv_match_all(const PatternString& pattern, const TextString& text, MatchMode mode,
                           const ConvOptions& options)
{
  MatchReport report;
  if (pattern.size() > text.size()) return report;

  const WindowMask          mask = wildcard_mask(pattern, text, options.method);
  const TextEncoding        encoding(text);
  std::vector<VariableSums> sums;
  sums.reserve(pattern.variables().size());
  for (const std::uint32_t x : pattern.variables())
    sums.push_back(variable_sums(pattern, encoding, x, options.method));

  std::vector<std::int64_t> images(sums.size());
  for (std::size_t w = 0; w < mask.size(); ++w) {
    if (!mask[w]) continue;
    bool consistent = true;
    for (std::size_t v = 0; v < sums.size() && consistent; ++v) {
      consistent = all_equal(sums[v], w);
      // Exact once the window is known to be consistent for this variable.
      if (consistent) images[v] = sums[v].sum[w] / static_cast<std::int64_t>(sums[v].occurrences);
    }
    if (!consistent) continue;

    if (is_injective(mode)) {
      std::vector<std::int64_t> sorted = images;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
    }

    const std::size_t position = w + 1;
    report.positions.push_back(position);
    if (options.with_witnesses) {
      Substitution witness;
      const auto   variables = pattern.variables();
      for (std::size_t v = 0; v < variables.size(); ++v)
        witness.extend(variables[v], encoding.decode[static_cast<std::size_t>(images[v])], false);
      report.witnesses.emplace(position, std::move(witness));
    }
  }
  return report;
}

}  // namespace vcmatch
