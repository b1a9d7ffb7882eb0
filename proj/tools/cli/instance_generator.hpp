// SPDX-License-Identifier: Apache-2.0

#ifndef VCMATCH_TOOLS_INSTANCE_GENERATOR_HPP
#define VCMATCH_TOOLS_INSTANCE_GENERATOR_HPP

#include <cstddef>
#include <random>
#include <string>

namespace vcmatch::cli {

struct GeneratorParams {
  std::size_t variables   = 3;   // pattern variables drawn from 'A'..
  std::size_t constants   = 3;   // constants drawn from 'a'..
  std::size_t max_m       = 10;
  std::size_t max_n       = 50;
  bool        adversarial = false;
  /// Probability that a pattern position is a variable.
  double variable_probability = 0.5;
};

/// A raw instance in the default byte convention: upper-case letters are
/// variables, lower-case letters are constants.
struct RawInstance {
  std::string pattern;
  std::string text;
};

/// Random pattern and text. A few occurrences of the pattern under random
/// substitutions are planted in the text so both match and non-match windows
/// are common. Texts occasionally use one constant that the pattern alphabet
/// lacks. The adversarial mode draws from fewer variables, repeats them, and
/// plants non-injective substitutions.
RawInstance generate_instance(std::mt19937_64& rng, const GeneratorParams& params);

}  // namespace vcmatch::cli

#endif  // VCMATCH_TOOLS_INSTANCE_GENERATOR_HPP
