// SPDX-License-Identifier: Apache-2.0

#include "instance_generator.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace vcmatch::cli {

namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi)
{
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(std::mt19937_64& rng, double p)
{
  return std::bernoulli_distribution(p)(rng);
}

}  // namespace

RawInstance generate_instance(std::mt19937_64& rng, const GeneratorParams& params)
{
  if (params.constants == 0 || params.constants > 25 || params.variables > 26)
    throw std::invalid_argument("alphabet sizes must be in 1..25 constants and 0..26 variables");
  if (params.max_m == 0 || params.max_n == 0) throw std::invalid_argument("lengths must be positive");

  const std::size_t m = uniform(rng, 1, params.max_m);
  const std::size_t n = uniform(rng, 1, params.max_n);

  std::size_t variables   = params.variables;
  double      p_variable  = params.variable_probability;
  if (params.adversarial) {
    variables  = std::min<std::size_t>(variables, 1 + uniform(rng, 0, 1));
    p_variable = 0.8;
  }

  RawInstance out;
  out.pattern.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    if (variables > 0 && coin(rng, p_variable)) {
      out.pattern.push_back(static_cast<char>('A' + uniform(rng, 0, variables - 1)));
    } else {
      out.pattern.push_back(static_cast<char>('a' + uniform(rng, 0, params.constants - 1)));
    }
  }

  // One extra letter beyond the configured constants exercises symbols that
  // never occur in the pattern.
  const std::size_t text_alphabet = params.constants + (coin(rng, 0.3) ? 1 : 0);
  out.text.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.text.push_back(static_cast<char>('a' + uniform(rng, 0, text_alphabet - 1)));

  if (m <= n) {
    const std::size_t plants = uniform(rng, 0, 3);
    for (std::size_t t = 0; t < plants; ++t) {
      std::vector<char> image(26);
      const bool        collapse = params.adversarial && coin(rng, 0.5);
      const char        shared   = static_cast<char>('a' + uniform(rng, 0, text_alphabet - 1));
      for (auto& c : image) c = collapse ? shared : static_cast<char>('a' + uniform(rng, 0, text_alphabet - 1));

      const std::size_t start = uniform(rng, 0, n - m);
      for (std::size_t j = 0; j < m; ++j) {
        const char p          = out.pattern[j];
        out.text[start + j]   = (p >= 'A' && p <= 'Z') ? image[static_cast<std::size_t>(p - 'A')] : p;
      }
    }
  }
  return out;
}

}  // namespace vcmatch::cli
