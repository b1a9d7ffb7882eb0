// SPDX-License-Identifier: Apache-2.0

#ifndef VCMATCH_TOOLS_COMMANDS_HPP
#define VCMATCH_TOOLS_COMMANDS_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vcmatch/bit_rows.hpp"
#include "vcmatch/match_report.hpp"
#include "vcmatch/symbols.hpp"

#include "instance_generator.hpp"

namespace vcmatch::cli {

enum class Algo : std::uint8_t { naive, conv, kmp, all };
enum class OutputFormat : std::uint8_t { lines, json };

std::string_view to_string(Algo algo) noexcept;
std::optional<Algo> parse_algo(std::string_view text) noexcept;

inline constexpr int kExitOk           = 0;
inline constexpr int kExitDisagreement = 1;
inline constexpr int kExitInvalidInput = 2;

struct RunConfig {
  MatchMode mode = MatchMode::fvc;
  Algo      algo = Algo::kmp;

  std::optional<std::string> pattern_inline;
  std::optional<std::string> pattern_file;
  std::optional<std::string> text_inline;
  std::optional<std::string> text_file;  // neither text option: standard input

  std::string  variables   = "ABCDEFGHIJKLMNOPQRSTUVWXYZ";
  OutputFormat format      = OutputFormat::lines;
  bool         witnesses   = false;
  unsigned     chunk_width = kMachineWordBits;

  // crosscheck
  std::uint64_t   seed  = 1;
  std::size_t     cases = 1000;
  GeneratorParams generator;

  // bench
  std::size_t              bench_m          = 64;
  std::size_t              bench_variables  = 3;
  std::size_t              bench_constants  = 3;
  std::vector<std::size_t> bench_n          = {std::size_t{1} << 14, std::size_t{1} << 15, std::size_t{1} << 16};
  std::size_t              bench_repeats    = 5;
  std::vector<Algo>        bench_algos      = {Algo::naive, Algo::conv, Algo::kmp};
};

/// One backend run with its timings. The convolution backend retries with
/// direct correlation when the transform cannot be guaranteed exact.
struct TimedReport {
  MatchReport  report;
  std::int64_t preprocess_ns = 0;
  std::int64_t query_ns      = 0;
  bool         used_direct_correlation = false;
};

/// Throws std::invalid_argument for Algo::all.
TimedReport run_backend(Algo algo, MatchMode mode, const PatternString& pattern, const TextString& text,
                        unsigned chunk_width, bool with_witnesses);

/// `find`: prints 1-based match positions. Returns kExitOk, kExitDisagreement
/// (algo=all and the backends differ) or kExitInvalidInput.
int run_find(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

/// `crosscheck`: random instances, every backend, both modes.
int run_crosscheck(const RunConfig& config, std::ostream& out, std::ostream& err);

/// `bench`: CSV timing rows over the configured size grid.
int run_bench(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace vcmatch::cli

#endif  // VCMATCH_TOOLS_COMMANDS_HPP
