// SPDX-License-Identifier: Apache-2.0
//
// vcmatch: find, cross-check and benchmark variable-constant pattern matching.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli/commands.hpp"

namespace {

const std::vector<std::string> kModes = {"fvc", "pvc"};
const std::vector<std::string> kAlgos = {"naive", "conv", "kmp", "all"};

void add_common(CLI::App& app, vcmatch::cli::RunConfig& config)
{
  app.add_option("--chunk-width", config.chunk_width, "Payload bits per bitmap word")
      ->check(CLI::IsMember({8U, 16U, 32U, 64U}));
}

}  // namespace

int main(int argc, char** argv)
{
  vcmatch::cli::RunConfig  config;
  bool                     json = false;
  std::string              mode = "fvc";
  std::string              algo = "kmp";
  std::vector<std::string> bench_algos = {"naive", "conv", "kmp"};

  CLI::App app{"Variable-constant pattern matching (FVC / PVC)"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);

  auto* find = app.add_subcommand("find", "Report 1-based match positions");
  auto* pattern_inline = find->add_option("--pattern", config.pattern_inline, "Pattern bytes");
  auto* pattern_file   = find->add_option("--pattern-file", config.pattern_file, "Read the pattern from a file");
  pattern_inline->excludes(pattern_file);
  auto* text_inline = find->add_option("--text-inline", config.text_inline, "Text bytes");
  auto* text_file   = find->add_option("--text-file", config.text_file, "Read the text from a file (default: stdin)");
  text_inline->excludes(text_file);
  find->add_option("--mode", mode, "fvc or pvc")->check(CLI::IsMember(kModes));
  find->add_option("--algo", algo, "naive, conv, kmp or all")->check(CLI::IsMember(kAlgos));
  find->add_option("--variables", config.variables, "Pattern bytes that denote variables");
  find->add_flag("--json", json, "Emit one JSON document");
  find->add_flag("--witness", config.witnesses, "Print a substitution for every match");
  add_common(*find, config);

  auto* crosscheck = app.add_subcommand("crosscheck", "Compare all backends against the naive matcher");
  crosscheck->add_option("--seed", config.seed);
  crosscheck->add_option("--cases", config.cases);
  crosscheck->add_option("--pi", config.generator.variables, "Number of pattern variables")
      ->check(CLI::Range(0, 26));
  crosscheck->add_option("--sigma", config.generator.constants, "Number of constants")->check(CLI::Range(1, 25));
  crosscheck->add_option("--max-m", config.generator.max_m)->check(CLI::PositiveNumber);
  crosscheck->add_option("--max-n", config.generator.max_n)->check(CLI::PositiveNumber);
  crosscheck->add_flag("--adversarial", config.generator.adversarial, "Favour repeated variables");
  add_common(*crosscheck, config);

  auto* bench = app.add_subcommand("bench", "CSV timings over a grid of text lengths");
  bench->add_option("--seed", config.seed);
  bench->add_option("--m", config.bench_m, "Pattern length")->check(CLI::PositiveNumber);
  bench->add_option("--n", config.bench_n, "Text lengths")->expected(1, -1);
  bench->add_option("--pi", config.bench_variables)->check(CLI::Range(0, 26));
  bench->add_option("--sigma", config.bench_constants)->check(CLI::Range(1, 25));
  bench->add_option("--repeats", config.bench_repeats)->check(CLI::PositiveNumber);
  bench->add_option("--algos", bench_algos, "Backends to time")
      ->check(CLI::IsMember({"naive", "conv", "kmp"}))
      ->expected(1, -1);
  add_common(*bench, config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? vcmatch::cli::kExitOk : vcmatch::cli::kExitInvalidInput;
  }

  if (json) config.format = vcmatch::cli::OutputFormat::json;
  config.mode = *vcmatch::parse_match_mode(mode);
  config.algo = *vcmatch::cli::parse_algo(algo);
  config.bench_algos.clear();
  for (const auto& name : bench_algos) config.bench_algos.push_back(*vcmatch::cli::parse_algo(name));

  if (find->parsed()) return vcmatch::cli::run_find(config, std::cin, std::cout, std::cerr);
  if (crosscheck->parsed()) return vcmatch::cli::run_crosscheck(config, std::cout, std::cerr);
  return vcmatch::cli::run_bench(config, std::cout, std::cerr);
}
