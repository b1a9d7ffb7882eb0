// SPDX-License-Identifier: Apache-2.0

#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "vcmatch/convolution.hpp"
#include "vcmatch/kmp_fvc.hpp"
#include "vcmatch/kmp_pvc.hpp"
#include "vcmatch/oracle.hpp"

namespace vcmatch::cli {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ns(Clock::time_point since)
{
  return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - since).count();
}

std::string read_file(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read file: " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string load_pattern(const RunConfig& config)
{
  if (config.pattern_inline && config.pattern_file) throw InvalidInput("give either --pattern or --pattern-file");
  if (config.pattern_inline) return *config.pattern_inline;
  if (config.pattern_file) return read_file(*config.pattern_file);
  throw InvalidInput("no pattern given");
}

std::string load_text(const RunConfig& config, std::istream& in)
{
  if (config.text_inline && config.text_file) throw InvalidInput("give either --text-inline or --text-file");
  if (config.text_inline) return *config.text_inline;
  if (config.text_file) return read_file(*config.text_file);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string render_byte(unsigned char byte)
{
  return std::string(1, static_cast<char>(byte));
}

nlohmann::json witness_json(const SymbolTable& symbols, const Substitution& pi)
{
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [variable, constant] : pi.bindings())
    out[render_byte(symbols.byte_of(Symbol::variable(variable)))] =
        render_byte(symbols.byte_of(Symbol::constant(constant)));
  return out;
}

std::string witness_line(const SymbolTable& symbols, const Substitution& pi)
{
  std::string out;
  for (const auto& [variable, constant] : pi.bindings()) {
    out.push_back(' ');
    out.push_back(static_cast<char>(symbols.byte_of(Symbol::variable(variable))));
    out.push_back('=');
    out.push_back(static_cast<char>(symbols.byte_of(Symbol::constant(constant))));
  }
  return out;
}

std::string positions_string(const std::vector<std::size_t>& positions)
{
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < positions.size(); ++i) out << (i ? "," : "") << positions[i];
  out << '}';
  return out.str();
}

}  // namespace

std::string_view to_string(Algo algo) noexcept
{
  switch (algo) {
  case Algo::naive: return "naive";
  case Algo::conv: return "conv";
  case Algo::kmp: return "kmp";
  case Algo::all: return "all";
  }
  return "?";
}

std::optional<Algo> parse_algo(std::string_view text) noexcept
{
  for (const Algo a : {Algo::naive, Algo::conv, Algo::kmp, Algo::all})
    if (to_string(a) == text) return a;
  return std::nullopt;
}

TimedReport run_backend(Algo algo, MatchMode mode, const PatternString& pattern, const TextString& text,
                        unsigned chunk_width, bool with_witnesses)
{
  TimedReport timed;
  switch (algo) {
  case Algo::naive: {
    const auto start = Clock::now();
    timed.report     = naive_all(pattern, text, mode, with_witnesses);
    timed.query_ns   = elapsed_ns(start);
    break;
  }
  case Algo::conv: {
    const auto start = Clock::now();
    try {
      timed.report = conv_match_all(pattern, text, mode, {CorrelationMethod::fft, with_witnesses});
    } catch (const OverflowRisk&) {
      timed.used_direct_correlation = true;
      timed.report = conv_match_all(pattern, text, mode, {CorrelationMethod::direct, with_witnesses});
    }
    timed.query_ns = elapsed_ns(start);
    break;
  }
  case Algo::kmp: {
    if (pattern.size() > text.size()) break;
    auto start = Clock::now();
    if (mode == MatchMode::fvc) {
      const FvcMatcher matcher(pattern, chunk_width);
      timed.preprocess_ns = elapsed_ns(start);
      start               = Clock::now();
      timed.report        = matcher.match(text, with_witnesses);
    } else {
      const PvcMatcher matcher(pattern, chunk_width);
      timed.preprocess_ns = elapsed_ns(start);
      start               = Clock::now();
      timed.report        = matcher.match(text, with_witnesses);
    }
    timed.query_ns = elapsed_ns(start);
    break;
  }
  case Algo::all: throw std::invalid_argument("run_backend needs a single backend");
  }
  return timed;
}

int run_find(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err)
{
  std::optional<ClassifiedInput> loaded;
  try {
    if (!is_supported_chunk_width(config.chunk_width)) throw InvalidInput("unsupported chunk width");
    const std::string pattern = load_pattern(config);
    const std::string text    = load_text(config, in);
    loaded.emplace(classify_input(pattern, text, make_charset(config.variables)));
  } catch (const InvalidInput& e) {
    err << "vcmatch: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  const ClassifiedInput& input = *loaded;

  const std::vector<Algo> algos =
      config.algo == Algo::all ? std::vector<Algo>{Algo::naive, Algo::conv, Algo::kmp} : std::vector<Algo>{config.algo};

  std::vector<TimedReport> runs;
  for (const Algo a : algos) {
    runs.push_back(run_backend(a, config.mode, input.pattern, input.text, config.chunk_width, config.witnesses));
    if (runs.back().used_direct_correlation)
      err << "vcmatch: convolution values too large for the transform; used direct correlation\n";
  }

  int status = kExitOk;
  for (std::size_t r = 1; r < runs.size(); ++r) {
    if (runs[r].report.positions != runs[0].report.positions) {
      status = kExitDisagreement;
      err << "vcmatch: backends disagree: " << to_string(algos[0]) << '='
          << positions_string(runs[0].report.positions) << ' ' << to_string(algos[r]) << '='
          << positions_string(runs[r].report.positions) << '\n';
    }
  }

  const MatchReport& report = runs.front().report;
  if (config.format == OutputFormat::json) {
    nlohmann::json doc;
    doc["positions"] = report.positions;
    doc["count"]     = report.positions.size();
    doc["algo"]      = to_string(config.algo);
    doc["mode"]      = to_string(config.mode);
    doc["m"]         = input.pattern.size();
    doc["n"]         = input.text.size();
    std::int64_t preprocess = 0;
    std::int64_t query      = 0;
    for (std::size_t r = 0; r < runs.size(); ++r) {
      preprocess += runs[r].preprocess_ns;
      query += runs[r].query_ns;
      if (algos.size() > 1)
        doc["backends"][std::string(to_string(algos[r]))] = {{"preprocess_ns", runs[r].preprocess_ns},
                                                             {"query_ns", runs[r].query_ns},
                                                             {"positions", runs[r].report.positions}};
    }
    doc["timings"] = {{"preprocess_ns", preprocess}, {"query_ns", query}};
    if (algos.size() > 1) doc["agree"] = status == kExitOk;
    if (config.witnesses) {
      doc["witnesses"] = nlohmann::json::array();
      for (const auto& [position, pi] : report.witnesses)
        doc["witnesses"].push_back({{"position", position}, {"substitution", witness_json(input.symbols, pi)}});
    }
    out << doc.dump() << '\n';
  } else {
    for (const std::size_t position : report.positions) {
      out << position;
      if (config.witnesses) {
        const auto it = report.witnesses.find(position);
        if (it != report.witnesses.end()) out << witness_line(input.symbols, it->second);
      }
      out << '\n';
    }
  }
  return status;
}

int run_crosscheck(const RunConfig& config, std::ostream& out, std::ostream& err)
{
  if (!is_supported_chunk_width(config.chunk_width)) {
    err << "vcmatch: unsupported chunk width\n";
    return kExitInvalidInput;
  }

  std::mt19937_64 rng(config.seed);
  for (std::size_t c = 0; c < config.cases; ++c) {
    RawInstance raw;
    try {
      raw = generate_instance(rng, config.generator);
    } catch (const std::invalid_argument& e) {
      err << "vcmatch: " << e.what() << '\n';
      return kExitInvalidInput;
    }
    const ClassifiedInput input = classify_input(raw.pattern, raw.text);

    for (const MatchMode mode : {MatchMode::fvc, MatchMode::pvc}) {
      const auto expected = naive_all(input.pattern, input.text, mode).positions;
      for (const Algo algo : {Algo::conv, Algo::kmp}) {
        const auto got =
            run_backend(algo, mode, input.pattern, input.text, config.chunk_width, false).report.positions;
        if (got == expected) continue;
        out << "counterexample after " << c << " agreeing cases\n"
            << "  pattern: " << raw.pattern << "\n  text:    " << raw.text << "\n  mode:    " << to_string(mode)
            << "\n  naive:   " << positions_string(expected) << "\n  " << to_string(algo)
            << ":" << std::string(8 - to_string(algo).size(), ' ') << positions_string(got) << '\n';
        return kExitDisagreement;
      }
    }
  }
  out << config.cases << '/' << config.cases << " agree\n";
  return kExitOk;
}

int run_bench(const RunConfig& config, std::ostream& out, std::ostream& err)
{
  if (!is_supported_chunk_width(config.chunk_width) || config.bench_m == 0 || config.bench_repeats == 0) {
    err << "vcmatch: invalid bench configuration\n";
    return kExitInvalidInput;
  }

  std::mt19937_64 rng(config.seed);
  GeneratorParams params;
  params.variables = config.bench_variables;
  params.constants = config.bench_constants;
  params.max_m     = config.bench_m;

  out << "algo,mode,m,n,pi,sigma_p,preprocess_ns,query_ns\n";
  for (const std::size_t n : config.bench_n) {
    if (n < config.bench_m) continue;
    // Fixed-length pattern and text: draw until the pattern has length m.
    params.max_n = n;
    RawInstance raw;
    do {
      raw = generate_instance(rng, params);
    } while (raw.pattern.size() != config.bench_m);
    while (raw.text.size() < n) raw.text += generate_instance(rng, params).text;
    raw.text.resize(n);
    const ClassifiedInput input = classify_input(raw.pattern, raw.text);

    for (const Algo algo : config.bench_algos) {
      for (const MatchMode mode : {MatchMode::fvc, MatchMode::pvc}) {
        run_backend(algo, mode, input.pattern, input.text, config.chunk_width, false);  // warm-up
        std::vector<std::int64_t> pre;
        std::vector<std::int64_t> query;
        for (std::size_t r = 0; r < config.bench_repeats; ++r) {
          const TimedReport t = run_backend(algo, mode, input.pattern, input.text, config.chunk_width, false);
          pre.push_back(t.preprocess_ns);
          query.push_back(t.query_ns);
        }
        std::nth_element(pre.begin(), pre.begin() + static_cast<std::ptrdiff_t>(pre.size() / 2), pre.end());
        std::nth_element(query.begin(), query.begin() + static_cast<std::ptrdiff_t>(query.size() / 2), query.end());
        out << to_string(algo) << ',' << to_string(mode) << ',' << input.pattern.size() << ',' << n << ','
            << input.pattern.variables().size() << ',' << input.pattern.constants().size() << ','
            << pre[pre.size() / 2] << ',' << query[query.size() / 2] << '\n';
      }
    }
  }
  return kExitOk;
}

}  // namespace vcmatch::cli
