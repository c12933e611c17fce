// Copyright 2026 The qdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "qdist/corpus.hpp"
#include "qdist/errors.hpp"
#include "qdist/harness.hpp"
#include "qdist/report.hpp"

namespace qdist::cli {

namespace {

namespace fs = std::filesystem;

// A problem with the invocation itself rather than with the library.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::size_t parse_size(std::string_view text) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("not a count: \"" + std::string(text) + "\"");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t end = text.find(sep, start);
    parts.push_back(text.substr(start, end - start));
    if (end == std::string_view::npos) return parts;
    start = end + 1;
  }
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv(kSeedEnv); env != nullptr && *env != '\0') {
    std::uint64_t value = 0;
    const std::string_view text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw UsageError(std::string(kSeedEnv) + " is not an unsigned integer: \"" + env + "\"");
    }
    return value;
  }
  return kDefaultSeed;
}

std::vector<EncodingStrategy> parse_strategies(std::string_view text) {
  if (text == "all") return {};
  std::vector<EncodingStrategy> out;
  for (auto name : split(text, ',')) {
    const auto s = strategy_from_name(name);
    if (!s) throw UsageError("unknown strategy \"" + std::string(name) + "\"");
    out.push_back(*s);
  }
  return out;
}

std::vector<Family> parse_families(std::string_view text) {
  if (text == "all") return all_families();
  std::vector<Family> out;
  for (auto name : split(text, ',')) {
    const auto f = family_from_name(name);
    if (!f) throw UsageError("unknown family \"" + std::string(name) + "\"");
    out.push_back(*f);
  }
  return out;
}

std::vector<std::size_t> counts_or_usage(std::string_view text, std::string_view flag) {
  try {
    return parse_count_list(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

fs::path summary_path_for(const fs::path& csv) {
  fs::path p = csv;
  p.replace_extension(".summary.json");
  return p;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw QdistError("cannot open " + path.string() + " for writing");
  f << text;
  if (!f) throw QdistError("failed writing " + path.string());
}

void print_time_table(std::ostream& out, const Summary& s) {
  out << "strategy   records        mean_s      median_s      stddev_s\n";
  for (const auto& t : s.compile_time) {
    char line[128];
    std::snprintf(line, sizeof line, "%-9s %8zu %13.6g %13.6g %13.6g\n",
                  std::string(strategy_name(t.strategy)).c_str(), t.compile_time_s.count,
                  t.compile_time_s.mean, t.compile_time_s.median, t.compile_time_s.stddev);
    out << line;
  }
}

struct GenArgs {
  std::string out;
  std::optional<std::uint64_t> seed;
  std::string widths = "2..128:2";
  std::string families = "all";
  std::string random_seeds = "1,2,3";
};

struct RunArgs {
  std::string corpus;
  std::string out;
  std::string qpus = "2..10";
  double epsilon = kDefaultEpsilon;
  std::string strategies = "all";
  std::optional<std::uint64_t> seed;
  std::size_t jobs = 1;
  std::size_t repeats = 3;
  bool verbose = false;
};

struct SummarizeArgs {
  std::string in;
  std::string out;
};

struct VerifyArgs {
  std::string corpus;
  std::size_t max_width = 10;
  std::string qpus = "2..10";
  double epsilon = kDefaultEpsilon;
  std::optional<std::uint64_t> seed;
};

int gen_corpus(const GenArgs& a, std::ostream& out) {
  CorpusSpec spec;
  spec.seed = resolve_seed(a.seed);
  spec.families = parse_families(a.families);
  spec.widths = counts_or_usage(a.widths, "--widths");
  spec.random_seeds.clear();
  for (auto s : counts_or_usage(a.random_seeds, "--random-seeds")) spec.random_seeds.push_back(s);
  const auto paths = write_corpus(generate_corpus(spec), a.out);
  out << "wrote " << paths.size() << " circuits to " << a.out << "\n";
  return kOk;
}

RunConfig make_config(const std::string& qpus, double epsilon,
                      const std::optional<std::uint64_t>& seed) {
  RunConfig cfg;
  cfg.qpu_counts = counts_or_usage(qpus, "--qpus");
  cfg.epsilon = epsilon;
  cfg.seed = resolve_seed(seed);
  try {
    cfg.validate();
  } catch (const QdistError& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

int run_cmd(const RunArgs& a, std::ostream& out, std::ostream& err) {
  RunConfig cfg = make_config(a.qpus, a.epsilon, a.seed);
  cfg.strategies = parse_strategies(a.strategies);
  cfg.jobs = a.jobs;
  cfg.timing_repeats = a.repeats;
  try {
    cfg.validate();
  } catch (const QdistError& e) {
    throw UsageError(e.what());
  }
  const auto corpus = load_corpus(a.corpus);
  if (corpus.empty()) throw UsageError("no .qasm files in " + a.corpus);

  ProgressCallback progress;
  if (a.verbose) progress = [&err](const std::string& id) { err << "  " << id << "\n"; };
  const BenchmarkResult result = run_benchmark(corpus, cfg, progress);
  for (const auto& f : result.failures) {
    err << "warning: " << f.circuit_id << " failed and was skipped: " << f.message << "\n";
  }
  if (!result.skipped.empty()) {
    err << "note: skipped " << result.skipped.size() << " configurations with k > width\n";
  }
  write_csv_file(a.out, result.records);
  const fs::path summary = summary_path_for(a.out);
  write_text(summary, summary_to_json(summarize(result.records), result.failures, result.skipped));
  out << "wrote " << result.records.size() << " records to " << a.out << " and summary to "
      << summary.string() << "\n";
  return kOk;
}

int summarize_cmd(const SummarizeArgs& a, std::ostream& out) {
  const auto records = read_csv_file(a.in);
  const Summary s = summarize(records);
  write_text(a.out, summary_to_json(s));
  print_time_table(out, s);
  if (!s.circuits_dropped.empty()) {
    out << "dropped " << s.circuits_dropped.size() << " incomplete circuits\n";
  }
  return kOk;
}

int verify_cmd(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const RunConfig cfg = make_config(a.qpus, a.epsilon, a.seed);
  const auto corpus = load_corpus(a.corpus);
  const VerifyReport r = verify_corpus(corpus, cfg, a.max_width);
  for (const auto& f : r.failures) {
    err << "FAIL " << f.circuit_id << " " << f.stage << " k=" << f.k << ": " << f.message << "\n";
  }
  out << "verified " << r.circuits << " circuits, " << r.checks << " checks, "
      << r.failures.size() << " failures\n";
  return r.failures.empty() ? kOk : kInternalError;
}

}  // namespace

std::vector<std::size_t> parse_count_list(std::string_view text) {
  std::vector<std::size_t> out;
  if (const auto dots = text.find(".."); dots != std::string_view::npos) {
    std::string_view hi_text = text.substr(dots + 2);
    std::size_t step = 1;
    if (const auto colon = hi_text.find(':'); colon != std::string_view::npos) {
      step = parse_size(hi_text.substr(colon + 1));
      hi_text = hi_text.substr(0, colon);
    }
    const std::size_t lo = parse_size(text.substr(0, dots));
    const std::size_t hi = parse_size(hi_text);
    if (step == 0 || lo > hi) {
      throw std::invalid_argument("bad range \"" + std::string(text) + "\"");
    }
    for (std::size_t v = lo; v <= hi; v += step) out.push_back(v);
    return out;
  }
  for (auto item : split(text, ',')) out.push_back(parse_size(item));
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distributed quantum circuit compilation benchmark", "qdist"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen-corpus", "Write the benchmark corpus as QASM files");
  gen_cmd->add_option("--out", gen.out, "Output directory")->required();
  gen_cmd->add_option("--seed", gen.seed, "Seed for parametrised families");
  gen_cmd->add_option("--widths", gen.widths, "Widths: a..b[:step] or a,b,c")
      ->capture_default_str();
  gen_cmd->add_option("--families", gen.families, "all or a comma list")
      ->capture_default_str();
  gen_cmd->add_option("--random-seeds", gen.random_seeds, "Seeds of the random family")
      ->capture_default_str();

  RunArgs runa;
  auto* run_sub = app.add_subcommand("run", "Compile a corpus under every encoding");
  run_sub->add_option("--corpus", runa.corpus, "Directory of .qasm files")->required();
  run_sub->add_option("--out", runa.out, "Results CSV")->required();
  run_sub->add_option("--qpus", runa.qpus, "QPU counts: a..b or a,b,c")->capture_default_str();
  run_sub->add_option("--epsilon", runa.epsilon, "Imbalance tolerance")->capture_default_str();
  run_sub->add_option("--strategies", runa.strategies, "all or baseline,global,local,hybrid")
      ->capture_default_str();
  run_sub->add_option("--seed", runa.seed, "Partitioner seed (else $QDIST_SEED)");
  run_sub->add_option("--jobs", runa.jobs, "Threads for the untimed metrics phase")
      ->capture_default_str();
  run_sub->add_option("--repeats", runa.repeats, "Timed runs per record (minimum kept)")
      ->capture_default_str();
  run_sub->add_flag("--verbose", runa.verbose, "Print circuit ids as they run");

  SummarizeArgs sum;
  auto* sum_cmd = app.add_subcommand("summarize", "Aggregate a results CSV");
  sum_cmd->add_option("--in", sum.in, "Results CSV")->required();
  sum_cmd->add_option("--out", sum.out, "Summary JSON")->required();

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "Check every pipeline preserves the unitary");
  ver_cmd->add_option("--corpus", ver.corpus, "Directory of .qasm files")->required();
  ver_cmd->add_option("--max-width", ver.max_width, "Widest circuit to simulate")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{1}, std::size_t{10}));
  ver_cmd->add_option("--qpus", ver.qpus, "QPU counts: a..b or a,b,c")->capture_default_str();
  ver_cmd->add_option("--epsilon", ver.epsilon, "Imbalance tolerance")->capture_default_str();
  ver_cmd->add_option("--seed", ver.seed, "Partitioner seed (else $QDIST_SEED)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUserError;
  }

  try {
    if (gen_cmd->parsed()) return gen_corpus(gen, out);
    if (run_sub->parsed()) return run_cmd(runa, out, err);
    if (sum_cmd->parsed()) return summarize_cmd(sum, out);
    return verify_cmd(ver, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUserError;
  } catch (const QdistError& e) {
    err << "error: " << e.what() << "\n";
    return kUserError;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kUserError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace qdist::cli
