#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "kmm/bool_matrix.hpp"
#include "kmm/generate.hpp"
#include "kmm/instance_io.hpp"
#include "kmm/lb_reduction.hpp"
#include "kmm/oracle.hpp"
#include "kmm/pipeline.hpp"

namespace kmm::cli {
namespace {

// Guard for the brute-force oracle in `verify`.
constexpr double kVerifyLimit = 1e8;

struct InputOptions {
  std::string text_path;
  std::string pattern_path;
  long long k = 0;
  bool tokens = false;
  std::optional<std::uint64_t> seed;
  std::size_t reps = 0;
  std::size_t threshold = 0;
  int threads = 0;
};

void add_input_options(CLI::App* cmd, InputOptions& o) {
  cmd->add_option("text", o.text_path, "Text file")->required();
  cmd->add_option("pattern", o.pattern_path, "Pattern file")->required();
  cmd->add_option("k", o.k, "Mismatch budget")->required();
  cmd->add_flag("--tokens", o.tokens, "Whitespace-separated integer tokens instead of raw bytes");
  cmd->add_option("--seed", o.seed, "Random seed (falls back to $KMISMATCH_SEED, then 0)");
  cmd->add_option("--reps", o.reps, "Estimator repetitions (0: 64 * ceil(log2 m))");
  cmd->add_option("--threshold-t", o.threshold, "Heavy/light threshold (0: ceil(sqrt(m log2 m)))");
  cmd->add_option("--threads", o.threads, "Worker cap (0: all)");
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("KMISMATCH_SEED")) return std::stoull(env);
  return 0;
}

MatchConfig config_from(const InputOptions& o) {
  if (o.k < 0) throw std::invalid_argument("k must be non-negative");
  MatchConfig cfg;
  cfg.k = static_cast<std::size_t>(o.k);
  cfg.seed = resolve_seed(o.seed);
  cfg.repetitions = o.reps;
  cfg.threshold = o.threshold;
  cfg.threads = o.threads;
  return cfg;
}

std::pair<SymbolString, SymbolString> load(const InputOptions& o) {
  const auto format = o.tokens ? io::Format::Tokens : io::Format::Bytes;
  return {io::read_instance(o.text_path, format), io::read_instance(o.pattern_path, format)};
}

int cmd_match(const InputOptions& o, const std::string& algorithm, std::ostream& out) {
  auto cfg = config_from(o);
  const auto algo = parse_algorithm(algorithm);
  if (!algo) throw std::invalid_argument("unknown algorithm '" + algorithm + "'");
  cfg.algorithm = *algo;
  const auto [text, pattern] = load(o);
  write_report(out, match_all(text, pattern, cfg));
  return kOk;
}

int cmd_verify(const InputOptions& o, std::ostream& out, std::ostream& err) {
  auto cfg = config_from(o);
  cfg.algorithm = Algorithm::Paper;
  const auto [text, pattern] = load(o);
  if (static_cast<double>(text.size()) * static_cast<double>(pattern.size()) > kVerifyLimit) {
    err << "verify: instance too large for the brute-force oracle (n*m > 1e8)\n";
    return kUsage;
  }
  const auto expected = oracle::brute_distances(text, pattern, cfg.k);
  const auto actual = match_all(text, pattern, cfg);
  const int status = compare_reports(expected, actual, out);
  if (status == kOk) out << "verified " << actual.size() << " alignments\n";
  return status;
}

struct GenOptions {
  std::string kind;
  std::size_t n = 0, m = 0, sigma = 2, period = 1, plant = 0, text_plant = 0;
  std::size_t occurrences = 0, noise = 0;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> matrices;
  std::string text_out, pattern_out;
};

int cmd_gen(const GenOptions& g, std::ostream& out) {
  const std::uint64_t seed = resolve_seed(g.seed);
  gen::Instance inst;
  if (g.kind == "random") {
    inst = gen::random_instance(g.n, g.m, g.sigma, seed, g.occurrences, g.noise);
  } else if (g.kind == "periodic") {
    inst = gen::periodic_instance({g.n, g.m, g.period, g.sigma, g.plant, g.text_plant, seed});
  } else {
    if (g.matrices.size() != 2) throw std::invalid_argument("lb needs --from-matrices A B");
    std::ifstream fa(g.matrices[0]), fb(g.matrices[1]);
    if (!fa || !fb) throw std::runtime_error("cannot read matrix files");
    const auto lb_inst = lb::encode(read_bool_matrix(fa), read_bool_matrix(fb));
    inst = {lb_inst.text, lb_inst.pattern};
    out << "k " << lb_inst.mismatch_bound() << '\n';
  }
  io::write_instance(g.text_out, inst.text);
  io::write_instance(g.pattern_out, inst.pattern);
  out << "n " << inst.text.size() << "\nm " << inst.pattern.size() << '\n';
  return kOk;
}

struct BenchOptions {
  std::string suite = "alpha";
  std::string output;
  std::string kind = "periodic";
  std::size_t m = 4096, n = 0, k = 0;
  std::vector<std::string> algorithms{"paper", "lv", "abrahamson"};
  std::optional<std::uint64_t> seed;
  int threads = 0;
};

int cmd_bench(const BenchOptions& b, std::ostream& out) {
  const std::uint64_t seed = resolve_seed(b.seed);
  const std::size_t m = b.m, n = b.n ? b.n : 2 * b.m;
  if (m == 0 || m > n) throw std::invalid_argument("bench: need 0 < m <= n");
  std::vector<std::size_t> budgets;
  if (b.suite == "alpha") {
    for (int tenth = 5; tenth <= 10; ++tenth) {
      budgets.push_back(static_cast<std::size_t>(std::pow(static_cast<double>(m), tenth / 10.0)));
    }
  } else {
    budgets.push_back(b.k);
  }
  std::vector<Algorithm> algos;
  for (const auto& name : b.algorithms) {
    const auto a = parse_algorithm(name);
    if (!a) throw std::invalid_argument("unknown algorithm '" + name + "'");
    algos.push_back(*a);
  }

  std::ofstream csv(b.output);
  if (!csv) throw std::runtime_error("cannot write " + b.output);
  csv << "algorithm,n,m,k,seed,ms\n";
  for (std::size_t k : budgets) {
    gen::Instance inst;
    if (b.kind == "random") {
      inst = gen::random_instance(n, m, 26, seed, 4, k / 2);
    } else {
      const std::size_t period = std::max<std::size_t>(1, std::min<std::size_t>(k, 4));
      inst = gen::periodic_instance({n, m, period, 4, k / 2, (n / m) * (k / 2), seed});
    }
    for (Algorithm a : algos) {
      MatchConfig cfg;
      cfg.k = k;
      cfg.seed = seed;
      cfg.algorithm = a;
      cfg.threads = b.threads;
      const auto start = std::chrono::steady_clock::now();
      const auto report = match_all(inst.text, inst.pattern, cfg);
      const double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
              .count();
      csv << algorithm_name(a) << ',' << n << ',' << m << ',' << k << ',' << seed << ','
          << ms << '\n';
      out << algorithm_name(a) << " k=" << k << ' ' << ms << " ms (" << report.size()
          << " alignments)\n";
    }
  }
  return kOk;
}

}  // namespace

void write_report(std::ostream& out, const DistanceReport& report) {
  std::string buf;
  for (std::size_t i = 0; i < report.size(); ++i) {
    buf += std::to_string(i);
    buf += ' ';
    buf += report.entries[i] ? std::to_string(*report.entries[i]) : std::string("-");
    buf += '\n';
    if (buf.size() > (1u << 16)) {
      out << buf;
      buf.clear();
    }
  }
  out << buf;
}

int compare_reports(const DistanceReport& expected, const DistanceReport& actual,
                    std::ostream& out) {
  if (expected.size() != actual.size()) {
    out << "length differs: expected " << expected.size() << " alignments, got "
        << actual.size() << '\n';
    return kMismatch;
  }
  std::size_t diffs = 0;
  auto show = [](const Distance& d) { return d ? std::to_string(*d) : std::string("-"); };
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (expected.entries[i] == actual.entries[i]) continue;
    if (++diffs <= 20) {
      out << "position " << i << ": expected " << show(expected.entries[i]) << ", got "
          << show(actual.entries[i]) << '\n';
    }
  }
  if (diffs == 0) return kOk;
  out << diffs << " differing positions\n";
  return kMismatch;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"k-mismatch pattern matching"};
  app.require_subcommand(1);

  InputOptions match_opts;
  std::string algorithm = "auto";
  auto* match = app.add_subcommand("match", "Report distances for every alignment");
  add_input_options(match, match_opts);
  match->add_option("--algorithm", algorithm, "auto|brute|lv|abrahamson|paper")
      ->check(CLI::IsMember({"auto", "brute", "lv", "abrahamson", "paper"}));

  InputOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "Check the fast matcher against brute force");
  add_input_options(verify, verify_opts);

  GenOptions gen_opts;
  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("--kind", gen_opts.kind, "random|periodic|lb")
      ->required()
      ->check(CLI::IsMember({"random", "periodic", "lb"}));
  gen->add_option("--n", gen_opts.n, "Text length");
  gen->add_option("--m", gen_opts.m, "Pattern length");
  gen->add_option("--sigma", gen_opts.sigma, "Alphabet size");
  gen->add_option("--period", gen_opts.period, "Period of periodic instances");
  gen->add_option("--plant", gen_opts.plant, "Substitutions planted in the pattern");
  gen->add_option("--text-plant", gen_opts.text_plant, "Substitutions planted in the text");
  gen->add_option("--occurrences", gen_opts.occurrences, "Noisy pattern copies in random text");
  gen->add_option("--noise", gen_opts.noise, "Max substitutions per pasted copy");
  gen->add_option("--seed", gen_opts.seed, "Random seed");
  gen->add_option("--from-matrices", gen_opts.matrices, "Matrix files A and B (lb)")
      ->expected(2);
  gen->add_option("--text-out", gen_opts.text_out, "Text output path")->required();
  gen->add_option("--pattern-out", gen_opts.pattern_out, "Pattern output path")->required();

  BenchOptions bench_opts;
  auto* bench = app.add_subcommand("bench", "Time algorithms and write CSV");
  bench->add_option("--suite", bench_opts.suite, "alpha (k = m^a, a = 0.5..1.0) or single")
      ->check(CLI::IsMember({"alpha", "single"}));
  bench->add_option("--output", bench_opts.output, "CSV path")->required();
  bench->add_option("--kind", bench_opts.kind, "periodic|random")
      ->check(CLI::IsMember({"periodic", "random"}));
  bench->add_option("--m", bench_opts.m, "Pattern length");
  bench->add_option("--n", bench_opts.n, "Text length (default 2m)");
  bench->add_option("--k", bench_opts.k, "Budget for the single suite");
  bench->add_option("--algorithms", bench_opts.algorithms, "Algorithms to time")->delimiter(',');
  bench->add_option("--seed", bench_opts.seed, "Random seed");
  bench->add_option("--threads", bench_opts.threads, "Worker cap (0: all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (*match) return cmd_match(match_opts, algorithm, out);
    if (*verify) return cmd_verify(verify_opts, out, err);
    if (*gen) return cmd_gen(gen_opts, out);
    if (*bench) return cmd_bench(bench_opts, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace kmm::cli
