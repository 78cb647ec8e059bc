#include "mvmatch/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>

#include "mvmatch/bench.hpp"
#include "mvmatch/matchers.hpp"
#include "mvmatch/synth.hpp"
#include "mvmatch/text_format.hpp"

namespace mvmatch::cli {

namespace {

constexpr int kExitMatch = 0;
constexpr int kExitNoMatch = 1;
constexpr int kExitError = 2;

// Returns an exit code when parsing ends the command (help or error).
std::optional<int> parse_args(CLI::App& app, const std::vector<std::string>& args, std::ostream& out,
                              std::ostream& err) {
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "mvmatch " << app.get_name() << ": " << e.what() << '\n';
    return kExitError;
  }
  return std::nullopt;
}

std::string format_ratio(double numerator, double denominator) {
  if (denominator <= 0.0) return "-";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", numerator / denominator);
  return buf;
}

std::string format_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", s);
  return buf;
}

}  // namespace

int cmd_search(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Report every position where a multi-view pattern occurs", "search"};
  std::string text_path;
  std::string pattern_string;
  std::string pattern_path;
  std::string algorithm_name = "horspool";
  int base = 0;
  bool count_only = false;
  bool stats = false;
  int threads = 1;

  app.add_option("--text", text_path, "Multi-track text file")->required();
  auto* pattern_opt = app.add_option("--pattern", pattern_string, "Whitespace-separated pattern tokens");
  auto* pattern_file_opt = app.add_option("--pattern-file", pattern_path, "File holding the pattern tokens");
  pattern_opt->excludes(pattern_file_opt);
  app.add_option("--algorithm", algorithm_name, "horspool or naive")
      ->check(CLI::IsMember({"horspool", "naive"}))
      ->capture_default_str();
  app.add_option("--base", base, "Index base of printed positions (0 or 1)")
      ->check(CLI::IsMember({0, 1}))
      ->capture_default_str();
  app.add_flag("--count", count_only, "Print the number of matches only");
  app.add_flag("--stats", stats, "Print search counters to stderr (runs serially)");
  app.add_option("--threads", threads, "Threads for the parallel kernel; 1 runs serially")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  if (auto code = parse_args(app, args, out, err)) return *code;
  if (pattern_opt->count() == 0 && pattern_file_opt->count() == 0) {
    err << "mvmatch search: one of --pattern or --pattern-file is required\n";
    return kExitError;
  }

  try {
    const MultiViewText text = read_text_file(text_path);
    const std::string source = pattern_file_opt->count() ? read_file(pattern_path) : pattern_string;
    const Pattern pattern = parse_pattern_string(source, text.registry_ptr());
    const Algorithm algorithm = parse_algorithm(algorithm_name);

    std::vector<Match> matches;
    if (stats) {
      auto result = search_instrumented(algorithm, text, pattern);
      matches = std::move(result.matches);
      err << "alignments=" << result.stats.alignments << " symbol_reads=" << result.stats.symbol_reads
          << " matches=" << result.stats.matches_found << '\n';
    } else if (threads > 1) {
      const ParallelOptions options{threads};
      matches = algorithm == Algorithm::naive ? search_naive_parallel(text, pattern, options)
                                              : search_horspool_parallel(text, pattern, options);
    } else {
      matches = search(algorithm, text, pattern);
    }

    if (count_only) {
      out << matches.size() << '\n';
    } else {
      for (const Match& match : matches) out << match.start + static_cast<std::size_t>(base) << '\n';
    }
    return matches.empty() ? kExitNoMatch : kExitMatch;
  } catch (const Error& e) {
    err << "mvmatch search: " << e.what() << '\n';
    return kExitError;
  }
}

int cmd_gen(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generate a random multi-view instance", "gen"};
  GenConfig config;
  std::string mode_name = "uniform";
  std::string text_path;
  std::string pattern_path;

  app.add_option("--k", config.k, "Number of views")->capture_default_str();
  app.add_option("--n", config.n, "Text length")->capture_default_str();
  app.add_option("--sigma", config.sigma, "Alphabet size per view")->capture_default_str();
  app.add_option("--m", config.m, "Pattern length")->capture_default_str();
  app.add_option("--seed", config.seed, "Generator seed")->capture_default_str();
  app.add_option("--mode", mode_name, "uniform or planted")
      ->check(CLI::IsMember({"uniform", "planted"}))
      ->capture_default_str();
  app.add_option("--out-text", text_path, "Destination of the multi-track text")->required();
  app.add_option("--out-pattern", pattern_path, "Destination of the pattern tokens")->required();

  if (auto code = parse_args(app, args, out, err)) return *code;

  try {
    config.mode = parse_pattern_mode(mode_name);
    const Instance instance = generate_instance(config);
    write_text_file(text_path, instance.text);
    {
      std::ofstream pattern_out(pattern_path, std::ios::binary | std::ios::trunc);
      if (!pattern_out) throw IoError("cannot open '" + pattern_path + "' for writing");
      pattern_out << format_pattern(instance.pattern) << '\n';
      pattern_out.flush();
      if (!pattern_out) throw IoError("failed writing '" + pattern_path + "'");
    }
    out << "k=" << config.k << " n=" << config.n << " sigma=" << config.sigma << " m=" << config.m
        << " seed=" << config.seed << " mode=" << to_string(config.mode);
    if (instance.planted_at) out << " planted_at=" << *instance.planted_at;
    out << '\n';
    return 0;
  } catch (const Error& e) {
    err << "mvmatch gen: " << e.what() << '\n';
    return kExitError;
  }
}

int cmd_bench(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compare naive and multi-view Horspool search on generated instances", "bench"};
  BenchConfig config;
  std::size_t m_min = 2;
  std::size_t m_max = 30;
  std::vector<std::size_t> m_list;
  std::vector<std::string> algorithm_names{"naive", "horspool"};
  std::string mode_name = "uniform";
  std::string csv_path;
  bool counts_only = false;
  bool exclude_preprocessing = false;
  bool serial = false;

  app.add_option("--k", config.k, "Number of views")->capture_default_str();
  app.add_option("--n", config.n, "Text length")->capture_default_str();
  app.add_option("--sigma", config.sigma, "Alphabet size per view")->capture_default_str();
  auto* min_opt = app.add_option("--m-min", m_min, "Smallest pattern length")->capture_default_str();
  auto* max_opt = app.add_option("--m-max", m_max, "Largest pattern length")->capture_default_str();
  auto* list_opt = app.add_option("--m-list", m_list, "Comma-separated pattern lengths")->delimiter(',');
  list_opt->excludes(min_opt)->excludes(max_opt);
  app.add_option("--instances", config.instances_per_m, "Instances per pattern length")->capture_default_str();
  app.add_option("--seed", config.seed, "Base seed")->capture_default_str();
  app.add_option("--algorithms", algorithm_names, "Comma-separated subset of naive,horspool")
      ->delimiter(',')
      ->check(CLI::IsMember({"naive", "horspool"}));
  app.add_option("--mode", mode_name, "uniform or planted")
      ->check(CLI::IsMember({"uniform", "planted"}))
      ->capture_default_str();
  app.add_option("--csv", csv_path, "Destination CSV file")->required();
  app.add_flag("--counts-only", counts_only, "Skip wall-time measurement");
  app.add_flag("--exclude-preprocessing", exclude_preprocessing, "Build shift tables outside the timed region");
  app.add_flag("--serial", serial, "Never run instances on several threads");

  if (auto code = parse_args(app, args, out, err)) return *code;

  try {
    if (m_list.empty()) {
      if (m_min > m_max) throw InvalidConfig("--m-min exceeds --m-max");
      for (std::size_t m = m_min; m <= m_max; ++m) m_list.push_back(m);
    }
    config.m_values = m_list;
    config.algorithms.clear();
    for (const auto& name : algorithm_names) config.algorithms.push_back(parse_algorithm(name));
    config.mode = parse_pattern_mode(mode_name);
    config.measure_time = !counts_only;
    config.measure_counts = true;
    config.include_preprocessing = !exclude_preprocessing;
    config.parallel = !serial;

    const BenchReport report = run_benchmark(config);
    write_csv(report.rows, std::filesystem::path(csv_path));

    out << "# k=" << config.k << " n=" << config.n << " sigma=" << config.sigma << " mode=" << to_string(config.mode)
        << " instances=" << config.instances_per_m << " seed=" << config.seed
        << " preprocessing=" << (report.include_preprocessing ? "timed" : "untimed")
        << " parallel=" << (report.parallel ? "yes" : "no") << '\n';
    out << "# symbol reads: naive counts every compared cell; horspool counts the last-position cell, "
           "each verified cell, and the k-1 other views' cells read for the shift\n"
           "# every instance draws a fresh text and pattern; all algorithms run on the same instances\n";
    out << "m\tnaive_s\thorspool_s\ttime_ratio\tread_ratio\n";
    for (std::size_t r = 0; r < report.rows.size();) {
      const std::size_t m = report.rows[r].m;
      const BenchRow* naive = nullptr;
      const BenchRow* horspool = nullptr;
      for (; r < report.rows.size() && report.rows[r].m == m; ++r) {
        (report.rows[r].algorithm == Algorithm::naive ? naive : horspool) = &report.rows[r];
      }
      const bool both = naive && horspool;
      out << m << '\t' << (naive && !counts_only ? format_seconds(naive->total_time_s) : "-") << '\t'
          << (horspool && !counts_only ? format_seconds(horspool->total_time_s) : "-") << '\t'
          << (both && !counts_only ? format_ratio(naive->total_time_s, horspool->total_time_s) : "-") << '\t'
          << (both ? format_ratio(static_cast<double>(naive->total_symbol_reads),
                                  static_cast<double>(horspool->total_symbol_reads))
                   : "-")
          << '\n';
    }
    return 0;
  } catch (const Error& e) {
    err << "mvmatch bench: " << e.what() << '\n';
    return kExitError;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  static constexpr const char* kUsage =
      "usage: mvmatch <command> [options]\n"
      "\n"
      "commands:\n"
      "  search   find a pattern in a multi-track text file\n"
      "  gen      write a random instance (text + pattern)\n"
      "  bench    compare naive and Horspool search, write CSV\n"
      "\n"
      "Run 'mvmatch <command> --help' for the options of a command.\n";
  if (args.empty()) {
    err << kUsage;
    return kExitError;
  }
  const std::string& command = args.front();
  const std::vector<std::string> rest(args.begin() + 1, args.end());
  if (command == "search") return cmd_search(rest, out, err);
  if (command == "gen") return cmd_gen(rest, out, err);
  if (command == "bench") return cmd_bench(rest, out, err);
  if (command == "-h" || command == "--help" || command == "help") {
    out << kUsage;
    return 0;
  }
  err << "mvmatch: unknown command '" << command << "'\n" << kUsage;
  return kExitError;
}

}  // namespace mvmatch::cli
