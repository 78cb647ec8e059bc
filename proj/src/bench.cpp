#include "mvmatch/bench.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <ostream>

namespace mvmatch {

namespace {

constexpr std::size_t kTimedBlock = 16;

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::size_t algorithm_slot(Algorithm a) noexcept { return a == Algorithm::naive ? 0 : 1; }

GenConfig gen_config(const BenchConfig& config, std::size_t m, std::size_t index) {
  return GenConfig{config.k, config.n, config.sigma, m, instance_seed(config.seed, m, index), config.mode};
}

using Totals = std::array<BenchRow, 2>;

void add_counts(Totals& totals, const std::vector<Algorithm>& algorithms, const Instance& instance) {
  for (const Algorithm a : algorithms) {
    const auto result = search_instrumented(a, instance.text, instance.pattern);
    auto& row = totals[algorithm_slot(a)];
    row.total_alignments += result.stats.alignments;
    row.total_symbol_reads += result.stats.symbol_reads;
    row.total_matches += result.stats.matches_found;
  }
}

void run_timed(const BenchConfig& config, const RegistryPtr& registry, std::size_t m, Totals& totals) {
  using Clock = std::chrono::steady_clock;
  for (std::size_t begin = 0; begin < config.instances_per_m; begin += kTimedBlock) {
    const std::size_t end = std::min(begin + kTimedBlock, config.instances_per_m);
    std::vector<Instance> block;
    block.reserve(end - begin);
    for (std::size_t i = begin; i < end; ++i) block.push_back(generate_instance(gen_config(config, m, i), registry));

    std::vector<ShiftTable> tables;
    if (!config.include_preprocessing) {
      for (const auto& inst : block) tables.emplace_back(inst.pattern);
    }

    for (const Algorithm a : config.algorithms) {
      auto& row = totals[algorithm_slot(a)];
      std::uint64_t matches = 0;
      const auto start = Clock::now();
      for (std::size_t b = 0; b < block.size(); ++b) {
        const auto& inst = block[b];
        if (a == Algorithm::naive) {
          matches += search_naive(inst.text, inst.pattern).size();
        } else if (config.include_preprocessing) {
          matches += search_horspool(inst.text, inst.pattern).size();
        } else {
          matches += search_horspool(inst.text, inst.pattern, tables[b]).size();
        }
      }
      row.total_time_s += std::chrono::duration<double>(Clock::now() - start).count();
      if (!config.measure_counts) row.total_matches += matches;
    }

    if (config.measure_counts) {
      for (const auto& inst : block) add_counts(totals, config.algorithms, inst);
    }
  }
}

void run_counts(const BenchConfig& config, const RegistryPtr& registry, std::size_t m, Totals& totals,
                bool parallel) {
  const auto count = static_cast<std::ptrdiff_t>(config.instances_per_m);
  std::vector<Totals> per_instance(config.instances_per_m);
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto inst = generate_instance(gen_config(config, m, static_cast<std::size_t>(i)), registry);
    add_counts(per_instance[static_cast<std::size_t>(i)], config.algorithms, inst);
  }
  for (const auto& t : per_instance) {
    for (std::size_t s = 0; s < totals.size(); ++s) {
      totals[s].total_alignments += t[s].total_alignments;
      totals[s].total_symbol_reads += t[s].total_symbol_reads;
      totals[s].total_matches += t[s].total_matches;
    }
  }
}

}  // namespace

void BenchConfig::validate() const {
  if (m_values.empty()) throw InvalidConfig("m_values must not be empty");
  if (instances_per_m < 1) throw InvalidConfig("instances_per_m must be >= 1");
  if (algorithms.empty()) throw InvalidConfig("at least one algorithm is required");
  if (!measure_time && !measure_counts) throw InvalidConfig("nothing to measure");
  for (const std::size_t m : m_values) {
    GenConfig{k, n, sigma, m, seed, mode}.validate();
  }
}

std::uint64_t instance_seed(std::uint64_t base, std::size_t m, std::size_t index) noexcept {
  return splitmix64(splitmix64(splitmix64(base) ^ m) ^ index);
}

BenchReport run_benchmark(const BenchConfig& input) {
  input.validate();
  BenchConfig config = input;
  std::sort(config.algorithms.begin(), config.algorithms.end(),
            [](Algorithm a, Algorithm b) { return to_string(a) < to_string(b); });
  config.algorithms.erase(std::unique(config.algorithms.begin(), config.algorithms.end()), config.algorithms.end());
  std::sort(config.m_values.begin(), config.m_values.end());
  config.m_values.erase(std::unique(config.m_values.begin(), config.m_values.end()), config.m_values.end());

  BenchReport report;
  report.include_preprocessing = config.include_preprocessing;
  report.parallel = !config.measure_time && config.parallel && max_threads() > 1;

  const auto registry = synthetic_registry(config.k, config.sigma);
  for (const std::size_t m : config.m_values) {
    Totals totals{};
    if (config.measure_time) {
      run_timed(config, registry, m, totals);
    } else {
      run_counts(config, registry, m, totals, report.parallel);
    }
    for (const Algorithm a : config.algorithms) {
      BenchRow row = totals[algorithm_slot(a)];
      row.m = m;
      row.algorithm = a;
      row.instances = config.instances_per_m;
      report.rows.push_back(row);
    }
  }
  return report;
}

void write_csv(std::span<const BenchRow> rows, std::ostream& out) {
  if (rows.empty()) throw InvalidConfig("no benchmark rows to write");
  std::vector<BenchRow> sorted(rows.begin(), rows.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const BenchRow& a, const BenchRow& b) {
    if (a.m != b.m) return a.m < b.m;
    return to_string(a.algorithm) < to_string(b.algorithm);
  });
  out << "m,algorithm,instances,total_time_s,total_symbol_reads,total_alignments,total_matches\n";
  char time_buf[64];
  for (const auto& row : sorted) {
    std::snprintf(time_buf, sizeof time_buf, "%.6f", row.total_time_s);
    out << row.m << ',' << to_string(row.algorithm) << ',' << row.instances << ',' << time_buf << ','
        << row.total_symbol_reads << ',' << row.total_alignments << ',' << row.total_matches << '\n';
  }
}

void write_csv(std::span<const BenchRow> rows, const std::filesystem::path& path) {
  if (rows.empty()) throw InvalidConfig("no benchmark rows to write");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  write_csv(rows, out);
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace mvmatch
