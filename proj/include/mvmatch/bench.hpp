#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "mvmatch/matchers.hpp"
#include "mvmatch/synth.hpp"

namespace mvmatch {

struct BenchConfig {
  std::size_t k = 3;
  std::size_t n = 100000;
  std::size_t sigma = 10;
  PatternMode mode = PatternMode::uniform;
  std::vector<std::size_t> m_values;
  std::size_t instances_per_m = 100;
  std::vector<Algorithm> algorithms{Algorithm::naive, Algorithm::horspool};
  bool measure_time = true;
  bool measure_counts = true;
  std::uint64_t seed = 1;
  /// Time the shift-table build along with the search.
  bool include_preprocessing = true;
  /// Spread instances over OpenMP threads. Honored only when wall time is not
  /// measured, so timed batches never share the machine with siblings.
  bool parallel = true;

  void validate() const;
};

struct BenchRow {
  std::size_t m = 0;
  Algorithm algorithm = Algorithm::naive;
  std::size_t instances = 0;
  double total_time_s = 0.0;
  std::uint64_t total_symbol_reads = 0;
  std::uint64_t total_alignments = 0;
  std::uint64_t total_matches = 0;
};

struct BenchReport {
  std::vector<BenchRow> rows;  ///< m ascending, then algorithm name
  bool parallel = false;       ///< whether instances actually ran on several threads
  bool include_preprocessing = true;
};

/// Seed of instance `index` in the batch for pattern length `m`.
std::uint64_t instance_seed(std::uint64_t base, std::size_t m, std::size_t index) noexcept;

/// Every algorithm sees the same generated instances for a given (m, index).
BenchReport run_benchmark(const BenchConfig& config);

/// Header plus one line per row; throws InvalidConfig on an empty row set.
void write_csv(std::span<const BenchRow> rows, std::ostream& out);
/// Throws IoError when the file cannot be written.
void write_csv(std::span<const BenchRow> rows, const std::filesystem::path& path);

}  // namespace mvmatch
