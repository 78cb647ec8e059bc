#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "mvmatch/core.hpp"
#include "mvmatch/shift_table.hpp"

namespace mvmatch {

enum class Algorithm { naive, horspool };

std::string_view to_string(Algorithm algorithm) noexcept;
/// Throws InvalidConfig for names other than "naive" and "horspool".
Algorithm parse_algorithm(std::string_view name);

/// Work counters for one search.
///
/// A symbol read is one access to a text cell. Horspool counts, per alignment,
/// one read for the last-position comparison, one per verified offset, and
/// k-1 further reads for the shift: the gate view's cell is shared between the
/// comparison and the shift.
struct SearchStats {
  std::uint64_t alignments = 0;
  std::uint64_t symbol_reads = 0;
  std::uint64_t matches_found = 0;

  SearchStats& operator+=(const SearchStats& other) noexcept {
    alignments += other.alignments;
    symbol_reads += other.symbol_reads;
    matches_found += other.matches_found;
    return *this;
  }

  friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

struct InstrumentedResult {
  std::vector<Match> matches;
  SearchStats stats;
};

// All searches return every occurrence (overlaps included) in increasing order,
// an empty list when m > n, and throw RegistryMismatch when text and pattern
// come from different registries.

std::vector<Match> search_horspool(const MultiViewText& text, const Pattern& pattern);
/// Reuses a table already built for `pattern`.
std::vector<Match> search_horspool(const MultiViewText& text, const Pattern& pattern, const ShiftTable& table);
std::vector<Match> search_naive(const MultiViewText& text, const Pattern& pattern);

std::vector<Match> search(Algorithm algorithm, const MultiViewText& text, const Pattern& pattern);

InstrumentedResult search_horspool_instrumented(const MultiViewText& text, const Pattern& pattern);
InstrumentedResult search_naive_instrumented(const MultiViewText& text, const Pattern& pattern);
InstrumentedResult search_instrumented(Algorithm algorithm, const MultiViewText& text, const Pattern& pattern);

/// Window starts at which the Horspool loop body ran, in order.
std::vector<std::size_t> horspool_alignment_trace(const MultiViewText& text, const Pattern& pattern);

// OpenMP kernels. The window range is cut into contiguous chunks scanned
// independently; results equal the serial searches above.

struct ParallelOptions {
  int threads = 0;                   ///< 0 means the OpenMP default
  std::size_t min_chunk = 1u << 14;  ///< windows per chunk lower bound
};

std::vector<Match> search_horspool_parallel(const MultiViewText& text, const Pattern& pattern,
                                            const ParallelOptions& options = {});
std::vector<Match> search_naive_parallel(const MultiViewText& text, const Pattern& pattern,
                                         const ParallelOptions& options = {});

/// Threads available to the parallel kernels (1 without OpenMP).
int max_threads() noexcept;

}  // namespace mvmatch
