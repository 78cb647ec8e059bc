#include <algorithm>

#include "mvmatch/kernels.hpp"
#include "mvmatch/matchers.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace mvmatch {

namespace {

struct Chunk {
  std::size_t first;
  std::size_t last;  // inclusive
};

std::vector<Chunk> split_windows(std::size_t windows, int threads, std::size_t min_chunk) {
  const std::size_t by_size = (windows + min_chunk - 1) / std::max<std::size_t>(min_chunk, 1);
  const std::size_t count = std::clamp<std::size_t>(by_size, 1, static_cast<std::size_t>(threads) * 4);
  std::vector<Chunk> chunks;
  chunks.reserve(count);
  const std::size_t base = windows / count;
  const std::size_t extra = windows % count;
  std::size_t first = 0;
  for (std::size_t c = 0; c < count; ++c) {
    const std::size_t len = base + (c < extra ? 1 : 0);
    chunks.push_back({first, first + len - 1});
    first += len;
  }
  return chunks;
}

// A Horspool scan started at any window finds every match at or after it, so
// chunks can be scanned independently and concatenated in chunk order.
template <class Scan>
std::vector<Match> run_chunked(const MultiViewText& text, const Pattern& pattern, const ParallelOptions& options,
                               Scan scan) {
  require_same_registry(text, pattern);
  if (pattern.size() > text.length()) return {};
  const std::size_t windows = text.length() - pattern.size() + 1;
  const int threads = options.threads > 0 ? options.threads : max_threads();
  const auto chunks = split_windows(windows, threads, options.min_chunk);

  std::vector<std::vector<Match>> partial(chunks.size());
  const auto count = static_cast<std::ptrdiff_t>(chunks.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::ptrdiff_t c = 0; c < count; ++c) {
    scan(chunks[c].first, chunks[c].last, partial[c]);
  }

  std::size_t total = 0;
  for (const auto& part : partial) total += part.size();
  std::vector<Match> out;
  out.reserve(total);
  for (const auto& part : partial) out.insert(out.end(), part.begin(), part.end());
  return out;
}

}  // namespace

int max_threads() noexcept {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<Match> search_horspool_parallel(const MultiViewText& text, const Pattern& pattern,
                                            const ParallelOptions& options) {
  const ShiftTable table(pattern);
  return run_chunked(text, pattern, options, [&](std::size_t first, std::size_t last, std::vector<Match>& out) {
    kernels::NullObserver obs;
    kernels::horspool_scan(text, pattern, table, first, last, out, obs);
  });
}

std::vector<Match> search_naive_parallel(const MultiViewText& text, const Pattern& pattern,
                                         const ParallelOptions& options) {
  return run_chunked(text, pattern, options, [&](std::size_t first, std::size_t last, std::vector<Match>& out) {
    kernels::NullObserver obs;
    kernels::naive_scan(text, pattern, first, last, out, obs);
  });
}

}  // namespace mvmatch
