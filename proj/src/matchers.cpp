#include "mvmatch/matchers.hpp"

#include "mvmatch/kernels.hpp"

namespace mvmatch {

namespace {

struct CountingObserver {
  SearchStats stats;

  void alignment(std::size_t) noexcept { ++stats.alignments; }
  void read(ViewId, std::size_t) noexcept { ++stats.symbol_reads; }
  void shift(std::uint32_t) noexcept {}
  void match(std::size_t) noexcept { ++stats.matches_found; }
};

struct TraceObserver : kernels::NullObserver {
  std::vector<std::size_t> trace;

  void alignment(std::size_t j) { trace.push_back(j); }
};

bool fits(const MultiViewText& text, const Pattern& pattern) noexcept {
  return pattern.size() <= text.length();
}

std::size_t last_start(const MultiViewText& text, const Pattern& pattern) noexcept {
  return text.length() - pattern.size();
}

}  // namespace

std::string_view to_string(Algorithm algorithm) noexcept {
  switch (algorithm) {
    case Algorithm::naive:
      return "naive";
    case Algorithm::horspool:
      return "horspool";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "naive") return Algorithm::naive;
  if (name == "horspool") return Algorithm::horspool;
  throw InvalidConfig("unknown algorithm '" + std::string(name) + "'");
}

std::vector<Match> search_horspool(const MultiViewText& text, const Pattern& pattern, const ShiftTable& table) {
  require_same_registry(text, pattern);
  std::vector<Match> out;
  if (!fits(text, pattern)) return out;
  kernels::NullObserver obs;
  kernels::horspool_scan(text, pattern, table, 0, last_start(text, pattern), out, obs);
  return out;
}

std::vector<Match> search_horspool(const MultiViewText& text, const Pattern& pattern) {
  require_same_registry(text, pattern);
  return search_horspool(text, pattern, ShiftTable(pattern));
}

std::vector<Match> search_naive(const MultiViewText& text, const Pattern& pattern) {
  require_same_registry(text, pattern);
  std::vector<Match> out;
  if (!fits(text, pattern)) return out;
  kernels::NullObserver obs;
  kernels::naive_scan(text, pattern, 0, last_start(text, pattern), out, obs);
  return out;
}

std::vector<Match> search(Algorithm algorithm, const MultiViewText& text, const Pattern& pattern) {
  return algorithm == Algorithm::naive ? search_naive(text, pattern) : search_horspool(text, pattern);
}

InstrumentedResult search_horspool_instrumented(const MultiViewText& text, const Pattern& pattern) {
  require_same_registry(text, pattern);
  InstrumentedResult result;
  if (!fits(text, pattern)) return result;
  const ShiftTable table(pattern);
  CountingObserver obs;
  kernels::horspool_scan(text, pattern, table, 0, last_start(text, pattern), result.matches, obs);
  result.stats = obs.stats;
  return result;
}

InstrumentedResult search_naive_instrumented(const MultiViewText& text, const Pattern& pattern) {
  require_same_registry(text, pattern);
  InstrumentedResult result;
  if (!fits(text, pattern)) return result;
  CountingObserver obs;
  kernels::naive_scan(text, pattern, 0, last_start(text, pattern), result.matches, obs);
  result.stats = obs.stats;
  return result;
}

InstrumentedResult search_instrumented(Algorithm algorithm, const MultiViewText& text, const Pattern& pattern) {
  return algorithm == Algorithm::naive ? search_naive_instrumented(text, pattern)
                                       : search_horspool_instrumented(text, pattern);
}

std::vector<std::size_t> horspool_alignment_trace(const MultiViewText& text, const Pattern& pattern) {
  require_same_registry(text, pattern);
  if (!fits(text, pattern)) return {};
  const ShiftTable table(pattern);
  std::vector<Match> matches;
  TraceObserver obs;
  kernels::horspool_scan(text, pattern, table, 0, last_start(text, pattern), matches, obs);
  return std::move(obs.trace);
}

}  // namespace mvmatch
