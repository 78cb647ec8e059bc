#pragma once

// Serial scan kernels shared by the plain, instrumented, traced and parallel
// searches. An observer receives one callback per alignment, per text-cell
// read (before the cell is touched), per shift and per match. NullObserver
// compiles away entirely.
//
// Both kernels scan window starts in [first, last] inclusive and append the
// matching starts to `out` in increasing order.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "mvmatch/core.hpp"
#include "mvmatch/shift_table.hpp"

namespace mvmatch::kernels {

struct NullObserver {
  void alignment(std::size_t) noexcept {}
  void read(ViewId, std::size_t) noexcept {}
  void shift(std::uint32_t) noexcept {}
  void match(std::size_t) noexcept {}
};

/// Column pointers for each pattern offset, resolved once per search.
inline std::vector<const SymbolId*> pattern_columns(const MultiViewText& text, const Pattern& pattern) {
  std::vector<const SymbolId*> columns;
  columns.reserve(pattern.size());
  for (const ViewId v : pattern.views()) columns.push_back(text.view(v).data());
  return columns;
}

/// Multi-view Horspool. At window j: compare the last pattern symbol against
/// its own view, on a hit verify offsets 0..m-2 left to right, then advance by
/// the minimum shift over the k symbols at j+m-1. The gate view's cell is read
/// once and reused for its shift.
template <class Observer>
void horspool_scan(const MultiViewText& text, const Pattern& pattern, const ShiftTable& table,
                   std::size_t first, std::size_t last, std::vector<Match>& out, Observer& obs) {
  const std::size_t m = pattern.size();
  const std::size_t tail = m - 1;
  const auto symbols = pattern.symbols();
  const auto columns = pattern_columns(text, pattern);
  const ViewId gate_view = pattern.views()[tail];
  const SymbolId gate = symbols[tail];
  const SymbolId* gate_column = columns[tail];

  // Views other than the gate view, read only for the shift.
  std::vector<ViewId> other_views;
  std::vector<const SymbolId*> other_columns;
  for (std::uint32_t v = 0; v < text.view_count(); ++v) {
    if (v == gate_view.value) continue;
    other_views.push_back(ViewId{v});
    other_columns.push_back(text.view(ViewId{v}).data());
  }
  const std::size_t other_count = other_columns.size();

  std::size_t j = first;
  while (j <= last) {
    obs.alignment(j);
    const std::size_t end = j + tail;
    obs.read(gate_view, end);
    const SymbolId c = gate_column[end];
    if (c == gate) {
      std::size_t q = 0;
      for (; q < tail; ++q) {
        obs.read(pattern.views()[q], j + q);
        if (columns[q][j + q] != symbols[q]) break;
      }
      if (q == tail) {
        out.push_back(Match{j});
        obs.match(j);
      }
    }
    std::uint32_t shift = table.lookup(c);
    for (std::size_t o = 0; o < other_count; ++o) {
      obs.read(other_views[o], end);
      shift = std::min(shift, table.lookup(other_columns[o][end]));
    }
    obs.shift(shift);
    j += shift;
  }
}

/// Brute force: every window, offsets 0..m-1 left to right, stop at the first mismatch.
template <class Observer>
void naive_scan(const MultiViewText& text, const Pattern& pattern, std::size_t first, std::size_t last,
                std::vector<Match>& out, Observer& obs) {
  const std::size_t m = pattern.size();
  const auto symbols = pattern.symbols();
  const auto views = pattern.views();
  const auto columns = pattern_columns(text, pattern);

  for (std::size_t i = first; i <= last; ++i) {
    obs.alignment(i);
    std::size_t q = 0;
    for (; q < m; ++q) {
      obs.read(views[q], i + q);
      if (columns[q][i + q] != symbols[q]) break;
    }
    if (q == m) {
      out.push_back(Match{i});
      obs.match(i);
    }
  }
}

}  // namespace mvmatch::kernels
