#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mvmatch/core.hpp"

namespace mvmatch {

/// Bad-character shifts for a multi-view pattern.
///
/// For a symbol c occurring among p[0..m-2], the shift is the distance from
/// the last pattern position to the latest such occurrence, m-1-q. A symbol
/// seen only at the last position, or not at all, shifts by m. Every shift
/// lies in [1, m], so a search driven by this table always makes progress.
///
/// Symbol ids are globally unique across views, so a single table serves the
/// min-over-views rule of the search. Storage is dense up to the largest id
/// stored; ids beyond it fall through to the default.
class ShiftTable {
 public:
  explicit ShiftTable(const Pattern& pattern);

  std::uint32_t lookup(SymbolId c) const noexcept {
    return c.value < shifts_.size() ? shifts_[c.value] : default_shift_;
  }

  std::uint32_t default_shift() const noexcept { return default_shift_; }

  /// Symbols with a shift below the default, in ascending id order.
  std::vector<std::pair<SymbolId, std::uint32_t>> entries() const;

 private:
  std::vector<std::uint32_t> shifts_;
  std::uint32_t default_shift_;
};

inline ShiftTable build_shift_table(const Pattern& pattern) { return ShiftTable(pattern); }

}  // namespace mvmatch
