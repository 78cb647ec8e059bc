#include "mvmatch/shift_table.hpp"

#include <algorithm>
#include <limits>

namespace mvmatch {

ShiftTable::ShiftTable(const Pattern& pattern) {
  const auto symbols = pattern.symbols();
  const std::size_t m = symbols.size();
  if (m > std::numeric_limits<std::uint32_t>::max()) throw InvalidConfig("pattern too long");
  default_shift_ = static_cast<std::uint32_t>(m);

  std::uint32_t max_id = 0;
  for (std::size_t q = 0; q + 1 < m; ++q) max_id = std::max(max_id, symbols[q].value);
  if (m > 1) shifts_.assign(std::size_t{max_id} + 1, default_shift_);

  // Later occurrences overwrite earlier ones with smaller distances.
  for (std::size_t q = 0; q + 1 < m; ++q) {
    shifts_[symbols[q].value] = static_cast<std::uint32_t>(m - 1 - q);
  }
}

std::vector<std::pair<SymbolId, std::uint32_t>> ShiftTable::entries() const {
  std::vector<std::pair<SymbolId, std::uint32_t>> out;
  for (std::size_t id = 0; id < shifts_.size(); ++id) {
    if (shifts_[id] != default_shift_) out.emplace_back(SymbolId{static_cast<std::uint32_t>(id)}, shifts_[id]);
  }
  return out;
}

}  // namespace mvmatch
