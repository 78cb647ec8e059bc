#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "mvmatch/core.hpp"

namespace mvmatch {

enum class PatternMode {
  uniform,  ///< pattern symbols i.i.d. over the union of all view alphabets
  planted,  ///< pattern copied from a random window, one random view per offset
};

std::string_view to_string(PatternMode mode) noexcept;
PatternMode parse_pattern_mode(std::string_view name);

struct GenConfig {
  std::size_t k = 3;
  std::size_t n = 100000;
  std::size_t sigma = 10;
  std::size_t m = 10;
  std::uint64_t seed = 0;
  PatternMode mode = PatternMode::uniform;

  /// Throws InvalidConfig naming the first violated bound.
  void validate() const;
};

struct Instance {
  MultiViewText text;
  Pattern pattern;
  std::optional<std::size_t> planted_at;  ///< set in planted mode
};

/// Token of symbol `index` in view `view`, e.g. "v0_3".
std::string synthetic_token(std::size_t view, std::size_t index);

/// Registry with views "v0".."v<k-1>", each holding `sigma` synthetic tokens.
/// Symbol `i` of view `v` gets id v * sigma + i.
RegistryPtr synthetic_registry(std::size_t k, std::size_t sigma);

/// Deterministic in `config`: texts are i.i.d. uniform per view from a
/// std::mt19937_64 seeded with config.seed, then the pattern is drawn.
Instance generate_instance(const GenConfig& config);
Instance generate_instance(const GenConfig& config, RegistryPtr registry);

}  // namespace mvmatch
