#include "mvmatch/synth.hpp"

#include <limits>
#include <random>

namespace mvmatch {

std::string_view to_string(PatternMode mode) noexcept {
  return mode == PatternMode::planted ? "planted" : "uniform";
}

PatternMode parse_pattern_mode(std::string_view name) {
  if (name == "uniform") return PatternMode::uniform;
  if (name == "planted") return PatternMode::planted;
  throw InvalidConfig("unknown pattern mode '" + std::string(name) + "'");
}

void GenConfig::validate() const {
  if (k < 1) throw InvalidConfig("k must be >= 1");
  if (n < 1) throw InvalidConfig("n must be >= 1");
  if (sigma < 1) throw InvalidConfig("sigma must be >= 1");
  if (m < 1) throw InvalidConfig("m must be >= 1");
  if (mode == PatternMode::planted && m > n) throw InvalidConfig("planted mode requires m <= n");
  if (k * sigma > std::numeric_limits<std::uint32_t>::max() / 2) throw InvalidConfig("k * sigma too large");
}

std::string synthetic_token(std::size_t view, std::size_t index) {
  return "v" + std::to_string(view) + "_" + std::to_string(index);
}

RegistryPtr synthetic_registry(std::size_t k, std::size_t sigma) {
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> alphabets(k);
  for (std::size_t v = 0; v < k; ++v) {
    names.push_back("v" + std::to_string(v));
    alphabets[v].reserve(sigma);
    for (std::size_t i = 0; i < sigma; ++i) alphabets[v].push_back(synthetic_token(v, i));
  }
  return build_registry(std::move(names), alphabets);
}

Instance generate_instance(const GenConfig& config) {
  config.validate();
  return generate_instance(config, synthetic_registry(config.k, config.sigma));
}

Instance generate_instance(const GenConfig& config, RegistryPtr registry) {
  config.validate();
  if (registry->view_count() != config.k || registry->symbol_count() != config.k * config.sigma) {
    throw InvalidConfig("registry does not match k and sigma");
  }
  const auto sigma = static_cast<std::uint32_t>(config.sigma);
  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<std::uint32_t> symbol_dist(0, sigma - 1);

  std::vector<std::vector<SymbolId>> views(config.k);
  for (std::size_t v = 0; v < config.k; ++v) {
    const auto offset = static_cast<std::uint32_t>(v) * sigma;
    views[v].resize(config.n);
    for (auto& cell : views[v]) cell = SymbolId{offset + symbol_dist(rng)};
  }

  std::vector<SymbolId> symbols(config.m);
  std::optional<std::size_t> planted_at;
  if (config.mode == PatternMode::uniform) {
    std::uniform_int_distribution<std::uint32_t> union_dist(0, static_cast<std::uint32_t>(config.k) * sigma - 1);
    for (auto& s : symbols) s = SymbolId{union_dist(rng)};
  } else {
    std::uniform_int_distribution<std::size_t> start_dist(0, config.n - config.m);
    std::uniform_int_distribution<std::size_t> view_dist(0, config.k - 1);
    const std::size_t start = start_dist(rng);
    for (std::size_t q = 0; q < config.m; ++q) symbols[q] = views[view_dist(rng)][start + q];
    planted_at = start;
  }

  MultiViewText text(registry, std::move(views));
  Pattern pattern(std::move(registry), std::move(symbols));
  return Instance{std::move(text), std::move(pattern), planted_at};
}

}  // namespace mvmatch
