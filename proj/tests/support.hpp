#pragma once

// Test fixtures and independent oracles. Nothing here calls the search,
// shift-table or occurrence code under test.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "mvmatch/core.hpp"
#include "mvmatch/synth.hpp"

namespace mvmatch::testing {

/// Registry whose tokens are single characters; `alphabets[v]` lists view v's characters.
inline RegistryPtr char_registry(std::vector<std::string> names, const std::vector<std::string>& alphabets) {
  std::vector<std::vector<std::string>> tokens;
  for (const auto& alphabet : alphabets) {
    auto& view = tokens.emplace_back();
    for (const char c : alphabet) view.emplace_back(1, c);
  }
  return build_registry(std::move(names), tokens);
}

inline MultiViewText char_text(const RegistryPtr& registry, const std::vector<std::string>& rows) {
  std::vector<std::vector<SymbolId>> views;
  for (const auto& row : rows) {
    auto& view = views.emplace_back();
    for (const char c : row) view.push_back(registry->find(std::string(1, c)).value());
  }
  return MultiViewText(registry, std::move(views));
}

inline Pattern char_pattern(const RegistryPtr& registry, const std::string& p) {
  std::vector<std::string> tokens;
  for (const char c : p) tokens.emplace_back(1, c);
  return resolve_pattern(tokens, registry);
}

inline SymbolId sym(const RegistryPtr& registry, const std::string& token) { return registry->find(token).value(); }

/// The two-view worked example: word row "cabbaabc", tag row "BABABACB".
struct EightPositionExample {
  RegistryPtr registry = char_registry({"word", "tag"}, {"abc", "ABC"});
  MultiViewText text = char_text(registry, {"cabbaabc", "BABABACB"});
};

/// The six-position prefix: word row "baaaab", tag row "AAAABB".
struct PrefixExample {
  RegistryPtr registry = char_registry({"word", "tag"}, {"ab", "AB"});
  MultiViewText text = char_text(registry, {"baaaab", "AAAABB"});
};

// --- oracles --------------------------------------------------------------

/// Occurrence test that never consults the type function: with disjoint
/// alphabets, p[j] equals the cell of its own view iff it equals the cell of
/// some view.
inline bool occurs_oracle(const MultiViewText& text, const Pattern& pattern, std::size_t i) {
  const auto p = pattern.symbols();
  for (std::size_t j = 0; j < p.size(); ++j) {
    bool hit = false;
    for (std::uint32_t v = 0; v < text.view_count(); ++v) hit = hit || text.view(ViewId{v})[i + j] == p[j];
    if (!hit) return false;
  }
  return true;
}

inline std::vector<std::size_t> window_scan_oracle(const MultiViewText& text, const Pattern& pattern) {
  std::vector<std::size_t> out;
  if (pattern.size() > text.length()) return out;
  for (std::size_t i = 0; i + pattern.size() <= text.length(); ++i) {
    if (occurs_oracle(text, pattern, i)) out.push_back(i);
  }
  return out;
}

/// Literal evaluation of min{ i | i = m or (1 <= i < m and p[m-i] = c) } with
/// the 1-based pattern p[1..m].
inline std::uint32_t eq1_shift_oracle(const std::vector<SymbolId>& p, SymbolId c) {
  const std::size_t m = p.size();
  std::size_t best = m;
  for (std::size_t i = 1; i < m; ++i) {
    const SymbolId at_one_based = p[(m - i) - 1];
    if (at_one_based == c && i < best) best = i;
  }
  return static_cast<std::uint32_t>(best);
}

/// Textbook single-string Horspool over an integer alphabet of size `sigma`,
/// returning the window starts it visits and the matches it reports.
struct ClassicHorspoolRun {
  std::vector<std::size_t> trace;
  std::vector<std::size_t> matches;
};

inline ClassicHorspoolRun classic_horspool(const std::vector<std::uint32_t>& text,
                                           const std::vector<std::uint32_t>& pat, std::size_t sigma) {
  ClassicHorspoolRun run;
  const std::size_t n = text.size();
  const std::size_t m = pat.size();
  if (m == 0 || m > n) return run;
  std::vector<std::size_t> skip(sigma, m);
  for (std::size_t i = 0; i + 1 < m; ++i) skip[pat[i]] = m - 1 - i;
  std::size_t pos = 0;
  while (pos + m <= n) {
    run.trace.push_back(pos);
    const std::uint32_t last = text[pos + m - 1];
    if (last == pat[m - 1]) {
      std::size_t i = 0;
      while (i + 1 < m && text[pos + i] == pat[i]) ++i;
      if (i + 1 == m) run.matches.push_back(pos);
    }
    pos += skip[last];
  }
  return run;
}

inline std::vector<std::size_t> starts(const std::vector<Match>& matches) {
  std::vector<std::size_t> out;
  for (const auto& m : matches) out.push_back(m.start);
  return out;
}

/// Random generator configuration within the property-test envelope.
inline GenConfig random_config(std::mt19937_64& rng, std::size_t max_k, std::size_t max_n, std::size_t max_sigma,
                               std::size_t max_m) {
  auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  GenConfig config;
  config.k = pick(1, max_k);
  config.n = pick(1, max_n);
  config.sigma = pick(1, max_sigma);
  config.m = pick(1, max_m);
  config.seed = rng();
  config.mode = (rng() & 1) && config.m <= config.n ? PatternMode::planted : PatternMode::uniform;
  return config;
}

/// Scratch directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() / ("mvmatch-test-" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace mvmatch::testing
