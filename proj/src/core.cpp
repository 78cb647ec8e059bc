#include "mvmatch/core.hpp"

#include <utility>

namespace mvmatch {

AlphabetRegistry::Builder::Builder(std::vector<std::string> view_names)
    : view_names_(std::move(view_names)) {
  if (view_names_.empty()) throw InvalidConfig("a registry needs at least one view");
}

SymbolId AlphabetRegistry::Builder::intern(ViewId view, std::string_view token) {
  if (view.value >= view_names_.size()) {
    throw InvalidConfig("view index " + std::to_string(view.value) + " out of range");
  }
  std::string key(token);
  if (auto it = token_to_symbol_.find(key); it != token_to_symbol_.end()) {
    const ViewId owner = symbol_to_view_[it->second.value];
    if (owner != view) {
      throw DisjointnessViolation(std::move(key), view_names_[owner.value], view_names_[view.value]);
    }
    return it->second;
  }
  const SymbolId id{static_cast<std::uint32_t>(symbol_to_view_.size())};
  symbol_to_view_.push_back(view);
  symbol_to_token_.push_back(key);
  token_to_symbol_.emplace(std::move(key), id);
  return id;
}

std::shared_ptr<const AlphabetRegistry> AlphabetRegistry::Builder::build() && {
  std::shared_ptr<AlphabetRegistry> registry(new AlphabetRegistry());
  registry->view_names_ = std::move(view_names_);
  registry->token_to_symbol_ = std::move(token_to_symbol_);
  registry->symbol_to_view_ = std::move(symbol_to_view_);
  registry->symbol_to_token_ = std::move(symbol_to_token_);
  return registry;
}

std::optional<SymbolId> AlphabetRegistry::find(std::string_view token) const {
  if (auto it = token_to_symbol_.find(std::string(token)); it != token_to_symbol_.end()) {
    return it->second;
  }
  return std::nullopt;
}

RegistryPtr build_registry(std::vector<std::string> view_names,
                           const std::vector<std::vector<std::string>>& view_alphabets) {
  if (view_names.size() != view_alphabets.size()) {
    throw InvalidConfig("got " + std::to_string(view_names.size()) + " view names but " +
                        std::to_string(view_alphabets.size()) + " alphabets");
  }
  AlphabetRegistry::Builder builder(std::move(view_names));
  for (std::size_t v = 0; v < view_alphabets.size(); ++v) {
    for (const auto& token : view_alphabets[v]) {
      builder.intern(ViewId{static_cast<std::uint32_t>(v)}, token);
    }
  }
  return std::move(builder).build();
}

MultiViewText::MultiViewText(RegistryPtr registry, std::vector<std::vector<SymbolId>> views)
    : registry_(std::move(registry)), views_(std::move(views)) {
  if (!registry_) throw InvalidText("text has no registry");
  if (views_.size() != registry_->view_count()) {
    throw InvalidText("expected " + std::to_string(registry_->view_count()) + " views, got " +
                      std::to_string(views_.size()));
  }
  length_ = views_.front().size();
  for (std::size_t v = 0; v < views_.size(); ++v) {
    if (views_[v].size() != length_) {
      throw InvalidText("view '" + registry_->view_name(ViewId{static_cast<std::uint32_t>(v)}) +
                        "' has length " + std::to_string(views_[v].size()) + ", expected " +
                        std::to_string(length_));
    }
    for (std::size_t i = 0; i < length_; ++i) {
      const SymbolId s = views_[v][i];
      if (!registry_->contains(s) || registry_->view_of(s).value != v) {
        throw InvalidText("symbol at position " + std::to_string(i) + " of view " +
                          std::to_string(v) + " does not belong to that view");
      }
    }
  }
}

Pattern::Pattern(RegistryPtr registry, std::vector<SymbolId> symbols)
    : registry_(std::move(registry)), symbols_(std::move(symbols)) {
  if (!registry_) throw InvalidConfig("pattern has no registry");
  if (symbols_.empty()) throw EmptyPattern();
  views_.reserve(symbols_.size());
  for (const SymbolId s : symbols_) {
    if (!registry_->contains(s)) throw UnknownSymbol("#" + std::to_string(s.value));
    views_.push_back(registry_->view_of(s));
  }
}

Pattern resolve_pattern(std::span<const std::string> tokens, RegistryPtr registry) {
  if (tokens.empty()) throw EmptyPattern();
  std::vector<SymbolId> symbols;
  symbols.reserve(tokens.size());
  for (const auto& token : tokens) {
    const auto id = registry->find(token);
    if (!id) throw UnknownSymbol(token);
    symbols.push_back(*id);
  }
  return Pattern(std::move(registry), std::move(symbols));
}

std::vector<std::string> pattern_tokens(const Pattern& pattern) {
  std::vector<std::string> out;
  out.reserve(pattern.size());
  for (const SymbolId s : pattern.symbols()) out.push_back(pattern.registry().token_of(s));
  return out;
}

void require_same_registry(const MultiViewText& text, const Pattern& pattern) {
  if (text.registry_ptr() != pattern.registry_ptr()) throw RegistryMismatch();
}

bool occurs_at(const MultiViewText& text, const Pattern& pattern, std::size_t i) {
  require_same_registry(text, pattern);
  const std::size_t n = text.length();
  const std::size_t m = pattern.size();
  if (m > n || i > n - m) throw OutOfBounds(i, m > n ? 0 : n - m);
  const auto symbols = pattern.symbols();
  const auto views = pattern.views();
  for (std::size_t j = 0; j < m; ++j) {
    if (text.view(views[j])[i + j] != symbols[j]) return false;
  }
  return true;
}

}  // namespace mvmatch
