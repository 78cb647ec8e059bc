#pragma once

// Domain types for multi-view texts: k aligned sequences of equal length over
// pairwise disjoint alphabets, and patterns drawn from the union of those
// alphabets. Every position of a pattern constrains exactly the view its
// symbol belongs to and ignores the others.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mvmatch/errors.hpp"

namespace mvmatch {

/// Interned symbol. Ids are dense and unique across all views of a registry.
struct SymbolId {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(SymbolId, SymbolId) = default;
};

/// Index of a view in [0, k).
struct ViewId {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(ViewId, ViewId) = default;
};

/// Holds the k view alphabets and the type function mapping each symbol to
/// its view. Immutable once built; share it through `RegistryPtr`.
class AlphabetRegistry {
 public:
  /// Incremental construction. Symbols receive ids in registration order.
  class Builder {
   public:
    /// Throws InvalidConfig when `view_names` is empty.
    explicit Builder(std::vector<std::string> view_names);

    /// Returns the id of `token`, registering it under `view` if new.
    /// Throws DisjointnessViolation if the token already belongs to another view.
    SymbolId intern(ViewId view, std::string_view token);

    std::size_t view_count() const noexcept { return view_names_.size(); }

    std::shared_ptr<const AlphabetRegistry> build() &&;

   private:
    std::vector<std::string> view_names_;
    std::unordered_map<std::string, SymbolId> token_to_symbol_;
    std::vector<ViewId> symbol_to_view_;
    std::vector<std::string> symbol_to_token_;
  };

  std::size_t view_count() const noexcept { return view_names_.size(); }
  std::size_t symbol_count() const noexcept { return symbol_to_view_.size(); }

  const std::string& view_name(ViewId view) const { return view_names_.at(view.value); }
  const std::vector<std::string>& view_names() const noexcept { return view_names_; }

  std::optional<SymbolId> find(std::string_view token) const;

  /// The type function t(c). Throws std::out_of_range for foreign ids.
  ViewId view_of(SymbolId symbol) const { return symbol_to_view_.at(symbol.value); }
  const std::string& token_of(SymbolId symbol) const { return symbol_to_token_.at(symbol.value); }

  bool contains(SymbolId symbol) const noexcept { return symbol.value < symbol_to_view_.size(); }

 private:
  AlphabetRegistry() = default;

  std::vector<std::string> view_names_;
  std::unordered_map<std::string, SymbolId> token_to_symbol_;
  std::vector<ViewId> symbol_to_view_;
  std::vector<std::string> symbol_to_token_;
};

using RegistryPtr = std::shared_ptr<const AlphabetRegistry>;

/// Interns each view's alphabet in order. `view_alphabets[v]` lists the tokens
/// of view v; duplicates inside one view collapse to a single symbol.
RegistryPtr build_registry(std::vector<std::string> view_names,
                           const std::vector<std::vector<std::string>>& view_alphabets);

/// k aligned symbol sequences of common length n.
class MultiViewText {
 public:
  /// Throws InvalidText unless there is one sequence per view, all sequences
  /// have the same length, and every symbol is typed to its own view.
  MultiViewText(RegistryPtr registry, std::vector<std::vector<SymbolId>> views);

  std::size_t length() const noexcept { return length_; }
  std::size_t view_count() const noexcept { return views_.size(); }

  std::span<const SymbolId> view(ViewId v) const { return views_.at(v.value); }
  SymbolId at(ViewId v, std::size_t position) const { return views_.at(v.value).at(position); }

  const AlphabetRegistry& registry() const noexcept { return *registry_; }
  const RegistryPtr& registry_ptr() const noexcept { return registry_; }

 private:
  RegistryPtr registry_;
  std::vector<std::vector<SymbolId>> views_;
  std::size_t length_ = 0;
};

/// A non-empty sequence of symbols over the union alphabet. The view of each
/// position is cached at construction.
class Pattern {
 public:
  /// Throws EmptyPattern for an empty sequence and UnknownSymbol for ids the
  /// registry does not know.
  Pattern(RegistryPtr registry, std::vector<SymbolId> symbols);

  std::size_t size() const noexcept { return symbols_.size(); }
  std::span<const SymbolId> symbols() const noexcept { return symbols_; }
  std::span<const ViewId> views() const noexcept { return views_; }

  const AlphabetRegistry& registry() const noexcept { return *registry_; }
  const RegistryPtr& registry_ptr() const noexcept { return registry_; }

 private:
  RegistryPtr registry_;
  std::vector<SymbolId> symbols_;
  std::vector<ViewId> views_;
};

Pattern resolve_pattern(std::span<const std::string> tokens, RegistryPtr registry);

/// Renders a pattern back to its token list.
std::vector<std::string> pattern_tokens(const Pattern& pattern);

/// 0-based start of an occurrence.
struct Match {
  std::size_t start = 0;

  friend constexpr auto operator<=>(const Match&, const Match&) = default;
};

/// Throws RegistryMismatch unless both were built against the same registry object.
void require_same_registry(const MultiViewText& text, const Pattern& pattern);

/// True iff pattern[j] equals the text symbol of view t(pattern[j]) at i + j
/// for every j in [0, m). Throws OutOfBounds when i > n - m (including m > n).
bool occurs_at(const MultiViewText& text, const Pattern& pattern, std::size_t i);

}  // namespace mvmatch
