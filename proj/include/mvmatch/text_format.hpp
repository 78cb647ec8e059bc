#pragma once

// Multi-track text files: UTF-8, one record per line, tab-separated fields.
// The first line names the k views; every following line holds the k tokens
// of one position. Tokens cannot contain tabs or newlines and are never
// quoted. A trailing newline and CR line endings are accepted.
//
//   word<TAB>tag
//   c<TAB>B
//   a<TAB>A
//
// Patterns are whitespace-separated token lists.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "mvmatch/core.hpp"

namespace mvmatch {

/// Builds a fresh registry from the observed column vocabularies, interning
/// tokens in order of first appearance. Throws FormatError for a missing
/// header, wrong field counts or empty tokens, and DisjointnessViolation when
/// a token shows up in two columns.
MultiViewText parse_text(std::string_view bytes);

/// Throws IoError when the file cannot be read.
MultiViewText read_text_file(const std::filesystem::path& path);

Pattern parse_pattern_string(std::string_view s, RegistryPtr registry);

void write_text(std::ostream& out, const MultiViewText& text);
void write_text_file(const std::filesystem::path& path, const MultiViewText& text);

/// Tokens joined by single spaces, no trailing newline.
std::string format_pattern(const Pattern& pattern);

/// Reads a whole file; throws IoError.
std::string read_file(const std::filesystem::path& path);

}  // namespace mvmatch
