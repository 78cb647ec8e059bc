#include "mvmatch/text_format.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

namespace mvmatch {

namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

std::string_view chomp(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

}  // namespace

MultiViewText parse_text(std::string_view bytes) {
  if (bytes.empty()) throw FormatError(1, "missing header line");

  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < bytes.size()) {
    const std::size_t nl = bytes.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(bytes.substr(start));
      break;
    }
    lines.push_back(bytes.substr(start, nl - start));
    start = nl + 1;
  }

  const auto header = split_tabs(chomp(lines.front()));
  std::vector<std::string> names;
  for (const auto name : header) {
    if (name.empty()) throw FormatError(1, "empty view name");
    for (const auto& seen : names) {
      if (seen == name) throw FormatError(1, "duplicate view name '" + std::string(name) + "'");
    }
    names.emplace_back(name);
  }
  const std::size_t k = names.size();

  AlphabetRegistry::Builder builder(std::move(names));
  std::vector<std::vector<SymbolId>> views(k);
  for (auto& v : views) v.reserve(lines.size() - 1);

  for (std::size_t row = 1; row < lines.size(); ++row) {
    const std::size_t line_no = row + 1;
    const auto fields = split_tabs(chomp(lines[row]));
    if (fields.size() != k) {
      throw FormatError(line_no, "expected " + std::to_string(k) + " fields, got " + std::to_string(fields.size()));
    }
    for (std::size_t v = 0; v < k; ++v) {
      if (fields[v].empty()) throw FormatError(line_no, "empty token in column " + std::to_string(v + 1));
      views[v].push_back(builder.intern(ViewId{static_cast<std::uint32_t>(v)}, fields[v]));
    }
  }

  auto registry = std::move(builder).build();
  return MultiViewText(std::move(registry), std::move(views));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("failed reading '" + path.string() + "'");
  return std::move(buf).str();
}

MultiViewText read_text_file(const std::filesystem::path& path) { return parse_text(read_file(path)); }

Pattern parse_pattern_string(std::string_view s, RegistryPtr registry) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(s)};
  for (std::string token; in >> token;) tokens.push_back(std::move(token));
  return resolve_pattern(tokens, std::move(registry));
}

void write_text(std::ostream& out, const MultiViewText& text) {
  const auto& registry = text.registry();
  const std::size_t k = text.view_count();
  for (std::size_t v = 0; v < k; ++v) {
    if (v) out << '\t';
    out << registry.view_names()[v];
  }
  out << '\n';
  for (std::size_t i = 0; i < text.length(); ++i) {
    for (std::uint32_t v = 0; v < k; ++v) {
      if (v) out << '\t';
      out << registry.token_of(text.view(ViewId{v})[i]);
    }
    out << '\n';
  }
}

void write_text_file(const std::filesystem::path& path, const MultiViewText& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  write_text(out, text);
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

std::string format_pattern(const Pattern& pattern) {
  std::string out;
  for (const auto& token : pattern_tokens(pattern)) {
    if (!out.empty()) out += ' ';
    out += token;
  }
  return out;
}

}  // namespace mvmatch
