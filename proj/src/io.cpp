#include "tourpaths/io.hpp"

#include <charconv>
#include <vector>

namespace tourpaths {

const char* to_string(ParseErrorKind k) noexcept {
  switch (k) {
    case ParseErrorKind::bad_header: return "bad_header";
    case ParseErrorKind::bad_size: return "bad_size";
    case ParseErrorKind::bad_cell: return "bad_cell";
    case ParseErrorKind::bad_diagonal: return "bad_diagonal";
    case ParseErrorKind::antisymmetry: return "antisymmetry";
    case ParseErrorKind::row_count: return "row_count";
    case ParseErrorKind::row_length: return "row_length";
    case ParseErrorKind::bad_path: return "bad_path";
    case ParseErrorKind::bad_tree: return "bad_tree";
  }
  return "unknown";
}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

bool parse_uint(std::string_view s, std::size_t& out) {
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

std::string serialize_tournament(const Tournament& t) {
  const std::size_t n = t.size();
  std::string out = "tournament v1\nn=" + std::to_string(n) + "\n";
  out.reserve(out.size() + n * (n + 1));
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) out.push_back(t.has_edge(i, j) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

Tournament parse_tournament(std::string_view text) {
  const std::vector<std::string_view> lines = split_lines(text);
  if (lines.empty() || lines[0] != "tournament v1")
    throw ParseError(ParseErrorKind::bad_header, "expected header 'tournament v1'");
  std::size_t n = 0;
  if (lines.size() < 2 || lines[1].substr(0, 2) != "n=" || !parse_uint(lines[1].substr(2), n) || n == 0)
    throw ParseError(ParseErrorKind::bad_size, "expected 'n=<N>' with N >= 1");
  if (lines.size() - 2 != n)
    throw ParseError(ParseErrorKind::row_count,
                     "expected " + std::to_string(n) + " matrix rows, got " + std::to_string(lines.size() - 2));
  for (std::size_t i = 0; i < n; ++i) {
    const std::string_view row = lines[i + 2];
    if (row.size() != n)
      throw ParseError(ParseErrorKind::row_length, "row " + std::to_string(i) + " has " +
                                                       std::to_string(row.size()) + " characters, expected " +
                                                       std::to_string(n));
    for (std::size_t j = 0; j < n; ++j)
      if (row[j] != '0' && row[j] != '1')
        throw ParseError(ParseErrorKind::bad_cell,
                         "row " + std::to_string(i) + " column " + std::to_string(j) + ": not 0/1");
    if (row[i] != '0') throw ParseError(ParseErrorKind::bad_diagonal, "diagonal cell " + std::to_string(i) + " is 1");
  }
  TournamentBuilder b(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string_view row = lines[i + 2];
    for (std::size_t j = i + 1; j < n; ++j) {
      if (row[j] == lines[j + 2][i])
        throw ParseError(ParseErrorKind::antisymmetry,
                         "pair (" + std::to_string(i) + "," + std::to_string(j) + ") is not oriented exactly once");
      if (row[j] == '1') bits::set(b.upper_row(static_cast<Vertex>(i)), j);
    }
  }
  return std::move(b).build();
}

std::string serialize_path(std::span<const Vertex> path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(path[i]);
  }
  out.push_back('\n');
  return out;
}

VertexPath parse_path(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  VertexPath path;
  if (text.empty()) return path;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    const std::string_view field = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    std::size_t v = 0;
    if (!parse_uint(field, v) || v >= kNoVertex)
      throw ParseError(ParseErrorKind::bad_path, "bad path entry '" + std::string(field) + "'");
    path.push_back(static_cast<Vertex>(v));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return path;
}

std::string serialize_tree(const ShortcutTree& b) {
  std::string out;
  auto field = [&](Vertex c) { out += c == kNoVertex ? std::string("-") : std::to_string(c); };
  for (Vertex v = 0; v < b.size(); ++v) {
    out += std::to_string(v);
    out.push_back(',');
    field(b.left[v]);
    out.push_back(',');
    field(b.right[v]);
    out.push_back('\n');
  }
  return out;
}

ShortcutTree parse_tree(std::string_view text) {
  const std::vector<std::string_view> lines = split_lines(text);
  const std::size_t n = lines.size();
  if (n == 0) throw ParseError(ParseErrorKind::bad_tree, "empty tree");
  ShortcutTree b(n);
  std::vector<bool> is_child(n, false);
  auto child = [&](std::string_view f, std::size_t line) -> Vertex {
    if (f == "-") return kNoVertex;
    std::size_t c = 0;
    if (!parse_uint(f, c) || c >= n)
      throw ParseError(ParseErrorKind::bad_tree, "line " + std::to_string(line) + ": bad child '" + std::string(f) + "'");
    is_child[c] = true;
    return static_cast<Vertex>(c);
  };
  for (std::size_t i = 0; i < n; ++i) {
    const std::string_view line = lines[i];
    const std::size_t c1 = line.find(',');
    const std::size_t c2 = c1 == line.npos ? line.npos : line.find(',', c1 + 1);
    std::size_t v = 0;
    if (c2 == line.npos || line.find(',', c2 + 1) != line.npos || !parse_uint(line.substr(0, c1), v) || v != i)
      throw ParseError(ParseErrorKind::bad_tree, "line " + std::to_string(i) + ": expected '" + std::to_string(i) +
                                                     ",left|-,right|-'");
    b.left[i] = child(line.substr(c1 + 1, c2 - c1 - 1), i);
    b.right[i] = child(line.substr(c2 + 1), i);
  }
  for (std::size_t v = 0; v < n; ++v)
    if (!is_child[v]) {
      if (b.root != kNoVertex) throw ParseError(ParseErrorKind::bad_tree, "more than one parentless vertex");
      b.root = static_cast<Vertex>(v);
    }
  if (b.root == kNoVertex) throw ParseError(ParseErrorKind::bad_tree, "no parentless vertex");
  return b;
}

}  // namespace tourpaths
