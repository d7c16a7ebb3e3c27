#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "tourpaths/shortcut_tree.hpp"
#include "tourpaths/tournament.hpp"

namespace tourpaths {

enum class ParseErrorKind {
  bad_header,     // first line is not "tournament v1"
  bad_size,       // second line is not "n=<N>" with N >= 1
  bad_cell,       // a matrix character outside {0,1}
  bad_diagonal,   // a 1 on the diagonal
  antisymmetry,   // cells (i,j) and (j,i) are equal for i != j
  row_count,      // number of matrix lines differs from N
  row_length,     // a matrix line does not have N characters
  bad_path,       // malformed path line
  bad_tree,       // malformed tree line
};

const char* to_string(ParseErrorKind k) noexcept;

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ParseErrorKind kind() const noexcept { return kind_; }

 private:
  ParseErrorKind kind_;
};

/// Canonical text form:
///   tournament v1
///   n=<N>
///   N lines of N characters in {0,1}; character j of line i is 1 iff i->j.
/// UNIX newlines, a newline after every line, no other whitespace.
std::string serialize_tournament(const Tournament& t);
Tournament parse_tournament(std::string_view text);

/// One line of comma-separated vertex labels.
std::string serialize_path(std::span<const Vertex> path);
VertexPath parse_path(std::string_view text);

/// n lines "vertex,left|-,right|-" in vertex order; the root is the one
/// vertex that is nobody's child.
std::string serialize_tree(const ShortcutTree& b);
ShortcutTree parse_tree(std::string_view text);

}  // namespace tourpaths
