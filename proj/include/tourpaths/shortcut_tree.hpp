#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tourpaths/tournament.hpp"

namespace tourpaths {

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

/// Binary tree spanning 0..n-1 given by per-vertex child links.
///
/// As a shortcut tree, every left descendant of v is an in-neighbour of v and
/// every right descendant an out-neighbour; the in-order is then a
/// Hamiltonian path.
struct ShortcutTree {
  Vertex root = kNoVertex;
  std::vector<Vertex> left;
  std::vector<Vertex> right;

  explicit ShortcutTree(std::size_t n = 0) : left(n, kNoVertex), right(n, kNoVertex) {}
  std::size_t size() const noexcept { return left.size(); }
  bool operator==(const ShortcutTree&) const = default;
};

enum class TreeDefect {
  wrong_size,          // child arrays do not match the host
  out_of_range,        // root or a child is not a vertex
  double_parent,       // a vertex is the child of two links
  cycle,               // links return to an ancestor (includes the root)
  missing_vertex,      // a vertex is not reachable from the root
};

const char* to_string(TreeDefect d) noexcept;

class TreeStructureError : public std::invalid_argument {
 public:
  TreeStructureError(TreeDefect d, const std::string& what) : std::invalid_argument(what), defect_(d) {}
  TreeDefect defect() const noexcept { return defect_; }

 private:
  TreeDefect defect_;
};

/// Throws TreeStructureError unless `b` is a binary tree spanning n vertices.
void check_tree_structure(const ShortcutTree& b, std::size_t n);

/// Orientation check: true iff every left descendant points into its
/// ancestor and every right descendant is pointed to. Structural defects
/// throw TreeStructureError instead.
bool validate_tree(const Tournament& t, const ShortcutTree& b);

/// In-order traversal (left subtree, vertex, right subtree).
VertexPath inorder(const ShortcutTree& b);

/// Shortcuts of the in-order path; std::invalid_argument if `b` is not a
/// valid shortcut tree of `t`.
std::int64_t tree_shortcuts(const Tournament& t, const ShortcutTree& b);

/// m(v): transitive triangles with v as the middle vertex, from the
/// out-degrees: sum over in-neighbours u of (d+(u)-1), minus C(d-(v),2).
std::int64_t middle_count(const Tournament& t, Vertex v, std::span<const std::size_t> out_degrees);
std::int64_t middle_count(const Tournament& t, Vertex v);
std::vector<std::int64_t> middle_counts(const Tournament& t);

/// Guaranteed maximum of m(v) over an n-vertex tournament:
/// (n-1)(n-3)/8 for odd n, ceil((n-2)^2/8) for even n (0 below n=3).
std::int64_t middle_lemma_bound(std::size_t n);

struct PivotRule {
  enum class Kind { max_middle, first_vertex, random };
  Kind kind = Kind::max_middle;
  std::uint64_t seed = 0;

  static PivotRule max_middle() { return {Kind::max_middle, 0}; }
  static PivotRule first_vertex() { return {Kind::first_vertex, 0}; }
  static PivotRule random(Seed s) { return {Kind::random, s.value}; }
};

struct TreeBuildStats {
  std::size_t max_depth = 0;
  std::size_t balanced_pivots = 0;  // max-middle nodes resolved by the depth fallback
};

/// Recursive pivot construction: the pivot becomes the root, its in- and
/// out-neighbourhoods the left and right subtrees.
///
/// With max_middle the pivot maximises m(v) inside its subtournament (smallest
/// label on ties), which guarantees at least z(n) shortcuts. Below depth
/// 4*log2(n) that is the whole rule; deeper nodes pick, among vertices still
/// meeting middle_lemma_bound, the one with the most balanced split, which
/// keeps the guarantee. Runs on an explicit stack.
ShortcutTree build_shortcut_tree(const Tournament& t, PivotRule rule = PivotRule::max_middle(),
                                 TreeBuildStats* stats = nullptr);

}  // namespace tourpaths
