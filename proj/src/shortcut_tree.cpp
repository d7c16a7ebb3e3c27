#include "tourpaths/shortcut_tree.hpp"

#include <algorithm>
#include <cmath>

#include "tourpaths/hop_paths.hpp"
#include "tourpaths/rng.hpp"

namespace tourpaths {

const char* to_string(TreeDefect d) noexcept {
  switch (d) {
    case TreeDefect::wrong_size: return "wrong_size";
    case TreeDefect::out_of_range: return "out_of_range";
    case TreeDefect::double_parent: return "double_parent";
    case TreeDefect::cycle: return "cycle";
    case TreeDefect::missing_vertex: return "missing_vertex";
  }
  return "unknown";
}

void check_tree_structure(const ShortcutTree& b, std::size_t n) {
  if (b.left.size() != n || b.right.size() != n)
    throw TreeStructureError(TreeDefect::wrong_size, "tree has " + std::to_string(b.left.size()) +
                                                         " child slots, host has " + std::to_string(n) + " vertices");
  if (b.root >= n) throw TreeStructureError(TreeDefect::out_of_range, "root is not a vertex");
  std::vector<std::uint8_t> parents(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    for (Vertex c : {b.left[v], b.right[v]}) {
      if (c == kNoVertex) continue;
      if (c >= n) throw TreeStructureError(TreeDefect::out_of_range, "child of " + std::to_string(v) + " out of range");
      if (++parents[c] > 1)
        throw TreeStructureError(TreeDefect::double_parent, "vertex " + std::to_string(c) + " has two parents");
    }
  if (parents[b.root] != 0) throw TreeStructureError(TreeDefect::cycle, "root is a descendant of itself");

  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{b.root};
  std::size_t reached = 0;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    seen[v] = true;
    ++reached;
    for (Vertex c : {b.left[v], b.right[v]})
      if (c != kNoVertex) stack.push_back(c);
  }
  if (reached == n) return;
  for (std::size_t v = 0; v < n; ++v)
    if (!seen[v] && parents[v] == 0)
      throw TreeStructureError(TreeDefect::missing_vertex, "vertex " + std::to_string(v) + " is not in the tree");
  throw TreeStructureError(TreeDefect::cycle, "child links form a cycle");
}

VertexPath inorder(const ShortcutTree& b) {
  check_tree_structure(b, b.size());
  VertexPath out;
  out.reserve(b.size());
  std::vector<Vertex> stack;
  Vertex cur = b.root;
  while (cur != kNoVertex || !stack.empty()) {
    while (cur != kNoVertex) {
      stack.push_back(cur);
      cur = b.left[cur];
    }
    cur = stack.back();
    stack.pop_back();
    out.push_back(cur);
    cur = b.right[cur];
  }
  return out;
}

bool validate_tree(const Tournament& t, const ShortcutTree& b) {
  check_tree_structure(b, t.size());
  const VertexPath order = inorder(b);
  const std::size_t n = order.size();
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;

  // Each subtree occupies a contiguous block [lo, hi] of the in-order.
  std::vector<std::size_t> lo(n), hi(n);
  std::vector<std::pair<Vertex, bool>> stack{{b.root, false}};
  while (!stack.empty()) {
    auto [v, done] = stack.back();
    stack.pop_back();
    if (!done) {
      stack.push_back({v, true});
      for (Vertex c : {b.left[v], b.right[v]})
        if (c != kNoVertex) stack.push_back({c, false});
      continue;
    }
    lo[v] = b.left[v] == kNoVertex ? pos[v] : lo[b.left[v]];
    hi[v] = b.right[v] == kNoVertex ? pos[v] : hi[b.right[v]];
  }
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t p = lo[v]; p < pos[v]; ++p)
      if (!t.has_edge(order[p], v)) return false;
    for (std::size_t p = pos[v] + 1; p <= hi[v]; ++p)
      if (!t.has_edge(v, order[p])) return false;
  }
  return true;
}

std::int64_t tree_shortcuts(const Tournament& t, const ShortcutTree& b) {
  if (!validate_tree(t, b)) throw std::invalid_argument("tree_shortcuts: not a shortcut tree of the tournament");
  return count_shortcuts(t, inorder(b));
}

std::int64_t middle_count(const Tournament& t, Vertex v, std::span<const std::size_t> out_degrees) {
  if (v >= t.size()) throw std::invalid_argument("middle_count: vertex out of range");
  VertexMask others = t.full_mask();
  others.erase(v);
  std::int64_t sum = 0;
  std::int64_t in = 0;
  bits::for_each_andnot(t.out_row(v), others.words(), [&](std::size_t u) {
    sum += static_cast<std::int64_t>(out_degrees[u]) - 1;
    ++in;
  });
  return sum - in * (in - 1) / 2;
}

std::int64_t middle_count(const Tournament& t, Vertex v) {
  const std::vector<std::size_t> d = t.out_degrees();
  return middle_count(t, v, d);
}

std::vector<std::int64_t> middle_counts(const Tournament& t) {
  const std::vector<std::size_t> d = t.out_degrees();
  std::vector<std::int64_t> m(t.size());
  for (Vertex v = 0; v < t.size(); ++v) m[v] = middle_count(t, v, d);
  return m;
}

std::int64_t middle_lemma_bound(std::size_t n) {
  if (n < 3) return 0;
  const auto k = static_cast<std::int64_t>(n);
  if (k % 2 == 1) return (k - 1) * (k - 3) / 8;
  return ((k - 2) * (k - 2) + 7) / 8;
}

namespace {

struct Task {
  VertexSet members;  // ascending
  Vertex parent;
  bool as_left;
  std::size_t depth;
};

}  // namespace

ShortcutTree build_shortcut_tree(const Tournament& t, PivotRule rule, TreeBuildStats* stats) {
  const std::size_t n = t.size();
  ShortcutTree tree(n);
  TreeBuildStats local;
  const double depth_limit = 4.0 * std::log2(static_cast<double>(std::max<std::size_t>(n, 2)));
  Rng rng(rule.seed);

  std::vector<std::int64_t> deg(n, 0);  // scratch, indexed by vertex
  std::vector<Task> stack;
  {
    VertexSet all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    stack.push_back({std::move(all), kNoVertex, false, 0});
  }

  while (!stack.empty()) {
    Task task = std::move(stack.back());
    stack.pop_back();
    const VertexSet& s = task.members;
    const std::size_t m = s.size();
    local.max_depth = std::max(local.max_depth, task.depth);

    Vertex pivot = s.front();
    if (m > 1 && rule.kind == PivotRule::Kind::random) {
      pivot = s[uniform_below(rng, m)];
    } else if (m > 2 && rule.kind == PivotRule::Kind::max_middle) {
      VertexMask mask(n);
      for (Vertex v : s) mask.insert(v);
      for (Vertex v : s) deg[v] = static_cast<std::int64_t>(bits::count_and(t.out_row(v), mask.words()));
      std::vector<std::int64_t> mid(m);
      for (std::size_t i = 0; i < m; ++i) {
        const Vertex v = s[i];
        std::int64_t sum = 0;
        const std::int64_t in = static_cast<std::int64_t>(m) - 1 - deg[v];
        bits::for_each_andnot(t.out_row(v), mask.words(), [&](std::size_t u) {
          if (u != v) sum += deg[u] - 1;
        });
        mid[i] = sum - in * (in - 1) / 2;
      }
      std::size_t pick = 0;
      if (static_cast<double>(task.depth) > depth_limit) {
        const std::int64_t floor_m = middle_lemma_bound(m);
        std::int64_t best_gap = -1;
        for (std::size_t i = 0; i < m; ++i) {
          if (mid[i] < floor_m) continue;
          const std::int64_t gap = std::abs(2 * deg[s[i]] - static_cast<std::int64_t>(m - 1));
          if (best_gap < 0 || gap < best_gap) {
            best_gap = gap;
            pick = i;
          }
        }
        ++local.balanced_pivots;
      } else {
        for (std::size_t i = 1; i < m; ++i)
          if (mid[i] > mid[pick]) pick = i;
      }
      pivot = s[pick];
    }

    if (task.parent == kNoVertex)
      tree.root = pivot;
    else
      (task.as_left ? tree.left : tree.right)[task.parent] = pivot;

    VertexSet left, right;
    for (Vertex u : s) {
      if (u == pivot) continue;
      (t.has_edge(u, pivot) ? left : right).push_back(u);
    }
    if (!right.empty()) stack.push_back({std::move(right), pivot, false, task.depth + 1});
    if (!left.empty()) stack.push_back({std::move(left), pivot, true, task.depth + 1});
  }

  if (stats) *stats = local;
  return tree;
}

}  // namespace tourpaths
