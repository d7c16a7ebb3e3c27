#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tourpaths/shortcut_tree.hpp"
#include "tourpaths/tournament.hpp"

namespace tourpaths {

/// Size limit of an exhaustive oracle. Inputs above `limit` are rejected
/// unless `override_limit` acknowledges the cost.
struct OracleCap {
  std::size_t limit;
  bool override_limit = false;
};

inline constexpr OracleCap kHopsCap{10};
inline constexpr OracleCap kShortcutsCap{9};
inline constexpr OracleCap kSquareCap{12};
inline constexpr OracleCap kTreeCap{12};
inline constexpr OracleCap kBetaCap{9};
inline constexpr OracleCap kTransitiveCap{24};
inline constexpr std::size_t kBruteMiddleLimit = 200;

/// Sizes beyond which the subset tables no longer fit, whatever the cap says.
inline constexpr std::size_t kHardSubsetLimit = 24;

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& oracle, std::size_t n, std::size_t limit)
      : std::runtime_error(oracle + ": n=" + std::to_string(n) + " exceeds cap " + std::to_string(limit) +
                           " (override required)"),
        n_(n),
        limit_(limit) {}
  std::size_t n() const noexcept { return n_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t n_;
  std::size_t limit_;
};

template <class Witness>
struct Exact {
  std::int64_t value = 0;
  Witness witness{};
};

/// Most hops over all Hamiltonian paths. Dynamic program over
/// (visited set, last two vertices); hop counts only depend on those.
Exact<VertexPath> max_hops_exact(const Tournament& t, OracleCap cap = kHopsCap);

/// Fewest hops over all Hamiltonian paths (same program, minimising).
Exact<VertexPath> min_hops_exact(const Tournament& t, OracleCap cap = kHopsCap);

/// Most shortcuts over all Hamiltonian paths. Appending w after a prefix set S
/// adds |N-(w) & S| - 1 shortcuts, so (visited set, last vertex) suffices.
Exact<VertexPath> max_shortcuts_exact(const Tournament& t, OracleCap cap = kShortcutsCap);

/// Longest directed path whose hops are all edges; witness is such a path.
Exact<VertexPath> longest_square_exact(const Tournament& t, OracleCap cap = kSquareCap);

/// Longest k-th power of a directed path (every v_i -> v_j, i < j <= i+k),
/// by depth-first search over extensions.
Exact<VertexPath> longest_power_exact(const Tournament& t, std::size_t k, OracleCap cap = kSquareCap);

/// Best spanning shortcut tree, by enumerating every shortcut tree (each is
/// determined by its sequence of root choices) and counting the shortcuts of
/// its in-order path.
Exact<ShortcutTree> best_tree_exact(const Tournament& t, OracleCap cap = kTreeCap);

/// Best spanning shortcut tree by memoised recursion over vertex subsets:
/// with root v, the count splits into the two subtrees, the edges from the
/// left set to the right set, and |L|-1 + |R|-1 edges through v.
Exact<ShortcutTree> best_tree_by_subsets(const Tournament& t, OracleCap cap = kTreeCap);

/// Maximum acyclic subgraph size: best vertex ordering by forward edges.
/// Witness is the ordering.
Exact<VertexPath> beta_exact(const Tournament& t, OracleCap cap = kBetaCap);

/// m(v) by enumerating ordered triples u -> v -> w with u -> w.
std::int64_t middle_count_brute(const Tournament& t, Vertex v);

/// Largest transitive subtournament by branch and bound over its source
/// vertex. Witness listed source to sink.
Exact<VertexPath> max_transitive_exact(const Tournament& t, OracleCap cap = kTransitiveCap);

/// True iff some k vertices induce a transitive subtournament (false when k > n).
bool has_transitive_k(const Tournament& t, std::size_t k);

/// True iff `a` and `b` are isomorphic, tried over all relabellings (n <= 8).
bool isomorphic_brute(const Tournament& a, const Tournament& b);

/// Per-instance extremal values of a small tournament.
struct OracleReport {
  std::size_t n = 0;
  std::int64_t max_hops = 0;
  std::int64_t max_shortcuts = 0;
  std::int64_t longest_square = 0;
  std::int64_t best_tree_shortcuts = 0;
  std::int64_t beta = 0;
  VertexPath hops_witness;
  VertexPath shortcuts_witness;
  VertexPath square_witness;
  ShortcutTree tree_witness;
  VertexPath beta_witness;
};

/// All statistics with the default caps (so n <= 9 unless overridden).
OracleReport oracle_report(const Tournament& t, bool override_caps = false);

/// "n\tmax_hops\tmax_shortcuts\tlongest_square\tbest_tree\tbeta"
std::string oracle_report_header();
std::string oracle_report_row(const OracleReport& r);

/// Result of checking every labelled tournament on n vertices.
struct SmallSuiteReport {
  std::size_t n = 0;
  std::uint64_t tournaments = 0;
  std::int64_t min_max_hops = 0;
  std::int64_t expected = 0;                  // max(0, ceil((2n-6)/3))
  std::uint64_t minimizers = 0;               // labelled tournaments attaining the minimum
  std::optional<bool> minimizers_are_rn;      // set for n = 3 and 6
  bool pass = false;
};

/// Enumerates the 2^C(n,2) orientations of the upper triangle in
/// lexicographic mask order. n <= 6 computes the exact minimum of the maximum
/// hop count and, for n = 3 and 6, checks every minimiser against R_n. n = 7
/// (two million tournaments) needs `allow_n7` and only confirms that every
/// tournament reaches the expected value, plus that R_7 attains it exactly.
SmallSuiteReport exhaustive_small_suite(std::size_t n, bool allow_n7 = false);

/// Builds the tournament on n vertices whose upper-triangle orientation is
/// `mask`: bit p (pairs (i,j), i<j, lexicographic) set means i->j.
Tournament tournament_from_mask(std::size_t n, std::uint64_t mask);

}  // namespace tourpaths
