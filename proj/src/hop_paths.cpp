#include "tourpaths/hop_paths.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "tourpaths/oracles.hpp"

namespace tourpaths {

bool is_directed_path(const Tournament& t, std::span<const Vertex> path) {
  std::vector<bool> seen(t.size(), false);
  for (std::size_t i = 0; i < path.size(); ++i) {
    const Vertex v = path[i];
    if (v >= t.size() || seen[v]) return false;
    seen[v] = true;
    if (i > 0 && !t.has_edge(path[i - 1], v)) return false;
  }
  return true;
}

bool is_hamiltonian_path(const Tournament& t, std::span<const Vertex> path) {
  return path.size() == t.size() && is_directed_path(t, path);
}

namespace {

void require_path(const Tournament& t, std::span<const Vertex> path) {
  if (!is_directed_path(t, path)) throw std::invalid_argument("not a directed path of the tournament");
}

}  // namespace

std::int64_t count_hops(const Tournament& t, std::span<const Vertex> path) {
  require_path(t, path);
  std::int64_t hops = 0;
  for (std::size_t i = 0; i + 2 < path.size(); ++i) hops += t.has_edge(path[i], path[i + 2]) ? 1 : 0;
  return hops;
}

std::int64_t count_shortcuts(const Tournament& t, std::span<const Vertex> path) {
  require_path(t, path);
  // Walk backwards keeping the set of vertices at least two places ahead.
  VertexMask ahead(t.size());
  std::int64_t total = 0;
  for (std::size_t i = path.size(); i-- > 0;) {
    if (i + 2 < path.size()) ahead.insert(path[i + 2]);
    total += static_cast<std::int64_t>(bits::count_and(t.out_row(path[i]), ahead.words()));
  }
  return total;
}

bool is_hop_complete(const Tournament& t, std::span<const Vertex> path) {
  const std::int64_t hops = count_hops(t, path);
  return path.size() <= 2 || hops == static_cast<std::int64_t>(path.size()) - 2;
}

VertexPath greedy_ham_path(const Tournament& t) {
  VertexPath path;
  path.reserve(t.size());
  for (Vertex v = 0; v < t.size(); ++v) {
    if (path.empty() || t.has_edge(v, path.front())) {
      path.insert(path.begin(), v);
      continue;
    }
    std::size_t at = path.size();
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      if (t.has_edge(path[i], v) && t.has_edge(v, path[i + 1])) {
        at = i + 1;
        break;
      }
    path.insert(path.begin() + static_cast<std::ptrdiff_t>(at), v);
  }
  return path;
}

std::int64_t hop_lower_bound(std::size_t n) {
  if (n < 4) return 0;
  const auto m = static_cast<std::int64_t>(n);
  return (4 * m - 10 + 6) / 7;
}

std::int64_t hop_guarantee(std::size_t n) {
  if (n <= 10) {
    const auto m = static_cast<std::int64_t>(n);
    return m <= 3 ? 0 : (2 * m - 6 + 2) / 3;
  }
  return hop_lower_bound(n);
}

namespace {

constexpr std::size_t kExactThreshold = 10;

class HopBuilder {
 public:
  explicit HopBuilder(const Tournament& t) : t_(t) {}

  // `members` sorted ascending.
  VertexPath solve(VertexSet members) {
    VertexPath prefix;
    VertexPath suffix;  // reversed

    std::vector<std::size_t> deg;
    if (members.size() > kExactThreshold) {
      VertexMask mask(t_.size());
      for (Vertex v : members) mask.insert(v);
      deg.resize(members.size());
      for (std::size_t i = 0; i < members.size(); ++i) deg[i] = bits::count_and(t_.out_row(members[i]), mask.words());
    }

    auto remove = [&](std::size_t idx) {
      const Vertex x = members[idx];
      members.erase(members.begin() + static_cast<std::ptrdiff_t>(idx));
      deg.erase(deg.begin() + static_cast<std::ptrdiff_t>(idx));
      for (std::size_t i = 0; i < members.size(); ++i)
        if (t_.has_edge(members[i], x)) --deg[i];
    };
    auto index_of = [&](Vertex x) {
      return static_cast<std::size_t>(std::lower_bound(members.begin(), members.end(), x) - members.begin());
    };

    while (members.size() > kExactThreshold) {
      const std::size_t m = members.size();
      const bool pair_peel_ok = hop_guarantee(m - 2) + 1 >= hop_guarantee(m);
      bool peeled = false;
      for (std::size_t i = 0; i < m && !peeled; ++i) {
        if (deg[i] == m - 1) {  // source
          prefix.push_back(members[i]);
          remove(i);
          peeled = true;
        } else if (deg[i] == 0) {  // sink
          suffix.push_back(members[i]);
          remove(i);
          peeled = true;
        }
      }
      if (!peeled && pair_peel_ok) {
        for (std::size_t i = 0; i < m && !peeled; ++i) {
          const Vertex v = members[i];
          if (deg[i] == 1) {
            // v -> w only: ..., v, w closes the path
            Vertex w = kNone;
            for (Vertex u : members)
              if (u != v && t_.has_edge(v, u)) w = u;
            suffix.push_back(w);
            suffix.push_back(v);
            remove(index_of(w));
            remove(index_of(v));
            peeled = true;
          } else if (deg[i] == m - 2) {
            // w -> v only: w, v, ... opens the path
            Vertex w = kNone;
            for (Vertex u : members)
              if (u != v && t_.has_edge(u, v)) w = u;
            prefix.push_back(w);
            prefix.push_back(v);
            remove(index_of(w));
            remove(index_of(v));
            peeled = true;
          }
        }
      }
      if (!peeled) break;
    }

    VertexPath core = members.size() > kExactThreshold ? split(members, deg) : exact(members);
    prefix.insert(prefix.end(), core.begin(), core.end());
    prefix.insert(prefix.end(), suffix.rbegin(), suffix.rend());
    return prefix;
  }

 private:
  static constexpr Vertex kNone = static_cast<Vertex>(-1);

  VertexPath exact(const VertexSet& members) {
    if (members.empty()) return {};
    const Tournament sub = induced(t_, members);
    const auto best = max_hops_exact(sub, OracleCap{kExactThreshold});
    VertexPath out;
    out.reserve(best.witness.size());
    for (Vertex v : best.witness) out.push_back(members[v]);
    return out;
  }

  VertexPath split(const VertexSet& members, const std::vector<std::size_t>& deg) {
    const std::size_t m = members.size();
    std::size_t pick = m;
    std::size_t pick_gap = 0;
    bool in_window = false;
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t d4 = 4 * deg[i];
      const bool window = d4 + 2 >= m && d4 + 2 <= 3 * m;
      const std::size_t gap = 2 * deg[i] > m ? 2 * deg[i] - m : m - 2 * deg[i];
      if (window && !in_window) {
        in_window = true;
        pick = i;
        pick_gap = gap;
      } else if (window == in_window && (pick == m || gap < pick_gap)) {
        pick = i;
        pick_gap = gap;
      }
    }
    const Vertex v = members[pick];
    VertexSet before;
    VertexSet after;
    for (Vertex u : members) {
      if (u == v) continue;
      (t_.has_edge(u, v) ? before : after).push_back(u);
    }
    VertexPath path = solve(std::move(before));
    path.push_back(v);
    VertexPath tail = solve(std::move(after));
    path.insert(path.end(), tail.begin(), tail.end());
    return path;
  }

  const Tournament& t_;
};

}  // namespace

VertexPath hop_rich_path(const Tournament& t) {
  VertexSet all(t.size());
  for (Vertex v = 0; v < t.size(); ++v) all[v] = v;
  return HopBuilder(t).solve(std::move(all));
}

}  // namespace tourpaths
