#include "tourpaths/oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

#include "tourpaths/constructions.hpp"
#include "tourpaths/hop_paths.hpp"

namespace tourpaths {

namespace {

using Mask = std::uint64_t;

void require_cap(const char* name, std::size_t n, OracleCap cap, std::size_t hard_limit) {
  if (n > cap.limit && !cap.override_limit) throw CapExceeded(name, n, cap.limit);
  if (n > hard_limit) throw CapExceeded(name, n, hard_limit);
}

// Out-neighbourhoods as single words; callers guarantee n <= 64.
std::vector<Mask> out_masks(const Tournament& t) {
  std::vector<Mask> out(t.size());
  for (Vertex v = 0; v < t.size(); ++v) out[v] = t.out_row(v)[0];
  return out;
}

Mask full_set(std::size_t n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

int count(Mask m) { return std::popcount(m); }

constexpr std::int16_t kUnset = std::numeric_limits<std::int16_t>::min();

// Table over (subset, second-to-last, last) for path programs whose gain
// depends on the last two vertices only.
class PairTable {
 public:
  explicit PairTable(std::size_t n) : n_(n), cells_((std::size_t{1} << n) * n * n, kUnset) {}
  std::int16_t& at(Mask s, std::size_t a, std::size_t b) { return cells_[(s * n_ + a) * n_ + b]; }

 private:
  std::size_t n_;
  std::vector<std::int16_t> cells_;
};

Exact<VertexPath> hop_program(const Tournament& t, bool maximize) {
  const std::size_t n = t.size();
  if (n == 1) return {0, {0}};
  const std::vector<Mask> out = out_masks(t);
  auto edge = [&](std::size_t a, std::size_t b) { return (out[a] >> b) & 1u; };
  auto better = [&](int x, int y) { return maximize ? x > y : x < y; };

  PairTable dp(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && edge(a, b)) dp.at((Mask{1} << a) | (Mask{1} << b), a, b) = 0;

  const Mask all = full_set(n);
  for (Mask s = 1; s <= all; ++s) {
    if (count(s) < 2 || s == all) continue;
    for (std::size_t a = 0; a < n; ++a) {
      if (!((s >> a) & 1u)) continue;
      for (std::size_t b = 0; b < n; ++b) {
        const std::int16_t cur = dp.at(s, a, b);
        if (cur == kUnset) continue;
        for (Mask c_bits = out[b] & ~s; c_bits; c_bits &= c_bits - 1) {
          const auto c = static_cast<std::size_t>(std::countr_zero(c_bits));
          const auto val = static_cast<std::int16_t>(cur + (edge(a, c) ? 1 : 0));
          std::int16_t& slot = dp.at(s | (Mask{1} << c), b, c);
          if (slot == kUnset || better(val, slot)) slot = val;
        }
      }
    }
  }

  int best = kUnset;
  std::size_t ba = 0, bb = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::int16_t v = dp.at(all, a, b);
      if (v != kUnset && (best == kUnset || better(v, best))) {
        best = v;
        ba = a;
        bb = b;
      }
    }

  // Walk back through predecessor states.
  VertexPath rev{static_cast<Vertex>(bb), static_cast<Vertex>(ba)};
  Mask s = all;
  int val = best;
  std::size_t a = ba, b = bb;
  while (count(s) > 2) {
    const Mask prev = s & ~(Mask{1} << b);
    bool found = false;
    for (std::size_t p = 0; p < n && !found; ++p) {
      if (!((prev >> p) & 1u) || p == a) continue;
      const std::int16_t pv = dp.at(prev, p, a);
      if (pv != kUnset && pv + (edge(p, b) ? 1 : 0) == val) {
        val = pv;
        b = a;
        a = p;
        s = prev;
        rev.push_back(static_cast<Vertex>(p));
        found = true;
      }
    }
    if (!found) throw std::logic_error("hop program: broken predecessor chain");
  }
  return {best, VertexPath(rev.rbegin(), rev.rend())};
}

}  // namespace

Exact<VertexPath> max_hops_exact(const Tournament& t, OracleCap cap) {
  require_cap("max_hops_exact", t.size(), cap, 16);
  return hop_program(t, true);
}

Exact<VertexPath> min_hops_exact(const Tournament& t, OracleCap cap) {
  require_cap("min_hops_exact", t.size(), cap, 16);
  return hop_program(t, false);
}

Exact<VertexPath> max_shortcuts_exact(const Tournament& t, OracleCap cap) {
  const std::size_t n = t.size();
  require_cap("max_shortcuts_exact", n, cap, 20);
  if (n == 1) return {0, {0}};
  const std::vector<Mask> out = out_masks(t);
  const Mask all = full_set(n);
  std::vector<Mask> in(n);
  for (std::size_t v = 0; v < n; ++v) in[v] = all & ~out[v] & ~(Mask{1} << v);

  std::vector<std::int32_t> dp((std::size_t{1} << n) * n, std::numeric_limits<std::int32_t>::min());
  auto at = [&](Mask s, std::size_t v) -> std::int32_t& { return dp[s * n + v]; };
  for (std::size_t v = 0; v < n; ++v) at(Mask{1} << v, v) = 0;
  for (Mask s = 1; s < all; ++s)
    for (std::size_t b = 0; b < n; ++b) {
      const std::int32_t cur = at(s, b);
      if (cur == std::numeric_limits<std::int32_t>::min()) continue;
      for (Mask w_bits = out[b] & ~s; w_bits; w_bits &= w_bits - 1) {
        const auto w = static_cast<std::size_t>(std::countr_zero(w_bits));
        const std::int32_t val = cur + count(in[w] & s) - 1;
        std::int32_t& slot = at(s | (Mask{1} << w), w);
        slot = std::max(slot, val);
      }
    }
  std::size_t last = 0;
  for (std::size_t v = 1; v < n; ++v)
    if (at(all, v) > at(all, last)) last = v;
  const std::int32_t best = at(all, last);

  VertexPath rev{static_cast<Vertex>(last)};
  Mask s = all;
  std::int32_t val = best;
  std::size_t w = last;
  while (count(s) > 1) {
    const Mask prev = s & ~(Mask{1} << w);
    const std::int32_t gain = count(in[w] & prev) - 1;
    bool found = false;
    for (Mask b_bits = prev & in[w]; b_bits && !found; b_bits &= b_bits - 1) {
      const auto b = static_cast<std::size_t>(std::countr_zero(b_bits));
      if (at(prev, b) != std::numeric_limits<std::int32_t>::min() && at(prev, b) + gain == val) {
        val = at(prev, b);
        s = prev;
        w = b;
        rev.push_back(static_cast<Vertex>(b));
        found = true;
      }
    }
    if (!found) throw std::logic_error("shortcut program: broken predecessor chain");
  }
  return {best, VertexPath(rev.rbegin(), rev.rend())};
}

Exact<VertexPath> longest_square_exact(const Tournament& t, OracleCap cap) {
  const std::size_t n = t.size();
  require_cap("longest_square_exact", n, cap, 16);
  if (n == 1) return {1, {0}};
  const std::vector<Mask> out = out_masks(t);
  // reach: 1 = some square path covers exactly s and ends (a, b).
  std::vector<std::uint8_t> reach((std::size_t{1} << n) * n * n, 0);
  auto at = [&](Mask s, std::size_t a, std::size_t b) -> std::uint8_t& { return reach[(s * n + a) * n + b]; };
  for (std::size_t a = 0; a < n; ++a)
    for (Mask b_bits = out[a]; b_bits; b_bits &= b_bits - 1) {
      const auto b = static_cast<std::size_t>(std::countr_zero(b_bits));
      at((Mask{1} << a) | (Mask{1} << b), a, b) = 1;
    }
  const Mask all = full_set(n);
  int best = 2;
  Mask best_s = 0;
  std::size_t best_a = 0, best_b = 0;
  for (Mask s = 1; s <= all; ++s) {
    if (count(s) < 2) continue;
    for (std::size_t a = 0; a < n; ++a) {
      if (!((s >> a) & 1u)) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (!at(s, a, b)) continue;
        if (count(s) > best || best_s == 0) {
          best = count(s);
          best_s = s;
          best_a = a;
          best_b = b;
        }
        for (Mask c_bits = out[a] & out[b] & ~s; c_bits; c_bits &= c_bits - 1) {
          const auto c = static_cast<std::size_t>(std::countr_zero(c_bits));
          at(s | (Mask{1} << c), b, c) = 1;
        }
      }
    }
    if (s == all) break;
  }
  VertexPath rev{static_cast<Vertex>(best_b), static_cast<Vertex>(best_a)};
  Mask s = best_s;
  std::size_t a = best_a, b = best_b;
  while (count(s) > 2) {
    const Mask prev = s & ~(Mask{1} << b);
    bool found = false;
    for (std::size_t p = 0; p < n && !found; ++p) {
      if (p == a || !((prev >> p) & 1u)) continue;
      if (at(prev, p, a) && ((out[p] >> b) & 1u)) {
        s = prev;
        b = a;
        a = p;
        rev.push_back(static_cast<Vertex>(p));
        found = true;
      }
    }
    if (!found) throw std::logic_error("square program: broken predecessor chain");
  }
  return {best, VertexPath(rev.rbegin(), rev.rend())};
}

Exact<VertexPath> longest_power_exact(const Tournament& t, std::size_t k, OracleCap cap) {
  const std::size_t n = t.size();
  require_cap("longest_power_exact", n, cap, 64);
  if (k == 0) throw std::invalid_argument("longest_power_exact: k must be >= 1");
  const std::vector<Mask> out = out_masks(t);
  Exact<VertexPath> best{1, {0}};
  VertexPath path;
  std::function<void(Mask)> extend = [&](Mask used) {
    if (static_cast<std::int64_t>(path.size()) > best.value) {
      best.value = static_cast<std::int64_t>(path.size());
      best.witness = path;
    }
    if (best.value == static_cast<std::int64_t>(n)) return;
    Mask cand = ~used & full_set(n);
    for (std::size_t j = 0; j < k && j < path.size(); ++j) cand &= out[path[path.size() - 1 - j]];
    for (; cand; cand &= cand - 1) {
      const auto c = static_cast<Vertex>(std::countr_zero(cand));
      path.push_back(c);
      extend(used | (Mask{1} << c));
      path.pop_back();
    }
  };
  for (Vertex v = 0; v < n; ++v) {
    path.assign(1, v);
    extend(Mask{1} << v);
  }
  return best;
}

namespace {

// Rebuilds a shortcut tree from its preorder; the left block of every
// subtree is the in-neighbourhood of its root within the subtree.
Vertex tree_from_preorder(const std::vector<Mask>& out, std::span<const Vertex> pre, std::size_t& pos, Mask s,
                          ShortcutTree& tree) {
  if (s == 0) return kNoVertex;
  const Vertex v = pre[pos++];
  const Mask rest = s & ~(Mask{1} << v);
  tree.left[v] = tree_from_preorder(out, pre, pos, rest & ~out[v], tree);
  tree.right[v] = tree_from_preorder(out, pre, pos, rest & out[v], tree);
  return v;
}

}  // namespace

Exact<ShortcutTree> best_tree_exact(const Tournament& t, OracleCap cap) {
  const std::size_t n = t.size();
  require_cap("best_tree_exact", n, cap, 16);
  const std::vector<Mask> out = out_masks(t);

  std::vector<Vertex> pre;
  pre.reserve(n);
  std::vector<Vertex> best_pre;
  std::int64_t best = -1;
  std::vector<Vertex> order(n);

  auto score = [&]() {
    ShortcutTree tree(n);
    std::size_t pos = 0;
    tree.root = tree_from_preorder(out, pre, pos, full_set(n), tree);
    const VertexPath path = inorder(tree);
    // forward non-consecutive pairs along the in-order
    std::int64_t c = 0;
    Mask ahead = 0;
    for (std::size_t i = n; i-- > 0;) {
      if (i + 2 < n) ahead |= Mask{1} << path[i + 2];
      c += count(out[path[i]] & ahead);
    }
    if (c > best) {
      best = c;
      best_pre = pre;
    }
  };

  std::function<void(Mask, const std::function<void()>&)> enumerate = [&](Mask s, const std::function<void()>& done) {
    if (s == 0) {
      done();
      return;
    }
    for (Mask bits = s; bits; bits &= bits - 1) {
      const auto v = static_cast<Vertex>(std::countr_zero(bits));
      const Mask rest = s & ~(Mask{1} << v);
      pre.push_back(v);
      enumerate(rest & ~out[v], [&] { enumerate(rest & out[v], done); });
      pre.pop_back();
    }
  };
  enumerate(full_set(n), score);

  ShortcutTree tree(n);
  std::size_t pos = 0;
  tree.root = tree_from_preorder(out, best_pre, pos, full_set(n), tree);
  return {best, std::move(tree)};
}

Exact<ShortcutTree> best_tree_by_subsets(const Tournament& t, OracleCap cap) {
  const std::size_t n = t.size();
  require_cap("best_tree_by_subsets", n, cap, 20);
  const std::vector<Mask> out = out_masks(t);
  const Mask all = full_set(n);
  std::vector<std::int32_t> best(std::size_t{1} << n, -1);
  std::vector<std::uint8_t> root(std::size_t{1} << n, 0);
  best[0] = 0;
  for (Mask s = 1; s <= all; ++s) {
    for (Mask bits = s; bits; bits &= bits - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(bits));
      const Mask rest = s & ~(Mask{1} << v);
      const Mask l = rest & ~out[v];
      const Mask r = rest & out[v];
      std::int32_t across = 0;
      for (Mask u_bits = l; u_bits; u_bits &= u_bits - 1) across += count(out[std::countr_zero(u_bits)] & r);
      const std::int32_t val =
          best[l] + best[r] + across + std::max(count(l) - 1, 0) + std::max(count(r) - 1, 0);
      if (val > best[s]) {
        best[s] = val;
        root[s] = static_cast<std::uint8_t>(v);
      }
    }
    if (s == all) break;
  }
  ShortcutTree tree(n);
  std::function<Vertex(Mask)> build = [&](Mask s) -> Vertex {
    if (s == 0) return kNoVertex;
    const Vertex v = root[s];
    const Mask rest = s & ~(Mask{1} << v);
    tree.left[v] = build(rest & ~out[v]);
    tree.right[v] = build(rest & out[v]);
    return v;
  };
  tree.root = build(all);
  return {best[all], std::move(tree)};
}

Exact<VertexPath> beta_exact(const Tournament& t, OracleCap cap) {
  const std::size_t n = t.size();
  require_cap("beta_exact", n, cap, kHardSubsetLimit);
  const std::vector<Mask> out = out_masks(t);
  const Mask all = full_set(n);
  std::vector<Mask> in(n);
  for (std::size_t v = 0; v < n; ++v) in[v] = all & ~out[v] & ~(Mask{1} << v);
  std::vector<std::int32_t> f(std::size_t{1} << n, 0);
  for (Mask s = 1; s <= all; ++s) {
    std::int32_t bestv = -1;
    for (Mask bits = s; bits; bits &= bits - 1) {
      const auto w = static_cast<std::size_t>(std::countr_zero(bits));
      const Mask prev = s & ~(Mask{1} << w);
      bestv = std::max(bestv, f[prev] + count(in[w] & prev));
    }
    f[s] = bestv;
    if (s == all) break;
  }
  VertexPath rev;
  Mask s = all;
  while (s) {
    for (Mask bits = s; bits; bits &= bits - 1) {
      const auto w = static_cast<std::size_t>(std::countr_zero(bits));
      const Mask prev = s & ~(Mask{1} << w);
      if (f[prev] + count(in[w] & prev) == f[s]) {
        rev.push_back(static_cast<Vertex>(w));
        s = prev;
        break;
      }
    }
  }
  return {f[all], VertexPath(rev.rbegin(), rev.rend())};
}

std::int64_t middle_count_brute(const Tournament& t, Vertex v) {
  const std::size_t n = t.size();
  if (n > kBruteMiddleLimit) throw CapExceeded("middle_count_brute", n, kBruteMiddleLimit);
  if (v >= n) throw std::invalid_argument("middle_count_brute: vertex out of range");
  std::int64_t c = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex w = 0; w < n; ++w)
      if (u != v && w != v && u != w && t.has_edge(u, v) && t.has_edge(v, w) && t.has_edge(u, w)) ++c;
  return c;
}

namespace {

// Branch and bound over transitive subsets, choosing each member as the
// source of what remains. A vertex tried as source stays in the pool for
// later branches, where it may appear further down the order. Stops once
// `stop_at` vertices are reached.
class TransitiveSearch {
 public:
  TransitiveSearch(std::vector<Mask> out, std::size_t stop_at) : out_(std::move(out)), stop_at_(stop_at) {}

  void run(Mask pool) { search(pool); }
  const VertexPath& best() const { return best_; }

 private:
  void search(Mask pool) {
    if (chain_.size() > best_.size()) best_ = chain_;
    if (best_.size() >= stop_at_) return;
    if (chain_.size() + static_cast<std::size_t>(count(pool)) <= best_.size()) return;
    for (Mask sources = pool; sources; sources &= sources - 1) {
      const auto v = static_cast<Vertex>(std::countr_zero(sources));
      const Mask rest = pool & out_[v];
      if (chain_.size() + 1 + static_cast<std::size_t>(count(rest)) <= best_.size()) continue;
      chain_.push_back(v);
      search(rest);
      chain_.pop_back();
      if (best_.size() >= stop_at_) return;
    }
  }

  std::vector<Mask> out_;
  std::size_t stop_at_;
  VertexPath chain_;
  VertexPath best_;
};

}  // namespace

Exact<VertexPath> max_transitive_exact(const Tournament& t, OracleCap cap) {
  const std::size_t n = t.size();
  require_cap("max_transitive_exact", n, cap, 64);
  TransitiveSearch search(out_masks(t), n);
  search.run(full_set(n));
  return {static_cast<std::int64_t>(search.best().size()), search.best()};
}

bool has_transitive_k(const Tournament& t, std::size_t k) {
  const std::size_t n = t.size();
  if (k > n) return false;
  if (k <= 1) return true;
  if (n > 64) {
    // Beyond one-word masks only the Stearns size argument is available.
    if (k <= 63 && n >= (std::size_t{1} << (k - 1))) return true;
    throw std::invalid_argument("has_transitive_k: exhaustive search needs n <= 64");
  }
  TransitiveSearch search(out_masks(t), k);
  search.run(full_set(n));
  return search.best().size() >= k;
}

bool isomorphic_brute(const Tournament& a, const Tournament& b) {
  const std::size_t n = a.size();
  if (n != b.size()) return false;
  if (n > 8) throw std::invalid_argument("isomorphic_brute: n must be <= 8");
  std::vector<std::size_t> da = a.out_degrees(), db = b.out_degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), Vertex{0});
  do {
    bool ok = true;
    for (Vertex i = 0; i < n && ok; ++i)
      for (Vertex j = 0; j < n && ok; ++j)
        if (i != j && a.has_edge(i, j) != b.has_edge(p[i], p[j])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

OracleReport oracle_report(const Tournament& t, bool override_caps) {
  auto cap = [&](OracleCap c) { return OracleCap{c.limit, override_caps}; };
  OracleReport r;
  r.n = t.size();
  auto hops = max_hops_exact(t, cap(kHopsCap));
  auto sc = max_shortcuts_exact(t, cap(kShortcutsCap));
  auto sq = longest_square_exact(t, cap(kSquareCap));
  auto tree = best_tree_exact(t, cap(kTreeCap));
  auto beta = beta_exact(t, cap(kBetaCap));
  r.max_hops = hops.value;
  r.hops_witness = std::move(hops.witness);
  r.max_shortcuts = sc.value;
  r.shortcuts_witness = std::move(sc.witness);
  r.longest_square = sq.value;
  r.square_witness = std::move(sq.witness);
  r.best_tree_shortcuts = tree.value;
  r.tree_witness = std::move(tree.witness);
  r.beta = beta.value;
  r.beta_witness = std::move(beta.witness);
  return r;
}

std::string oracle_report_header() { return "n\tmax_hops\tmax_shortcuts\tlongest_square\tbest_tree\tbeta"; }

std::string oracle_report_row(const OracleReport& r) {
  std::ostringstream os;
  os << r.n << '\t' << r.max_hops << '\t' << r.max_shortcuts << '\t' << r.longest_square << '\t'
     << r.best_tree_shortcuts << '\t' << r.beta;
  return os.str();
}

Tournament tournament_from_mask(std::size_t n, std::uint64_t mask) {
  TournamentBuilder b(n);
  std::size_t p = 0;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j, ++p) {
      if ((mask >> p) & 1u)
        b.orient(i, j);
      else
        b.orient(j, i);
    }
  return std::move(b).build();
}

namespace {

// Depth-first search for a Hamiltonian path with at least `target` hops.
bool reaches_hops(const std::vector<Mask>& out, std::size_t n, std::int64_t target) {
  const Mask all = full_set(n);
  std::vector<Vertex> path;
  std::function<bool(Mask, std::int64_t)> dfs = [&](Mask used, std::int64_t hops) {
    const auto len = static_cast<std::int64_t>(path.size());
    if (used == all) return hops >= target;
    if (hops + (static_cast<std::int64_t>(n) - len) < target) return false;
    for (Mask c_bits = out[path.back()] & ~used; c_bits; c_bits &= c_bits - 1) {
      const auto c = static_cast<Vertex>(std::countr_zero(c_bits));
      const std::int64_t gain = len >= 2 && ((out[path[len - 2]] >> c) & 1u) ? 1 : 0;
      path.push_back(c);
      const bool ok = dfs(used | (Mask{1} << c), hops + gain);
      path.pop_back();
      if (ok) return true;
    }
    return false;
  };
  for (Vertex v = 0; v < n; ++v) {
    path.assign(1, v);
    if (dfs(Mask{1} << v, 0)) return true;
  }
  return false;
}

}  // namespace

SmallSuiteReport exhaustive_small_suite(std::size_t n, bool allow_n7) {
  if (n == 0 || n > 7 || (n == 7 && !allow_n7))
    throw std::invalid_argument("exhaustive_small_suite: n must be in 1..6 (7 with override)");
  SmallSuiteReport r;
  r.n = n;
  const auto sn = static_cast<std::int64_t>(n);
  r.expected = sn <= 3 ? 0 : (2 * sn - 6 + 2) / 3;
  const std::size_t pairs = n * (n - 1) / 2;
  const std::uint64_t total = std::uint64_t{1} << pairs;
  r.tournaments = total;

  if (n == 7) {
    bool all_reach = true;
    for (std::uint64_t mask = 0; mask < total && all_reach; ++mask) {
      const Tournament t = tournament_from_mask(n, mask);
      all_reach = reaches_hops(out_masks(t), n, r.expected);
    }
    const std::int64_t rn_hops = max_hops_exact(make_rn(7)).value;
    r.min_max_hops = all_reach ? std::min(rn_hops, r.expected) : r.expected - 1;
    r.pass = all_reach && rn_hops == r.expected;
    return r;
  }

  std::int64_t min_hops = std::numeric_limits<std::int64_t>::max();
  std::vector<std::uint64_t> minimizers;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const std::int64_t h = max_hops_exact(tournament_from_mask(n, mask)).value;
    if (h < min_hops) {
      min_hops = h;
      minimizers.clear();
    }
    if (h == min_hops) minimizers.push_back(mask);
  }
  r.min_max_hops = min_hops;
  r.minimizers = minimizers.size();
  r.pass = min_hops == r.expected;
  if (n == 3 || n == 6) {
    const Tournament rn = make_rn(n);
    bool all_rn = true;
    for (std::uint64_t mask : minimizers)
      if (!isomorphic_brute(tournament_from_mask(n, mask), rn)) {
        all_rn = false;
        break;
      }
    r.minimizers_are_rn = all_rn;
    r.pass = r.pass && all_rn;
  }
  return r;
}

}  // namespace tourpaths
