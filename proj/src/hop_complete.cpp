#include "tourpaths/hop_complete.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "tourpaths/constructions.hpp"
#include "tourpaths/shortcut_tree.hpp"
#include "tourpaths/ztable.hpp"

namespace tourpaths {

std::pair<VertexSet, VertexSet> pair_neighborhoods(const Tournament& t, Vertex u, Vertex v) {
  if (u >= t.size() || v >= t.size()) throw std::invalid_argument("pair_neighborhoods: vertex out of range");
  if (u == v) throw std::invalid_argument("pair_neighborhoods: u and v must differ");
  VertexSet in, out;
  for (Vertex w = 0; w < t.size(); ++w) {
    if (w == u || w == v) continue;
    const bool to_u = t.has_edge(u, w);
    const bool to_v = t.has_edge(v, w);
    if (to_u && to_v)
      out.push_back(w);
    else if (!to_u && !to_v)
      in.push_back(w);
  }
  return {std::move(in), std::move(out)};
}

namespace {

PairStat stat_of(const Tournament& t, Vertex u, Vertex v) {
  PairStat s;
  s.u = u;
  s.v = v;
  s.common_out = static_cast<std::int64_t>(bits::count_and(t.out_row(u), t.out_row(v)));
  // Exactly one of u, v lies outside both out-rows.
  s.common_in = static_cast<std::int64_t>(t.size() - 1 - bits::count_or(t.out_row(u), t.out_row(v)));
  s.score = std::min(s.common_out, s.common_in);
  return s;
}

PairStat delta2_exhaustive(const Tournament& t) {
  PairStat best = stat_of(t, 0, 1);
  for (Vertex u = 0; u < t.size(); ++u)
    for (Vertex v = u + 1; v < t.size(); ++v) {
      const PairStat s = stat_of(t, u, v);
      if (s.score > best.score) best = s;
    }
  return best;
}

PairStat delta2_anchored(const Tournament& t) {
  const std::size_t n = t.size();
  const std::vector<std::size_t> deg = t.out_degrees();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  auto imbalance = [&](Vertex v) {
    const auto d2 = static_cast<std::int64_t>(2 * deg[v]);
    return std::abs(d2 - static_cast<std::int64_t>(n - 1));
  };
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return imbalance(a) < imbalance(b); });

  const std::int64_t need = middle_lemma_bound(n);
  Vertex anchor = order.front();
  std::int64_t anchor_m = -1;
  for (Vertex v : order) {
    const std::int64_t m = middle_count(t, v, deg);
    if (m > anchor_m) {
      anchor_m = m;
      anchor = v;
    }
    if (m >= need) break;
  }

  PairStat best;
  best.score = -1;
  for (Vertex u = 0; u < n; ++u) {
    if (u == anchor) continue;
    PairStat s = u < anchor ? stat_of(t, u, anchor) : stat_of(t, anchor, u);
    if (s.score > best.score) best = s;
  }
  best.exhaustive = false;
  return best;
}

}  // namespace

PairStat pair_stat(const Tournament& t, Vertex u, Vertex v) {
  if (u >= t.size() || v >= t.size()) throw std::invalid_argument("pair_stat: vertex out of range");
  if (u == v) throw std::invalid_argument("pair_stat: u and v must differ");
  return stat_of(t, u, v);
}

PairStat delta2(const Tournament& t, Delta2Mode mode) {
  if (t.size() < 2) throw std::invalid_argument("delta2: needs at least two vertices");
  if (mode == Delta2Mode::automatic)
    mode = t.size() <= kDelta2ExhaustiveLimit ? Delta2Mode::exhaustive : Delta2Mode::anchored;
  return mode == Delta2Mode::exhaustive ? delta2_exhaustive(t) : delta2_anchored(t);
}

double delta2_bound(std::size_t n) { return static_cast<double>(n) * (3.0 - std::sqrt(5.0)) / 8.0 - 4.0; }

std::int64_t square_length_bound(std::size_t n) {
  return bound_ceil(std::pow(static_cast<double>(n), kSquareExponent));
}

namespace {

VertexPath lift(const VertexPath& local, const VertexSet& to_host) {
  VertexPath out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(to_host[v]);
  return out;
}

VertexPath square_rec(const Tournament& t) {
  VertexPath chain = stearns_transitive(t);
  if (t.size() < kSquareRecursionMin) return chain;

  const PairStat p = delta2(t);
  const Vertex u = t.has_edge(p.u, p.v) ? p.u : p.v;
  const Vertex v = u == p.u ? p.v : p.u;
  auto [in, out] = pair_neighborhoods(t, u, v);

  VertexPath path;
  if (!in.empty()) path = lift(square_rec(induced(t, in)), in);
  path.push_back(u);
  path.push_back(v);
  if (!out.empty()) {
    const VertexPath tail = lift(square_rec(induced(t, out)), out);
    path.insert(path.end(), tail.begin(), tail.end());
  }
  return path.size() >= chain.size() ? path : chain;
}

}  // namespace

VertexPath square_path(const Tournament& t) {
  if (t.size() == 0) return {};
  return square_rec(t);
}

std::string square_report(std::size_t n, std::size_t length) {
  return "n=" + std::to_string(n) + " len=" + std::to_string(length) + " bound=" + std::to_string(square_length_bound(n));
}

}  // namespace tourpaths
