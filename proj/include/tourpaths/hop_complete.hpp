#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>

#include "tourpaths/tournament.hpp"

namespace tourpaths {

/// Common neighbourhood sizes of a vertex pair; score = min of the two.
struct PairStat {
  Vertex u = 0;
  Vertex v = 0;
  std::int64_t common_out = 0;
  std::int64_t common_in = 0;
  std::int64_t score = 0;
  bool exhaustive = true;  // false when found by the anchored scan
};

/// (N-(u,v), N+(u,v)): common in- and out-neighbours, ascending.
/// Throws std::invalid_argument if u == v or either is out of range.
std::pair<VertexSet, VertexSet> pair_neighborhoods(const Tournament& t, Vertex u, Vertex v);

PairStat pair_stat(const Tournament& t, Vertex u, Vertex v);

enum class Delta2Mode {
  automatic,  // exhaustive up to kDelta2ExhaustiveLimit vertices, anchored above
  exhaustive,
  anchored,
};

inline constexpr std::size_t kDelta2ExhaustiveLimit = 2000;

/// Max over pairs of min(d+(u,v), d-(u,v)).
///
/// Exhaustive mode scans all pairs and returns the lexicographically least
/// maximiser. Anchored mode fixes v as the first vertex, by balance of its
/// out-degree and then label, whose middle count reaches middle_lemma_bound(n),
/// and maximises over the partner u only; such a v always admits a partner
/// meeting delta2_bound(n). Throws std::invalid_argument if n < 2.
PairStat delta2(const Tournament& t, Delta2Mode mode = Delta2Mode::automatic);

/// n(3 - sqrt 5)/8 - 4.
double delta2_bound(std::size_t n);

/// Exponent of the guaranteed length n^0.295.
inline constexpr double kSquareExponent = 0.295;

/// ceil(n^0.295 - eps).
std::int64_t square_length_bound(std::size_t n);

/// Below this size square_path returns the Stearns chain directly.
inline constexpr std::size_t kSquareRecursionMin = 64;

/// Hop-complete directed path of length at least n^0.295.
///
/// From 64 vertices up: take the delta2 pair oriented u->v, recurse on the
/// common in- and out-neighbourhoods and join P1, u, v, P2. Every level keeps
/// the longer of that path and a Stearns transitive chain.
VertexPath square_path(const Tournament& t);

/// "n=<n> len=<len> bound=<ceil(n^0.295)>"
std::string square_report(std::size_t n, std::size_t length);

}  // namespace tourpaths
