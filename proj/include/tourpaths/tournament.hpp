#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "tourpaths/bits.hpp"

namespace tourpaths {

using Vertex = std::uint32_t;

/// Ordered sequence of distinct vertices of a host tournament.
using VertexPath = std::vector<Vertex>;

/// Subset of the vertex set, used for neighbourhoods and induced subtournaments.
using VertexSet = std::vector<Vertex>;

struct Seed {
  std::uint64_t value = 0;
};

/// Dense orientation of the complete graph on vertices 0..n-1.
///
/// Row-major bit matrix: bit j of row i is set iff the edge is i->j. Instances
/// are only produced by TournamentBuilder, which fills the strict upper
/// triangle and derives the lower one, so the irreflexive/antisymmetric
/// invariants hold by construction.
class Tournament {
 public:
  Tournament() = default;

  std::size_t size() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return wpr_; }

  bool has_edge(Vertex from, Vertex to) const noexcept {
    return (bits_[from * wpr_ + to / kWordBits] >> (to % kWordBits)) & 1u;
  }

  /// Out-neighbourhood of v as a bit row of words_per_row() words.
  std::span<const Word> out_row(Vertex v) const noexcept { return {bits_.data() + v * wpr_, wpr_}; }

  std::size_t out_degree(Vertex v) const noexcept { return bits::count(out_row(v)); }
  std::size_t in_degree(Vertex v) const noexcept { return n_ - 1 - out_degree(v); }
  std::vector<std::size_t> out_degrees() const;

  VertexSet out_neighbors(Vertex v) const;
  VertexSet in_neighbors(Vertex v) const;

  /// All-ones mask over the vertex set, padded with zeros.
  VertexMask full_mask() const;

  bool operator==(const Tournament&) const = default;

 private:
  friend class TournamentBuilder;
  std::size_t n_ = 0;
  std::size_t wpr_ = 0;
  std::vector<Word> bits_;
};

/// Collects the orientation of every pair i<j, then completes the matrix.
class TournamentBuilder {
 public:
  explicit TournamentBuilder(std::size_t n);

  std::size_t size() const noexcept { return n_; }

  /// Orients the pair {a,b} as a->b.
  void orient(Vertex a, Vertex b) noexcept {
    if (a < b)
      bits::set(upper_row(a), b);
    else
      bits::reset(upper_row(b), a);
  }

  /// Strict-upper-triangle bits of row i (only columns > i are meaningful).
  std::span<Word> upper_row(Vertex i) noexcept { return {bits_.data() + i * wpr_, wpr_}; }

  /// Fills the lower triangle as the complement of the transposed upper one.
  Tournament build() &&;

 private:
  std::size_t n_;
  std::size_t wpr_;
  std::vector<Word> bits_;
};

/// Irreflexive, antisymmetric-complete and out-degrees summing to C(n,2).
bool is_valid_tournament(const Tournament& t);

/// True iff the vertices, taken in the given order, have every edge forward.
bool is_transitive_order(const Tournament& t, std::span<const Vertex> order);

/// True iff the tournament has no directed cycle.
bool is_acyclic(const Tournament& t);

/// Sub-tournament on `members`, relabelled in increasing vertex order.
/// The sorted member list is the map back to host labels.
Tournament induced(const Tournament& t, std::span<const Vertex> members);

/// Sub-tournament on the vertices of `mask`, with the sorted member list.
struct InducedTournament {
  Tournament sub;
  VertexSet to_host;
};
InducedTournament induced(const Tournament& t, const VertexMask& mask);

}  // namespace tourpaths
