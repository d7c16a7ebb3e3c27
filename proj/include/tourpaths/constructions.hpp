#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include "tourpaths/tournament.hpp"

namespace tourpaths {

/// T_n: edge i->j iff i < j.
Tournament make_transitive(std::size_t n);

/// Directed triangle 0->1->2->0.
Tournament make_cyclic_triangle();

/// R_n: n/3 directed triangles ordered left to right; for n not divisible by
/// three, one or two dominated vertices are appended with the highest labels.
Tournament make_rn(std::size_t n);

/// Quadratic-residue tournament on Z_q, q prime and q = 3 (mod 4).
Tournament make_paley(std::size_t q);

/// Uniform random tournament.
///
/// Generator: std::mt19937_64 seeded with `seed.value`. Pairs (i,j), i<j, are
/// taken in lexicographic order; pair number p uses bit p%64 (least
/// significant first) of the (p/64)-th generator output, and a set bit means
/// i->j. The result depends only on (n, seed).
Tournament make_random(std::size_t n, Seed seed);

/// Disjoint copies of `block` laid out left to right, every edge between two
/// copies oriented from the lower-index copy to the higher one.
Tournament make_block_tournament(const Tournament& block, std::size_t copies);

class SearchExhausted : public std::runtime_error {
 public:
  SearchExhausted(std::size_t k, std::size_t best_size)
      : std::runtime_error("no T_" + std::to_string(k + 1) + "-free tournament found within budget (best size " +
                           std::to_string(best_size) + ")"),
        k_(k),
        best_size_(best_size) {}
  std::size_t k() const noexcept { return k_; }
  std::size_t best_size() const noexcept { return best_size_; }

 private:
  std::size_t k_;
  std::size_t best_size_;
};

inline constexpr std::size_t kDefaultFkBudget = 200000;

/// Largest k handled by the randomized search (set enumeration grows as C(s, k+1)).
inline constexpr std::size_t kMaxSearchK = 8;

/// A tournament with no transitive subtournament on k+1 vertices.
///
/// k=2 gives the directed triangle, k=3 the Paley tournament on 7 vertices.
/// For k >= 4 a seeded local search runs at sizes 2^ceil(k/2), 2^ceil(k/2)+1,
/// ... flipping edges to remove transitive (k+1)-sets; `budget` caps the total
/// number of flips evaluated. The largest verified witness is returned; if
/// not even the starting size succeeds, SearchExhausted is thrown.
Tournament find_fk(std::size_t k, Seed seed, std::size_t budget = kDefaultFkBudget);

/// find_fk with a disk cache: a file at `cache` in the canonical format is
/// reused when it parses and is verified T_{k+1}-free; otherwise the search
/// runs and its result is written there.
Tournament load_or_find_fk(std::size_t k, Seed seed, std::size_t budget, const std::filesystem::path& cache);

/// R(n,k): n/|F_k| copies of F_k = find_fk(k, seed, budget).
Tournament make_rnk(std::size_t n, std::size_t k, Seed seed, std::size_t budget = kDefaultFkBudget);

/// Transitive subtournament of size at least floor(log2 n)+1, listed source
/// to sink. Repeatedly picks a pivot, keeps the larger of its in/out
/// neighbourhoods among the remaining candidates and records the pivot at
/// the front or back of the chain.
VertexPath stearns_transitive(const Tournament& t);

/// Same, restricted to the vertices of `candidates` (host labels).
VertexPath stearns_transitive(const Tournament& t, const VertexMask& candidates);

}  // namespace tourpaths
