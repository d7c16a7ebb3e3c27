#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "tourpaths/tournament.hpp"

namespace tourpaths {

/// True iff the entries are distinct, in range and consecutive pairs are edges.
bool is_directed_path(const Tournament& t, std::span<const Vertex> path);

/// True iff `path` is a directed path through all vertices.
bool is_hamiltonian_path(const Tournament& t, std::span<const Vertex> path);

/// Number of t with path[t] -> path[t+2]. Throws std::invalid_argument if
/// `path` is not a directed path of `t`; so do the two functions below.
std::int64_t count_hops(const Tournament& t, std::span<const Vertex> path);

/// Number of forward edges path[s] -> path[u] with u > s+1.
std::int64_t count_shortcuts(const Tournament& t, std::span<const Vertex> path);

/// Every hop present; paths on at most two vertices qualify vacuously.
bool is_hop_complete(const Tournament& t, std::span<const Vertex> path);

/// Insertion construction: vertices 0..n-1 are inserted in turn at the first
/// place that keeps a directed path (front, between two path vertices, back).
VertexPath greedy_ham_path(const Tournament& t);

/// ceil((4n-10)/7) for n >= 4, 0 otherwise.
std::int64_t hop_lower_bound(std::size_t n);

/// Hops the recursive builder is guaranteed to reach on n vertices: the exact
/// minimum ceil((2n-6)/3) up to n = 10, hop_lower_bound(n) beyond.
std::int64_t hop_guarantee(std::size_t n);

/// Hamiltonian path with at least hop_lower_bound(n) hops.
///
/// Subtournaments on at most 10 vertices are solved exactly. Larger ones first
/// peel sources and sinks (each adds a hop), then a vertex of in- or
/// out-degree 1 when that cannot lower the guarantee, and otherwise split at
/// a pivot v with n/4 - 1/2 <= d+(v) <= 3n/4 - 1/2 (out-degree nearest n/2,
/// smallest label on ties) into path(N-(v)), v, path(N+(v)), which gains the
/// two hops through v.
VertexPath hop_rich_path(const Tournament& t);

}  // namespace tourpaths
