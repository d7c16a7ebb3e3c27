#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "tourpaths/constructions.hpp"
#include "tourpaths/hop_paths.hpp"
#include "tourpaths/oracles.hpp"
#include "tourpaths/shortcut_tree.hpp"
#include "tourpaths/ztable.hpp"

using namespace tourpaths;

namespace {

// Forward edges of an ordering.
std::int64_t forward_edges(const Tournament& t, const VertexPath& order) {
  std::int64_t f = 0;
  for (std::size_t a = 0; a < order.size(); ++a)
    for (std::size_t b = a + 1; b < order.size(); ++b) f += t.has_edge(order[a], order[b]);
  return f;
}

// Permutation scan for beta, independent of the subset program.
std::int64_t beta_by_permutations(const Tournament& t) {
  VertexPath p(t.size());
  std::iota(p.begin(), p.end(), Vertex{0});
  std::int64_t best = 0;
  do best = std::max(best, forward_edges(t, p));
  while (std::next_permutation(p.begin(), p.end()));
  return best;
}

// Largest acyclic vertex subset, by scanning every subset.
std::int64_t transitive_by_subsets(const Tournament& t) {
  std::int64_t best = 0;
  const std::size_t n = t.size();
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
    const auto size = static_cast<std::int64_t>(std::popcount(m));
    if (size <= best) continue;
    VertexSet s;
    for (Vertex v = 0; v < n; ++v)
      if ((m >> v) & 1u) s.push_back(v);
    if (is_acyclic(induced(t, s))) best = size;
  }
  return best;
}

bool is_power_path(const Tournament& t, const VertexPath& p, std::size_t k) {
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j <= i + k && j < p.size(); ++j)
      if (!t.has_edge(p[i], p[j])) return false;
  return true;
}

}  // namespace

TEST_CASE("max_hops_exact examples") {
  CHECK(max_hops_exact(make_rn(6)).value == 2);
  CHECK(max_hops_exact(make_rn(9)).value == 4);
  CHECK(max_hops_exact(make_transitive(5)).value == 3);
  CHECK(max_hops_exact(make_cyclic_triangle()).value == 0);
  // Paley 7 has a hop-complete Hamiltonian path (0,1,...,6), so 5 hops.
  const auto p7 = max_hops_exact(make_paley(7));
  CHECK(p7.value == 5);
  CHECK(is_hop_complete(make_paley(7), VertexPath{0, 1, 2, 3, 4, 5, 6}));
  CHECK(count_hops(make_paley(7), p7.witness) == 5);
  CHECK(min_hops_exact(make_transitive(6)).value == 4);
}

TEST_CASE("max_hops_exact agrees with witnesses and the guarantee") {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const Tournament t = make_random(3 + s % 7, Seed{s});
    const auto hi = max_hops_exact(t);
    const auto lo = min_hops_exact(t);
    REQUIRE(is_hamiltonian_path(t, hi.witness));
    REQUIRE(is_hamiltonian_path(t, lo.witness));
    CHECK(count_hops(t, hi.witness) == hi.value);
    CHECK(count_hops(t, lo.witness) == lo.value);
    CHECK(lo.value <= hi.value);
    CHECK(hi.value >= hop_guarantee(t.size()));
  }
}

TEST_CASE("caps") {
  CHECK_THROWS_AS(max_hops_exact(make_transitive(11)), CapExceeded);
  CHECK(max_hops_exact(make_transitive(11), OracleCap{10, true}).value == 9);
  CHECK_THROWS_AS(beta_exact(make_transitive(10)), CapExceeded);
  try {
    max_shortcuts_exact(make_transitive(10));
    FAIL("no throw");
  } catch (const CapExceeded& e) {
    CHECK(e.n() == 10);
    CHECK(e.limit() == 9);
  }
}

TEST_CASE("max_shortcuts_exact") {
  CHECK(max_shortcuts_exact(make_transitive(5)).value == 6);
  CHECK(max_shortcuts_exact(make_cyclic_triangle()).value == 0);
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Tournament t = make_random(7, Seed{s});
    const auto sc = max_shortcuts_exact(t);
    REQUIRE(is_hamiltonian_path(t, sc.witness));
    CHECK(count_shortcuts(t, sc.witness) == sc.value);
    CHECK(sc.value == beta_exact(t).value - 6);
  }
}

TEST_CASE("shortcuts equal beta minus n-1 on all labelled tournaments up to n=5") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      const Tournament t = tournament_from_mask(n, mask);
      CHECK(max_shortcuts_exact(t).value == beta_exact(t).value - static_cast<std::int64_t>(n - 1));
    }
  }
}

TEST_CASE("beta_exact") {
  CHECK(beta_exact(make_transitive(6)).value == 15);
  CHECK(beta_exact(make_cyclic_triangle()).value == 2);
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Tournament t = make_random(7, Seed{s + 100});
    const auto b = beta_exact(t);
    CHECK(b.value >= 11);
    CHECK(b.value == beta_by_permutations(t));
    CHECK(forward_edges(t, b.witness) == b.value);
  }
}

TEST_CASE("longest_square_exact") {
  CHECK(longest_square_exact(make_transitive(12)).value == 12);
  CHECK(longest_square_exact(make_rn(6)).value == 4);
  const Tournament r12 = make_rnk(12, 2, Seed{0});
  const auto sq = longest_square_exact(r12);
  CHECK(sq.value == 8);
  CHECK(is_directed_path(r12, sq.witness));
  CHECK(is_hop_complete(r12, sq.witness));
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Tournament t = make_random(9, Seed{s});
    CHECK(longest_power_exact(t, 2).value == longest_square_exact(t).value);
  }
}

TEST_CASE("longest_power_exact") {
  const Tournament r = make_rnk(14, 3, Seed{0});
  const auto cube = longest_power_exact(r, 3, OracleCap{14, true});
  CHECK(cube.value <= 6);
  CHECK(is_power_path(r, cube.witness, 3));
  CHECK(static_cast<std::int64_t>(cube.witness.size()) == cube.value);
  CHECK(longest_power_exact(make_transitive(7), 5).value == 7);
  CHECK(longest_power_exact(make_cyclic_triangle(), 1).value == 3);
}

TEST_CASE("best_tree oracles") {
  CHECK(best_tree_exact(make_cyclic_triangle()).value == 0);
  CHECK(best_tree_exact(make_transitive(7)).value == 15);
  for (std::uint64_t s = 0; s < 15; ++s) {
    const std::size_t n = 3 + s % 8;
    const Tournament t = make_random(n, Seed{s});
    const auto full = best_tree_exact(t);
    const auto dp = best_tree_by_subsets(t);
    CHECK(full.value == dp.value);
    CHECK(validate_tree(t, full.witness));
    CHECK(validate_tree(t, dp.witness));
    CHECK(tree_shortcuts(t, full.witness) == full.value);
    CHECK(tree_shortcuts(t, dp.witness) == dp.value);
    CHECK(full.value <= max_shortcuts_exact(t, OracleCap{10, true}).value);
  }
  const Tournament t10 = make_random(10, Seed{42});
  const std::int64_t built = tree_shortcuts(t10, build_shortcut_tree(t10));
  CHECK(best_tree_exact(t10).value >= built);
  CHECK(built >= z_table(10).z[10]);
}

TEST_CASE("middle_count_brute") {
  CHECK(middle_count_brute(make_cyclic_triangle(), 0) == 0);
  const Tournament t5 = make_transitive(5);
  for (Vertex v = 0; v < 5; ++v) CHECK(middle_count_brute(t5, v) == static_cast<std::int64_t>(v * (4 - v)));
}

TEST_CASE("max_transitive_exact and has_transitive_k") {
  CHECK(max_transitive_exact(make_transitive(10)).value == 10);
  CHECK(max_transitive_exact(make_cyclic_triangle()).value == 2);
  const auto p7 = max_transitive_exact(make_paley(7));
  CHECK(p7.value == 3);
  CHECK(is_transitive_order(make_paley(7), p7.witness));
  CHECK_FALSE(has_transitive_k(make_paley(7), 4));
  CHECK(has_transitive_k(make_paley(7), 3));
  CHECK(has_transitive_k(make_cyclic_triangle(), 1));
  CHECK_FALSE(has_transitive_k(make_transitive(3), 4));
  // Every tournament on 8 vertices contains T_4.
  for (std::uint64_t s = 0; s < 200; ++s) CHECK(has_transitive_k(make_random(8, Seed{s}), 4));
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Tournament t = make_random(20, Seed{s});
    const auto m = max_transitive_exact(t);
    CHECK(is_transitive_order(t, m.witness));
    CHECK(has_transitive_k(t, static_cast<std::size_t>(m.value)));
    CHECK_FALSE(has_transitive_k(t, static_cast<std::size_t>(m.value) + 1));
  }
}

TEST_CASE("max_transitive_exact agrees with a subset scan") {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const Tournament t = make_random(4 + s % 9, Seed{s + 500});
    CHECK(max_transitive_exact(t).value == transitive_by_subsets(t));
  }
  CHECK(max_transitive_exact(make_paley(11)).value == transitive_by_subsets(make_paley(11)));
}

TEST_CASE("isomorphic_brute") {
  const Tournament r6 = make_rn(6);
  VertexSet perm{3, 5, 1, 0, 4, 2};
  CHECK(isomorphic_brute(induced(r6, perm), r6));
  CHECK_FALSE(isomorphic_brute(make_transitive(6), r6));
  CHECK_FALSE(isomorphic_brute(make_transitive(5), r6));
}

TEST_CASE("tournament_from_mask") {
  CHECK(tournament_from_mask(3, 0b111) == make_transitive(3));
  // pairs (0,1),(0,2),(1,2): 0->1, 2->0, 1->2
  CHECK(tournament_from_mask(3, 0b101) == make_cyclic_triangle());
}

TEST_CASE("exhaustive_small_suite") {
  const std::int64_t expect[] = {0, 0, 0, 0, 1, 2, 2};
  for (std::size_t n = 3; n <= 6; ++n) {
    const SmallSuiteReport r = exhaustive_small_suite(n);
    CHECK(r.pass);
    CHECK(r.min_max_hops == expect[n]);
    CHECK(r.tournaments == (std::uint64_t{1} << (n * (n - 1) / 2)));
  }
  const SmallSuiteReport r6 = exhaustive_small_suite(6);
  CHECK(r6.minimizers == 80);  // 6! / |Aut(R_6)| = 720 / 9
  CHECK(r6.minimizers_are_rn.value_or(false));
  CHECK_THROWS_AS(exhaustive_small_suite(7), std::invalid_argument);
  CHECK_THROWS_AS(exhaustive_small_suite(0), std::invalid_argument);
}

TEST_CASE("oracle_report") {
  const OracleReport r = oracle_report(make_transitive(5));
  CHECK(r.max_hops == 3);
  CHECK(r.max_shortcuts == 6);
  CHECK(r.longest_square == 5);
  CHECK(r.best_tree_shortcuts == 6);
  CHECK(r.beta == 10);
  CHECK(oracle_report_header() == "n\tmax_hops\tmax_shortcuts\tlongest_square\tbest_tree\tbeta");
  CHECK(oracle_report_row(r) == "5\t3\t6\t5\t6\t10");
  CHECK_THROWS_AS(oracle_report(make_transitive(10)), CapExceeded);
}
