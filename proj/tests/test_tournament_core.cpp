#include <doctest.h>

#include <array>
#include <cmath>
#include <numeric>
#include <random>

#include "tourpaths/bits.hpp"
#include "tourpaths/constructions.hpp"
#include "tourpaths/oracles.hpp"
#include "tourpaths/tournament.hpp"

using namespace tourpaths;

namespace {

bool naive_valid(const Tournament& t) {
  std::size_t sum = 0;
  for (Vertex i = 0; i < t.size(); ++i) {
    if (t.has_edge(i, i)) return false;
    for (Vertex j = 0; j < t.size(); ++j)
      if (i != j && t.has_edge(i, j) == t.has_edge(j, i)) return false;
    sum += t.out_degree(i);
  }
  return sum == t.size() * (t.size() - 1) / 2;
}

}  // namespace

TEST_CASE("transpose64 matches a bit-by-bit transpose") {
  std::mt19937_64 g(99);
  for (int round = 0; round < 20; ++round) {
    std::array<Word, 64> m{};
    for (auto& w : m) w = g();
    std::array<Word, 64> expect{};
    for (std::size_t r = 0; r < 64; ++r)
      for (std::size_t c = 0; c < 64; ++c)
        if ((m[r] >> c) & 1u) expect[c] |= Word{1} << r;
    bits::transpose64(m);
    CHECK(m == expect);
  }
}

TEST_CASE("VertexMask basics") {
  VertexMask m(130);
  m.insert(0);
  m.insert(64);
  m.insert(129);
  CHECK(m.count() == 3);
  CHECK(m.contains(64));
  m.erase(64);
  CHECK_FALSE(m.contains(64));
  CHECK(m.count() == 2);
}

TEST_CASE("builder output is a valid tournament for sizes across word boundaries") {
  for (std::size_t n : {1, 2, 3, 63, 64, 65, 127, 128, 129, 200}) {
    const Tournament t = make_random(n, Seed{n});
    CHECK(naive_valid(t));
    CHECK(is_valid_tournament(t));
  }
}

TEST_CASE("builder rejects n = 0") { CHECK_THROWS_AS(TournamentBuilder(0), std::invalid_argument); }

TEST_CASE("make_transitive") {
  CHECK(make_transitive(1).size() == 1);
  CHECK(make_transitive(1).out_degree(0) == 0);
  const Tournament t3 = make_transitive(3);
  CHECK(t3.has_edge(0, 1));
  CHECK(t3.has_edge(0, 2));
  CHECK(t3.has_edge(1, 2));
  const Tournament t4 = make_transitive(4);
  for (Vertex i = 0; i < 4; ++i)
    for (Vertex j = 0; j < 4; ++j) CHECK(t4.has_edge(i, j) == (i < j));
  CHECK(longest_square_exact(t4).value == 4);
  CHECK(is_acyclic(t4));
  CHECK_THROWS(make_transitive(0));
}

TEST_CASE("make_rn block structure") {
  const Tournament c3 = make_rn(3);
  CHECK(c3 == make_cyclic_triangle());
  CHECK(c3.has_edge(0, 1));
  CHECK(c3.has_edge(1, 2));
  CHECK(c3.has_edge(2, 0));
  CHECK_THROWS(make_rn(2));
  for (std::size_t n : {3, 6, 9, 12, 30}) {
    const Tournament t = make_rn(n);
    CHECK(is_valid_tournament(t));
    for (Vertex v = 0; v < n; ++v) {
      const std::size_t block = v / 3 + 1;  // X_1 .. X_{n/3}
      CHECK(t.out_degree(v) == 1 + 3 * (n / 3 - block));
    }
  }
  // Appended vertices are dominated: in-degree n-2 then n-1.
  const Tournament r7 = make_rn(7);
  CHECK(r7.in_degree(6) == 6);
  const Tournament r8 = make_rn(8);
  CHECK(r8.in_degree(6) == 6);
  CHECK(r8.in_degree(7) == 7);
  CHECK(induced(r8, VertexSet{0, 1, 2, 3, 4, 5}) == make_rn(6));
}

TEST_CASE("make_paley") {
  CHECK(make_paley(3) == make_cyclic_triangle());
  for (std::size_t q : {7, 11, 19, 23}) {
    const Tournament p = make_paley(q);
    for (Vertex v = 0; v < q; ++v) CHECK(p.out_degree(v) == (q - 1) / 2);
  }
  CHECK_THROWS(make_paley(5));   // 1 mod 4
  CHECK_THROWS(make_paley(15));  // not prime
  CHECK_THROWS(make_paley(1));
}

TEST_CASE("Paley 7 has no transitive 4-set (all 35 subsets)") {
  const Tournament p = make_paley(7);
  int subsets = 0;
  for (Vertex a = 0; a < 7; ++a)
    for (Vertex b = a + 1; b < 7; ++b)
      for (Vertex c = b + 1; c < 7; ++c)
        for (Vertex d = c + 1; d < 7; ++d) {
          ++subsets;
          CHECK_FALSE(is_acyclic(induced(p, VertexSet{a, b, c, d})));
        }
  CHECK(subsets == 35);
}

TEST_CASE("make_random follows the documented bit stream") {
  const std::size_t n = 77;
  const Tournament t = make_random(n, Seed{12345});
  std::mt19937_64 g(12345);
  std::uint64_t word = 0;
  std::size_t p = 0;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j, ++p) {
      if (p % 64 == 0) word = g();
      CHECK(t.has_edge(i, j) == bool((word >> (p % 64)) & 1u));
    }
  CHECK(make_random(n, Seed{12345}) == t);
  CHECK_FALSE(make_random(n, Seed{12346}) == t);
}

TEST_CASE("make_random edge count and degree concentration") {
  const Tournament t = make_random(100, Seed{3});
  std::size_t edges = 0;
  for (Vertex v = 0; v < 100; ++v) edges += t.out_degree(v);
  CHECK(edges == 4950);

  double total = 0;
  for (std::uint64_t s = 0; s < 100; ++s) total += static_cast<double>(make_random(1000, Seed{s}).out_degree(0));
  const double mean = total / 100;
  CHECK(mean > 449.5);
  CHECK(mean < 549.5);
}

TEST_CASE("induced subtournaments") {
  const Tournament t = make_random(150, Seed{8});
  VertexSet all(150);
  std::iota(all.begin(), all.end(), Vertex{0});
  CHECK(induced(t, all) == t);
  CHECK(induced(t, VertexSet{42}).size() == 1);

  const Tournament t5 = make_transitive(5);
  const Tournament s = induced(t5, VertexSet{4, 1, 3});
  CHECK(s == make_transitive(3));

  // Compare against a naive copy on a scattered subset.
  VertexSet pick;
  for (Vertex v = 0; v < 150; v += 3) pick.push_back(v);
  pick.push_back(149);
  const Tournament sub = induced(t, pick);
  for (std::size_t a = 0; a < pick.size(); ++a)
    for (std::size_t b = 0; b < pick.size(); ++b) CHECK(sub.has_edge(a, b) == t.has_edge(pick[a], pick[b]));

  VertexMask mask(150);
  for (Vertex v : pick) mask.insert(v);
  const InducedTournament im = induced(t, mask);
  CHECK(im.sub == sub);
  CHECK(im.to_host == pick);

  CHECK_THROWS(induced(t, VertexSet{1, 1}));
  CHECK_THROWS(induced(t, VertexSet{150}));
  CHECK_THROWS(induced(t, VertexSet{}));
}

TEST_CASE("induced subsets of a transitive tournament stay acyclic") {
  const Tournament t = make_transitive(12);
  std::mt19937_64 g(4);
  for (int round = 0; round < 50; ++round) {
    VertexSet s;
    for (Vertex v = 0; v < 12; ++v)
      if (g() & 1u) s.push_back(v);
    if (s.empty()) s.push_back(0);
    CHECK(is_acyclic(induced(t, s)));
  }
}

TEST_CASE("stearns_transitive") {
  const VertexPath whole = stearns_transitive(make_transitive(8));
  CHECK(whole.size() == 8);
  CHECK(is_transitive_order(make_transitive(8), whole));
  CHECK(stearns_transitive(make_cyclic_triangle()).size() == 2);

  const Tournament r = make_random(128, Seed{5});
  const VertexPath chain = stearns_transitive(r);
  CHECK(chain.size() >= 8);
  CHECK(is_transitive_order(r, chain));

  for (std::size_t n : {1, 2, 5, 17, 64, 100, 255, 256, 1000}) {
    const Tournament t = make_random(n, Seed{n + 1});
    const VertexPath c = stearns_transitive(t);
    CHECK(is_transitive_order(t, c));
    CHECK(c.size() >= static_cast<std::size_t>(std::floor(std::log2(static_cast<double>(n)))) + 1);
  }
}

TEST_CASE("find_fk") {
  const Tournament f2 = find_fk(2, Seed{1});
  CHECK(f2 == make_cyclic_triangle());
  CHECK_FALSE(has_transitive_k(f2, 3));
  const Tournament f3 = find_fk(3, Seed{1});
  CHECK(f3.size() == 7);
  CHECK_FALSE(has_transitive_k(f3, 4));
  const Tournament f4 = find_fk(4, Seed{1});
  CHECK(f4.size() >= 4);
  CHECK(is_valid_tournament(f4));
  CHECK_FALSE(has_transitive_k(f4, 5));
  CHECK(find_fk(4, Seed{1}) == f4);
  CHECK_THROWS(find_fk(1, Seed{1}));
  // A zero budget evaluates no candidate.
  CHECK_THROWS_AS(find_fk(4, Seed{1}, 0), SearchExhausted);
}

TEST_CASE("make_rnk") {
  CHECK(make_rnk(9, 2, Seed{0}) == make_rn(9));
  const Tournament r = make_rnk(14, 3, Seed{0});
  CHECK(induced(r, VertexSet{0, 1, 2, 3, 4, 5, 6}) == make_paley(7));
  CHECK(induced(r, VertexSet{7, 8, 9, 10, 11, 12, 13}) == make_paley(7));
  for (Vertex a = 0; a < 7; ++a)
    for (Vertex b = 7; b < 14; ++b) CHECK(r.has_edge(a, b));
  CHECK_THROWS(make_rnk(10, 3, Seed{0}));
  CHECK_THROWS(make_rnk(9, 1, Seed{0}));
}
