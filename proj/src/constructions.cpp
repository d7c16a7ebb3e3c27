#include "tourpaths/constructions.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>
#include <vector>

#include "tourpaths/io.hpp"
#include "tourpaths/oracles.hpp"
#include "tourpaths/rng.hpp"

namespace tourpaths {

Tournament make_transitive(std::size_t n) {
  TournamentBuilder b(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) b.orient(i, j);
  return std::move(b).build();
}

Tournament make_cyclic_triangle() {
  TournamentBuilder b(3);
  b.orient(0, 1);
  b.orient(1, 2);
  b.orient(2, 0);
  return std::move(b).build();
}

Tournament make_rn(std::size_t n) {
  if (n < 3) throw std::invalid_argument("R_n needs n >= 3");
  const std::size_t triangles = n / 3;
  TournamentBuilder b(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) b.orient(i, j);
  for (std::size_t t = 0; t < triangles; ++t) {
    const auto base = static_cast<Vertex>(3 * t);
    b.orient(base + 2, base);  // reverse the one edge closing the triangle
  }
  return std::move(b).build();
}

namespace {

bool is_prime(std::size_t q) {
  if (q < 2) return false;
  for (std::size_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

}  // namespace

Tournament make_paley(std::size_t q) {
  if (!is_prime(q) || q % 4 != 3) throw std::invalid_argument("Paley tournament needs a prime q = 3 (mod 4)");
  std::vector<bool> residue(q, false);
  for (std::size_t x = 1; x < q; ++x) residue[(x * x) % q] = true;
  TournamentBuilder b(q);
  for (Vertex i = 0; i < q; ++i)
    for (Vertex j = i + 1; j < q; ++j) {
      if (residue[(j - i) % q])
        b.orient(i, j);
      else
        b.orient(j, i);
    }
  return std::move(b).build();
}

namespace {

class BitStream {
 public:
  explicit BitStream(std::uint64_t seed) : rng_(seed) {}

  /// Next k <= 64 bits of the stream, first bit in the least significant place.
  Word take(std::size_t k) {
    if (k == 0) return 0;
    if (k <= avail_) {
      const Word out = k == 64 ? buf_ : buf_ & ((Word{1} << k) - 1);
      buf_ = k == 64 ? 0 : buf_ >> k;
      avail_ -= k;
      return out;
    }
    const std::size_t have = avail_;
    Word out = buf_;
    buf_ = rng_();
    avail_ = 64;
    const std::size_t rest = k - have;
    const Word more = rest == 64 ? buf_ : buf_ & ((Word{1} << rest) - 1);
    buf_ = rest == 64 ? 0 : buf_ >> rest;
    avail_ -= rest;
    return out | (more << have);
  }

 private:
  Rng rng_;
  Word buf_ = 0;
  std::size_t avail_ = 0;
};

}  // namespace

Tournament make_random(std::size_t n, Seed seed) {
  TournamentBuilder b(n);
  BitStream stream(seed.value);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::span<Word> row = b.upper_row(static_cast<Vertex>(i));
    std::size_t col = i + 1;
    while (col < n) {
      const std::size_t k = std::min(kWordBits - col % kWordBits, n - col);
      row[col / kWordBits] |= stream.take(k) << (col % kWordBits);
      col += k;
    }
  }
  return std::move(b).build();
}

Tournament make_block_tournament(const Tournament& block, std::size_t copies) {
  if (copies == 0) throw std::invalid_argument("block tournament needs at least one copy");
  const std::size_t g = block.size();
  const std::size_t n = g * copies;
  TournamentBuilder b(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) {
      if (i / g != j / g || block.has_edge(static_cast<Vertex>(i % g), static_cast<Vertex>(j % g)))
        b.orient(i, j);
      else
        b.orient(j, i);
    }
  return std::move(b).build();
}

namespace {

// Local search state for a tournament on at most 64 vertices, one word per row.
class FkSearch {
 public:
  FkSearch(std::size_t s, std::size_t k, Rng& rng) : s_(s), k_(k), rows_(s, 0), rng_(rng) { randomize(); }

  void randomize() {
    std::fill(rows_.begin(), rows_.end(), 0);
    for (std::size_t i = 0; i < s_; ++i)
      for (std::size_t j = i + 1; j < s_; ++j) {
        if (rng_() & 1u)
          rows_[i] |= Word{1} << j;
        else
          rows_[j] |= Word{1} << i;
      }
    bad_ = count_all();
  }

  std::size_t bad() const noexcept { return bad_; }

  /// Flips a random pair if that does not increase the number of transitive
  /// (k+1)-sets.
  void step() {
    const auto a = static_cast<std::size_t>(uniform_below(rng_, s_));
    auto b = static_cast<std::size_t>(uniform_below(rng_, s_ - 1));
    if (b >= a) ++b;
    const std::size_t before = count_containing(a, b);
    flip(a, b);
    const std::size_t after = count_containing(a, b);
    if (after <= before)
      bad_ = bad_ - before + after;
    else
      flip(a, b);
  }

  Tournament to_tournament() const {
    TournamentBuilder b(s_);
    for (std::size_t i = 0; i < s_; ++i)
      for (std::size_t j = i + 1; j < s_; ++j) {
        if ((rows_[i] >> j) & 1u)
          b.orient(static_cast<Vertex>(i), static_cast<Vertex>(j));
        else
          b.orient(static_cast<Vertex>(j), static_cast<Vertex>(i));
      }
    return std::move(b).build();
  }

 private:
  void flip(std::size_t a, std::size_t b) {
    rows_[a] ^= Word{1} << b;
    rows_[b] ^= Word{1} << a;
  }

  bool transitive(Word set) const {
    Word seen = 0;
    for (Word x = set; x; x &= x - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(x));
      const Word deg = Word{1} << std::popcount(rows_[v] & set);
      if (seen & deg) return false;
      seen |= deg;
    }
    return true;
  }

  // Enumerates every `take`-subset of `pool` (as bits), OR-ed with `fixed`.
  template <class F>
  void subsets(Word pool, std::size_t take, Word fixed, F&& f) const {
    if (take == 0) {
      f(fixed);
      return;
    }
    for (Word x = pool; x; x &= x - 1) {
      if (static_cast<std::size_t>(std::popcount(x)) < take) return;
      const Word low = x & (0 - x);
      subsets(x & ~low & ~(low - 1), take - 1, fixed | low, f);
    }
  }

  std::size_t count_all() const {
    std::size_t c = 0;
    const Word all = s_ == 64 ? ~Word{0} : (Word{1} << s_) - 1;
    subsets(all, k_ + 1, 0, [&](Word set) { c += transitive(set) ? 1 : 0; });
    return c;
  }

  std::size_t count_containing(std::size_t a, std::size_t b) const {
    std::size_t c = 0;
    const Word all = s_ == 64 ? ~Word{0} : (Word{1} << s_) - 1;
    const Word pair = (Word{1} << a) | (Word{1} << b);
    subsets(all & ~pair, k_ - 1, pair, [&](Word set) { c += transitive(set) ? 1 : 0; });
    return c;
  }

  std::size_t s_;
  std::size_t k_;
  std::vector<Word> rows_;
  Rng& rng_;
  std::size_t bad_ = 0;
};

}  // namespace

Tournament find_fk(std::size_t k, Seed seed, std::size_t budget) {
  if (k < 2) throw std::invalid_argument("find_fk needs k >= 2");
  if (k == 2) return make_cyclic_triangle();
  if (k == 3) return make_paley(7);
  if (k > kMaxSearchK) throw std::invalid_argument("find_fk: search supports k <= " + std::to_string(kMaxSearchK));

  Rng rng(seed.value);
  std::size_t size = std::size_t{1} << ((k + 1) / 2);
  std::optional<Tournament> best;
  std::size_t spent = 0;
  while (spent < budget && size <= 64) {
    const std::size_t share = std::max<std::size_t>(1, (budget - spent) / 2);
    const std::size_t restart_after = 50 * size * size;
    FkSearch search(size, k, rng);
    bool found = search.bad() == 0;
    std::size_t used = 0;
    std::size_t since_restart = 0;
    while (!found && used < share) {
      search.step();
      ++used;
      found = search.bad() == 0;
      if (++since_restart >= restart_after && !found) {
        search.randomize();
        since_restart = 0;
        found = search.bad() == 0;
      }
    }
    spent += used;
    if (!found) break;
    Tournament candidate = search.to_tournament();
    if (has_transitive_k(candidate, k + 1)) break;  // exact re-check of the incremental count
    best = std::move(candidate);
    ++size;
  }
  if (!best) throw SearchExhausted(k, 0);
  return *std::move(best);
}

Tournament load_or_find_fk(std::size_t k, Seed seed, std::size_t budget, const std::filesystem::path& cache) {
  if (k < 2) throw std::invalid_argument("find_fk needs k >= 2");
  if (std::filesystem::exists(cache)) {
    std::ifstream in(cache, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
      Tournament cached = parse_tournament(ss.str());
      if (cached.size() <= k || !has_transitive_k(cached, k + 1)) return cached;
    } catch (const ParseError&) {
      // fall through and regenerate
    }
  }
  Tournament fk = find_fk(k, seed, budget);
  if (cache.has_parent_path()) std::filesystem::create_directories(cache.parent_path());
  std::ofstream out(cache, std::ios::binary);
  out << serialize_tournament(fk);
  return fk;
}

Tournament make_rnk(std::size_t n, std::size_t k, Seed seed, std::size_t budget) {
  const Tournament fk = find_fk(k, seed, budget);
  if (n == 0 || n % fk.size() != 0)
    throw std::invalid_argument("R(n,k): n must be a positive multiple of the block size " +
                                std::to_string(fk.size()));
  return make_block_tournament(fk, n / fk.size());
}

VertexPath stearns_transitive(const Tournament& t) { return stearns_transitive(t, t.full_mask()); }

VertexPath stearns_transitive(const Tournament& t, const VertexMask& candidates) {
  std::vector<Word> cand(candidates.words().begin(), candidates.words().end());
  std::size_t remaining = candidates.count();
  VertexPath front;
  VertexPath back;
  const std::span<const Word> cw(cand);
  while (remaining > 0) {
    // Pivot whose larger side keeps the most candidates; smallest label on ties.
    std::size_t best_v = 0;
    std::size_t best_keep = 0;
    bool best_out = true;
    bool first = true;
    bits::for_each_and(cw, cw, [&](std::size_t v) {
      const std::size_t out = bits::count_and(t.out_row(static_cast<Vertex>(v)), cw);
      const std::size_t in = remaining - 1 - out;
      const std::size_t keep = std::max(out, in);
      if (first || keep > best_keep) {
        best_v = v;
        best_keep = keep;
        best_out = out >= in;
        first = false;
      }
    });
    const std::span<const Word> row = t.out_row(static_cast<Vertex>(best_v));
    bits::reset(cand, best_v);
    for (std::size_t w = 0; w < cand.size(); ++w) cand[w] &= best_out ? row[w] : ~row[w];
    if (best_out)
      front.push_back(static_cast<Vertex>(best_v));
    else
      back.push_back(static_cast<Vertex>(best_v));
    remaining = best_keep;
  }
  front.insert(front.end(), back.rbegin(), back.rend());
  return front;
}

}  // namespace tourpaths
