#include "tourpaths/tournament.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>

#if defined(__x86_64__)
#include <immintrin.h>
#endif

namespace tourpaths {

std::vector<std::size_t> Tournament::out_degrees() const {
  std::vector<std::size_t> d(n_);
  for (Vertex v = 0; v < n_; ++v) d[v] = out_degree(v);
  return d;
}

VertexSet Tournament::out_neighbors(Vertex v) const {
  VertexSet out;
  const VertexMask all = full_mask();
  bits::for_each_and(out_row(v), all.words(), [&](std::size_t u) { out.push_back(static_cast<Vertex>(u)); });
  return out;
}

VertexSet Tournament::in_neighbors(Vertex v) const {
  VertexSet in;
  VertexMask all = full_mask();
  all.erase(v);
  bits::for_each_andnot(out_row(v), all.words(), [&](std::size_t u) { in.push_back(static_cast<Vertex>(u)); });
  return in;
}

VertexMask Tournament::full_mask() const {
  VertexMask m(n_);
  for (std::size_t v = 0; v < n_; ++v) m.insert(v);
  return m;
}

TournamentBuilder::TournamentBuilder(std::size_t n) : n_(n), wpr_(bits::words_for(n)), bits_(n * wpr_, 0) {
  if (n == 0) throw std::invalid_argument("tournament needs at least one vertex");
}

Tournament TournamentBuilder::build() && {
  // Clear anything on or below the diagonal, then transpose-complement
  // 64x64 blocks of the upper triangle into the lower triangle.
  for (std::size_t i = 0; i < n_; ++i) {
    std::span<Word> row = upper_row(static_cast<Vertex>(i));
    const std::size_t w = i / kWordBits;
    for (std::size_t k = 0; k < w; ++k) row[k] = 0;
    const std::size_t b = i % kWordBits;
    row[w] &= (b == 63) ? 0 : ~((Word{2} << b) - 1);
    const std::size_t tail = n_ % kWordBits;
    if (tail != 0) row[wpr_ - 1] &= (Word{1} << tail) - 1;
  }

  const std::size_t blocks = wpr_;
  std::array<Word, 64> block{};
  for (std::size_t bi = 0; bi < blocks; ++bi) {
    for (std::size_t bj = bi; bj < blocks; ++bj) {
      for (std::size_t t = 0; t < 64; ++t) {
        const std::size_t r = bi * 64 + t;
        block[t] = r < n_ ? bits_[r * wpr_ + bj] : 0;
      }
      bits::transpose64(block);
      // block[t] now holds column bj*64+t restricted to rows bi*64..bi*64+63.
      for (std::size_t t = 0; t < 64; ++t) {
        const std::size_t r = bj * 64 + t;
        if (r >= n_) break;
        Word lower = ~block[t];
        if (bi == bj) lower &= (t == 0) ? 0 : ((Word{1} << t) - 1);
        const std::size_t rows_in_bi = std::min<std::size_t>(64, n_ - bi * 64);
        if (rows_in_bi < 64) lower &= (Word{1} << rows_in_bi) - 1;
        bits_[r * wpr_ + bi] |= lower;
      }
    }
  }

  Tournament t;
  t.n_ = n_;
  t.wpr_ = wpr_;
  t.bits_ = std::move(bits_);
  return t;
}

bool is_valid_tournament(const Tournament& t) {
  const std::size_t n = t.size();
  if (n == 0) return false;
  std::size_t total = 0;
  for (Vertex i = 0; i < n; ++i) {
    if (t.has_edge(i, i)) return false;
    for (Vertex j = i + 1; j < n; ++j)
      if (t.has_edge(i, j) == t.has_edge(j, i)) return false;
    // padding bits beyond n must be clear
    const std::size_t tail = n % kWordBits;
    if (tail != 0 && (t.out_row(i).back() >> tail) != 0) return false;
    total += t.out_degree(i);
  }
  return total == n * (n - 1) / 2;
}

bool is_transitive_order(const Tournament& t, std::span<const Vertex> order) {
  for (std::size_t a = 0; a < order.size(); ++a)
    for (std::size_t b = a + 1; b < order.size(); ++b)
      if (!t.has_edge(order[a], order[b])) return false;
  return true;
}

bool is_acyclic(const Tournament& t) {
  // A tournament is acyclic iff its out-degrees are exactly 0..n-1.
  std::vector<std::size_t> d = t.out_degrees();
  std::sort(d.begin(), d.end());
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] != i) return false;
  return true;
}

namespace {

Word extract_portable(Word x, Word mask) {
  Word out = 0;
  for (unsigned k = 0; mask; mask &= mask - 1, ++k)
    if (x & mask & (~mask + 1)) out |= Word{1} << k;
  return out;
}

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
__attribute__((target("bmi2"))) Word extract_bmi2(Word x, Word mask) { return _pext_u64(x, mask); }
#endif

using ExtractFn = Word (*)(Word, Word);

ExtractFn pick_extract() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  if (__builtin_cpu_supports("bmi2")) return extract_bmi2;
#endif
  return extract_portable;
}

// Packs the bits of `host` selected by `mask` into consecutive bits of `out`.
// The whole row is written; the builder later overwrites the lower triangle
// with identical values.
void compact_row(std::span<const Word> host, std::span<const Word> mask, std::span<Word> out) {
  static const ExtractFn extract = pick_extract();
  std::size_t pos = 0;
  for (std::size_t w = 0; w < mask.size(); ++w) {
    if (!mask[w]) continue;
    const Word bits = extract(host[w], mask[w]);
    const auto k = static_cast<std::size_t>(std::popcount(mask[w]));
    const std::size_t off = pos % kWordBits;
    out[pos / kWordBits] |= bits << off;
    if (off && off + k > kWordBits) out[pos / kWordBits + 1] |= bits >> (kWordBits - off);
    pos += k;
  }
}

}  // namespace

Tournament induced(const Tournament& t, std::span<const Vertex> members) {
  VertexSet sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("induced: repeated vertex");
  if (sorted.empty()) throw std::invalid_argument("induced: empty vertex set");
  if (sorted.back() >= t.size())
    throw std::invalid_argument("induced: vertex " + std::to_string(sorted.back()) + " out of range");

  const std::size_t m = sorted.size();
  std::vector<Word> mask(t.words_per_row(), 0);
  for (Vertex v : sorted) mask[v / kWordBits] |= Word{1} << (v % kWordBits);
  TournamentBuilder b(m);
  for (std::size_t i = 0; i < m; ++i) compact_row(t.out_row(sorted[i]), mask, b.upper_row(static_cast<Vertex>(i)));
  return std::move(b).build();
}

InducedTournament induced(const Tournament& t, const VertexMask& mask) {
  VertexSet members;
  members.reserve(mask.count());
  const VertexMask all = t.full_mask();
  bits::for_each_and(mask.words(), all.words(), [&](std::size_t v) { members.push_back(static_cast<Vertex>(v)); });
  Tournament sub = induced(t, members);
  return {std::move(sub), std::move(members)};
}

}  // namespace tourpaths
