#include "tourpaths/ztable.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tourpaths {

std::int64_t bound_ceil(double b) { return static_cast<std::int64_t>(std::ceil(b - kBoundEpsilon)); }

bool meets(std::int64_t count, double b) { return count >= bound_ceil(b); }

namespace {

double n_ln_n(std::size_t n) {
  const double x = static_cast<double>(n);
  return n <= 1 ? 0.0 : x * std::log(x);
}

}  // namespace

ShortcutBounds shortcut_bounds(std::size_t n) {
  const double x = static_cast<double>(n);
  const double half_pairs = x * (x - 1) / 4;
  const double lg = n <= 1 ? 0.0 : std::log2(x);
  ShortcutBounds b;
  b.theorem_lower = half_pairs + n_ln_n(n) / 5 - 3122;
  b.z_lower10 = x * x / 4 + n_ln_n(n) / 10 - 80;
  b.z_lower5 = x * x / 4 + n_ln_n(n) / 5 - 3122;
  b.random_upper = half_pairs + 4 * x * lg * lg;
  return b;
}

ZTable z_table(std::size_t max_n) {
  if (max_n == 0) throw std::invalid_argument("z_table: N must be at least 1");
  ZTable t;
  t.z.assign(max_n + 1, 0);
  t.bound10.assign(max_n + 1, 0);
  t.bound5.assign(max_n + 1, 0);
  t.ok10.assign(max_n + 1, false);
  t.ok5.assign(max_n + 1, false);
  auto& z = t.z;
  for (std::size_t n = 3; n <= max_n; ++n) {
    const auto k = static_cast<std::int64_t>(n);
    const std::int64_t term = ((k + 7) * (k - 3) + 7) / 8;
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::size_t x = 1; x <= (n - 1) / 2; ++x) best = std::min(best, z[x] + z[n - 1 - x]);
    z[n] = term + best;
  }
  for (std::size_t n = 1; n <= max_n; ++n) {
    const ShortcutBounds b = shortcut_bounds(n);
    t.bound10[n] = bound_ceil(b.z_lower10);
    t.bound5[n] = bound_ceil(b.z_lower5);
    t.ok10[n] = z[n] >= t.bound10[n];
    t.ok5[n] = z[n] >= t.bound5[n];
  }
  return t;
}

std::string ztable_csv_row(const ZTable& t, std::size_t n) {
  return std::to_string(n) + ',' + std::to_string(t.z[n]) + ',' + std::to_string(t.bound10[n]) + ',' +
         std::to_string(t.bound5[n]) + ',' + (t.ok10[n] ? '1' : '0') + ',' + (t.ok5[n] ? '1' : '0');
}

std::string ztable_csv(const ZTable& t) {
  std::string out = "n,z,bound10,bound5,ok10,ok5\n";
  for (std::size_t n = 1; n <= t.max_n(); ++n) {
    out += ztable_csv_row(t, n);
    out += '\n';
  }
  return out;
}

bool ztable_bounds_hold(const ZTable& t) {
  for (std::size_t n = 1; n <= t.max_n(); ++n) {
    if (!t.ok10[n]) return false;
    if (n <= kBound5Range && !t.ok5[n]) return false;
  }
  return true;
}

}  // namespace tourpaths
