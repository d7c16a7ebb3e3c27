#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace tourpaths {

/// Tolerance of the rounding rule: a count c meets a real bound b iff
/// c >= ceil(b - kBoundEpsilon).
inline constexpr double kBoundEpsilon = 1e-9;

std::int64_t bound_ceil(double b);
bool meets(std::int64_t count, double b);

/// Largest n for which z(n) >= n^2/4 + (n ln n)/5 - 3122 is claimed.
inline constexpr std::size_t kBound5Range = 62540;

/// z(1..N) with both lower-bound comparisons. Index 0 is unused.
struct ZTable {
  std::vector<std::int64_t> z;
  std::vector<std::int64_t> bound10;  // ceil(n^2/4 + (n ln n)/10 - 80 - eps)
  std::vector<std::int64_t> bound5;   // ceil(n^2/4 + (n ln n)/5 - 3122 - eps)
  std::vector<bool> ok10;
  std::vector<bool> ok5;

  std::size_t max_n() const noexcept { return z.empty() ? 0 : z.size() - 1; }
};

/// z(1) = z(2) = 0 and, for n >= 3,
/// z(n) = ceil((n+7)(n-3)/8) + min over 1 <= x <= (n-1)/2 of z(x) + z(n-1-x).
/// Throws std::invalid_argument for N = 0.
ZTable z_table(std::size_t max_n);

/// "n,z,bound10,bound5,ok10,ok5" followed by one row per n (ok flags 1/0).
std::string ztable_csv(const ZTable& table);
std::string ztable_csv_row(const ZTable& table, std::size_t n);

/// Both inequalities in range: bound10 everywhere, bound5 for n <= 62540.
bool ztable_bounds_hold(const ZTable& table);

/// Real-valued bound curves at n (natural log except in random_upper).
struct ShortcutBounds {
  double theorem_lower = 0;  // C(n,2)/2 + (n ln n)/5 - 3122
  double z_lower10 = 0;      // n^2/4 + (n ln n)/10 - 80
  double z_lower5 = 0;       // n^2/4 + (n ln n)/5 - 3122
  double random_upper = 0;   // C(n,2)/2 + 4n log2(n)^2
};

ShortcutBounds shortcut_bounds(std::size_t n);

}  // namespace tourpaths
