#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace tourpaths::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitBoundViolated = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitSearchExhausted = 3;

/// One verification check: "suite\tcheck\texpected\tactual\tresult".
struct CheckRow {
  std::string check;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct SuiteOptions {
  std::size_t n = 0;       // 0: suite default
  std::size_t trials = 0;  // 0: suite default
  std::uint64_t seed = 1;
  bool full = false;       // n=7 enumeration for h10, 62540 for zbounds
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"h10", "table1", "mv", "delta2", "identity-s-beta", "rnk-power", "zbounds"};
  return names;
}

/// Throws std::invalid_argument for an unknown suite.
std::vector<CheckRow> run_suite(const std::string& name, const SuiteOptions& options);

/// Entry point with the arguments after the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tourpaths::cli
