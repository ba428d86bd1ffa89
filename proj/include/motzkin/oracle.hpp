#pragma once

// Brute-force statistic distributions over the permutation classes, and the
// verification suites that confront every identity with enumeration.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "motzkin/path.hpp"
#include "motzkin/permutation.hpp"
#include "motzkin/poly.hpp"

namespace motzkin {

enum class StatSpec { Crs, Nes, CrsPlusNes, JointFpExcCrsNes, JointExcCrs };

std::string_view stat_name(StatSpec spec);

/// "crs", "nes", "crs+nes", "fp-exc-crs-nes", "exc-crs", or the enum-style
/// names ("CRS_PLUS_NES", ...), case-insensitively.
StatSpec parse_stat(std::string_view text);

/// (q) for the single statistics, (x,y,p,q) and (y,q) for the joint ones.
VarSet stat_vars(StatSpec spec);

/// The monomial a permutation contributes to a distribution.
MultiPoly::Key stat_key(const Permutation& sigma, StatSpec spec);

/// Largest n scanned over all of S_n without an explicit override.
inline constexpr int kDefaultScanLimit = 12;

/// Name of the environment variable the CLI reads to raise the scan limit.
inline constexpr const char* kScanLimitEnv = "MOTZKIN_SCAN_LIMIT";

class SizeGuardError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sum over the class of the monomial selected by spec. Classes that need a
/// full S_n scan (ALL, S_321_B3142) refuse n > scan_limit with SizeGuardError.
MultiPoly distribution(ClassId id, int n, StatSpec spec, int scan_limit = kDefaultScanLimit);

struct CheckResult {
  std::string name;
  std::string range;
  bool pass = false;
  std::optional<std::string> counterexample;
  double elapsed_ms = 0;
};

struct VerificationReport {
  std::string suite;
  int max_n = 0;
  std::vector<CheckResult> checks;  // sorted by name
  double elapsed_ms = 0;

  bool all_passed() const;
  /// {"suite":..,"max_n":..,"checks":[{"name","range","pass","counterexample"?,"elapsed_ms"}],"elapsed_ms":..}
  std::string to_json() const;
};

/// statistics, paths, bijections, qpoly, distributions, all
const std::vector<std::string>& suite_names();

/// Runs every check of the suite with its size bound capped at max_n. Checks
/// run concurrently; the report is sorted by check name. Throws
/// std::invalid_argument for an unknown suite.
VerificationReport run_suite(std::string_view suite, int max_n);

}  // namespace motzkin
