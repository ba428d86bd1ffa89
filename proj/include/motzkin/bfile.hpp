#pragma once

// OEIS b-file reading and comparison against the Motzkin numbers.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "motzkin/poly.hpp"

namespace motzkin {

struct BFileEntry {
  int n;
  BigInt value;
};

class BFileParseError : public std::runtime_error {
 public:
  BFileParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

/// Lines "n value"; blank lines and lines starting with '#' are skipped.
/// Malformed lines and repeated indices throw BFileParseError (1-based line).
std::vector<BFileEntry> parse_bfile(std::istream& in);
std::vector<BFileEntry> read_bfile(const std::string& path);

struct OeisMismatch {
  int n;
  BigInt expected;
  BigInt found;
};

struct OeisReport {
  int max_n = 0;
  std::vector<int> matched;
  std::vector<int> gaps;  // indices 0..max_n absent from the file
  std::optional<OeisMismatch> first_mismatch;

  bool pass() const { return !first_mismatch; }
  std::string to_string() const;
};

OeisReport oeis_check(const std::vector<BFileEntry>& entries, int max_n);

}  // namespace motzkin
