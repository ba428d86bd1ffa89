#include "motzkin/bfile.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "motzkin/qmotzkin.hpp"

namespace motzkin {

BFileParseError::BFileParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

bool all_digits(const std::string& s, std::size_t from) {
  if (s.size() <= from) return false;
  for (std::size_t i = from; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

std::vector<BFileEntry> parse_bfile(std::istream& in) {
  std::vector<BFileEntry> entries;
  std::map<int, int> seen;  // n -> line
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const auto first = raw.find_first_not_of(" \t");
    if (first == std::string::npos || raw[first] == '#') continue;

    std::istringstream fields(raw);
    std::string index_text, value_text, extra;
    fields >> index_text >> value_text;
    if (value_text.empty() || (fields >> extra)) {
      throw BFileParseError(line_no, "expected \"n value\", got '" + raw + "'");
    }
    if (!all_digits(index_text, 0) || index_text.size() > 9) {
      throw BFileParseError(line_no, "bad index '" + index_text + "'");
    }
    const bool negative = value_text[0] == '-';
    if (!all_digits(value_text, negative ? 1 : 0)) {
      throw BFileParseError(line_no, "bad value '" + value_text + "'");
    }
    const int n = std::stoi(index_text);
    if (auto [it, fresh] = seen.emplace(n, line_no); !fresh) {
      throw BFileParseError(line_no, "index " + index_text + " repeats line " + std::to_string(it->second));
    }
    entries.push_back({n, BigInt(value_text)});
  }
  return entries;
}

std::vector<BFileEntry> read_bfile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_bfile(in);
}

OeisReport oeis_check(const std::vector<BFileEntry>& entries, int max_n) {
  if (max_n < 0) throw std::invalid_argument("negative max_n");
  std::map<int, const BigInt*> by_n;
  for (const auto& e : entries) by_n[e.n] = &e.value;

  OeisReport report;
  report.max_n = max_n;
  for (int n = 0; n <= max_n; ++n) {
    const auto it = by_n.find(n);
    if (it == by_n.end()) {
      report.gaps.push_back(n);
      continue;
    }
    const BigInt expected = motzkin_number(n);
    if (*it->second != expected) {
      report.first_mismatch = OeisMismatch{n, expected, *it->second};
      break;
    }
    report.matched.push_back(n);
  }
  return report;
}

std::string OeisReport::to_string() const {
  std::ostringstream out;
  if (first_mismatch) {
    out << "mismatch at n=" << first_mismatch->n << ": expected " << first_mismatch->expected.get_str() << ", found "
        << first_mismatch->found.get_str() << "\n";
  } else {
    out << "match: " << matched.size() << " of " << (max_n + 1) << " values for n=0.." << max_n << "\n";
  }
  if (!gaps.empty()) {
    out << "gaps:";
    for (int n : gaps) out << ' ' << n;
    out << "\n";
  }
  return out.str();
}

}  // namespace motzkin
