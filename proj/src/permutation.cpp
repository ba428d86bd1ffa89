#include "motzkin/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace motzkin {

namespace {

const Permutation& pattern_321() {
  static const Permutation p({3, 2, 1});
  return p;
}

const Permutation& pattern_4321() {
  static const Permutation p({4, 3, 2, 1});
  return p;
}

const Permutation& pattern_3412() {
  static const Permutation p({3, 4, 1, 2});
  return p;
}

bool extends_occurrence(std::span<const int> text, std::span<const int> pattern,
                        std::vector<int>& chosen, int from) {
  const auto m = chosen.size();
  if (m == pattern.size()) return true;
  const int n = static_cast<int>(text.size());
  // Leave room for the remaining letters of the pattern.
  const int last = n - static_cast<int>(pattern.size() - m);
  for (int i = from; i <= last; ++i) {
    bool ok = true;
    for (std::size_t l = 0; l < m && ok; ++l) {
      ok = (text[chosen[l]] < text[i]) == (pattern[l] < pattern[m]);
    }
    if (!ok) continue;
    chosen.push_back(i);
    if (extends_occurrence(text, pattern, chosen, i + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

void involutions_rec(std::vector<int>& word, int pos, ClassId id,
                     const std::function<void(const Permutation&)>& visit) {
  const int n = static_cast<int>(word.size());
  while (pos < n && word[pos] != 0) ++pos;
  if (pos == n) {
    Permutation p(word);
    if (id == ClassId::Involutions || in_class(p, id)) visit(p);
    return;
  }
  // Smallest unassigned position: a fixed point is the lexicographically
  // smallest choice, then 2-cycles with increasing partners.
  word[pos] = pos + 1;
  involutions_rec(word, pos + 1, id, visit);
  for (int j = pos + 1; j < n; ++j) {
    if (word[j] != 0) continue;
    word[pos] = j + 1;
    word[j] = pos + 1;
    involutions_rec(word, pos + 1, id, visit);
    word[j] = 0;
  }
  word[pos] = 0;
}

}  // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const auto n = word_.size();
  std::vector<bool> seen(n + 1, false);
  for (std::size_t i = 0; i < n; ++i) {
    const int v = word_[i];
    if (v < 1 || static_cast<std::size_t>(v) > n) {
      throw std::invalid_argument("permutation value " + std::to_string(v) + " at position " +
                                  std::to_string(i + 1) + " is outside 1.." + std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("permutation value " + std::to_string(v) + " repeated at position " +
                                  std::to_string(i + 1));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("negative permutation length");
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> word;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    const auto token = text.substr(i, j - i);
    int value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || end != token.data() + token.size()) {
      throw std::invalid_argument("not an integer in permutation word: '" + std::string(token) + "'");
    }
    word.push_back(value);
    i = j;
  }
  return Permutation(std::move(word));
}

bool Permutation::is_involution() const {
  for (int i = 1; i <= size(); ++i) {
    if ((*this)((*this)(i)) != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return Permutation(std::move(inv));
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(word_[i]);
  }
  return out;
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<bool> done(word_.size() + 1, false);
  for (int start = 1; start <= size(); ++start) {
    if (done[static_cast<std::size_t>(start)]) continue;
    out += '(';
    int x = start;
    bool first = true;
    while (!done[static_cast<std::size_t>(x)]) {
      done[static_cast<std::size_t>(x)] = true;
      if (!first) out += ' ';
      out += std::to_string(x);
      first = false;
      x = (*this)(x);
    }
    out += ')';
  }
  return out;
}

int crossings(const Permutation& s) {
  int count = 0;
  const int n = s.size();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if ((j < s(i) && s(i) < s(j)) || (s(i) < s(j) && s(j) <= i)) ++count;
    }
  }
  return count;
}

int nestings(const Permutation& s) {
  int count = 0;
  const int n = s.size();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if ((j < s(j) && s(j) < s(i)) || (s(j) < s(i) && s(i) <= i)) ++count;
    }
  }
  return count;
}

int excedances(const Permutation& s) {
  int count = 0;
  for (int i = 1; i <= s.size(); ++i) count += s(i) > i;
  return count;
}

int fixed_points(const Permutation& s) {
  int count = 0;
  for (int i = 1; i <= s.size(); ++i) count += s(i) == i;
  return count;
}

int inversions(const Permutation& s) {
  int count = 0;
  for (int i = 1; i <= s.size(); ++i) {
    for (int j = i + 1; j <= s.size(); ++j) count += s(i) > s(j);
  }
  return count;
}

StatRecord perm_statistics(const Permutation& s) {
  StatRecord r;
  r.crs = crossings(s);
  r.nes = nestings(s);
  r.inv = inversions(s);
  for (int i = 1; i <= s.size(); ++i) {
    if (s(i) > i) r.exc_set.push_back(i);
    if (s(i) == i) ++r.fp;
    if (i < s.size() && s(i) > s(i + 1)) r.des_set.push_back(i);
  }
  r.exc = static_cast<int>(r.exc_set.size());
  r.is_involution = s.is_involution();
  return r;
}

bool contains_classical(const Permutation& sigma, const Permutation& pattern) {
  if (pattern.empty()) throw std::invalid_argument("pattern must be non-empty");
  if (pattern.size() > sigma.size()) return false;
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(pattern.size()));
  return extends_occurrence(sigma.word(), pattern.word(), chosen, 0);
}

bool avoids_barred_3142(const Permutation& s) {
  const int n = s.size();
  for (int i = 1; i <= n; ++i) {
    int interior_min = std::numeric_limits<int>::max();
    for (int j = i + 1; j <= n; ++j) {
      if (s(j) > s(i)) {
        for (int k = j + 1; k <= n; ++k) {
          if (s(k) < s(i) && interior_min > s(k)) return false;
        }
      }
      interior_min = std::min(interior_min, s(j));
    }
  }
  return true;
}

std::string_view class_name(ClassId id) {
  switch (id) {
    case ClassId::All: return "ALL";
    case ClassId::Involutions: return "INVOLUTIONS";
    case ClassId::I4321: return "I_4321";
    case ClassId::I3412: return "I_3412";
    case ClassId::S321Barred3142: return "S_321_B3142";
  }
  return "?";
}

ClassId parse_class(std::string_view text) {
  std::string key;
  for (char c : text) {
    if (c == '_' || c == '-' || c == '(' || c == ')' || c == ',') continue;
    key += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  if (key == "ALL" || key == "S") return ClassId::All;
  if (key == "INVOLUTIONS" || key == "INV" || key == "I") return ClassId::Involutions;
  if (key == "I4321") return ClassId::I4321;
  if (key == "I3412") return ClassId::I3412;
  if (key == "S321B3142" || key == "S3213142" || key == "S321") return ClassId::S321Barred3142;
  throw std::invalid_argument("unknown class '" + std::string(text) + "'");
}

bool in_class(const Permutation& sigma, ClassId id) {
  switch (id) {
    case ClassId::All: return true;
    case ClassId::Involutions: return sigma.is_involution();
    case ClassId::I4321: return sigma.is_involution() && !contains_classical(sigma, pattern_4321());
    case ClassId::I3412: return sigma.is_involution() && !contains_classical(sigma, pattern_3412());
    case ClassId::S321Barred3142:
      return !contains_classical(sigma, pattern_321()) && avoids_barred_3142(sigma);
  }
  return false;
}

void for_each_in_class(int n, ClassId id, const std::function<void(const Permutation&)>& visit) {
  if (n < 0) throw std::invalid_argument("negative size");
  if (id == ClassId::Involutions || id == ClassId::I4321 || id == ClassId::I3412) {
    std::vector<int> word(static_cast<std::size_t>(n), 0);
    involutions_rec(word, 0, id, visit);
    return;
  }
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  do {
    Permutation p(word);
    if (in_class(p, id)) visit(p);
  } while (std::next_permutation(word.begin(), word.end()));
}

std::vector<Permutation> enumerate_class(int n, ClassId id) {
  std::vector<Permutation> out;
  for_each_in_class(n, id, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

HeadTailPairs::HeadTailPairs(int n, std::vector<HeadTail> pairs) : n_(n), pairs_(std::move(pairs)) {
  if (n < 0) throw std::invalid_argument("negative ambient length");
  std::sort(pairs_.begin(), pairs_.end());
  for (std::size_t j = 0; j < pairs_.size(); ++j) {
    const auto [h, t] = pairs_[j];
    if (t < 1 || t > h || h > n - 1) {
      throw std::invalid_argument("pair (" + std::to_string(h) + "," + std::to_string(t) +
                                  ") violates 1 <= tail <= head <= n-1 for n=" + std::to_string(n));
    }
    if (j > 0 && pairs_[j - 1].head == h) {
      throw std::invalid_argument("repeated head " + std::to_string(h));
    }
  }
}

std::vector<int> HeadTailPairs::tails() const {
  std::vector<int> t;
  t.reserve(pairs_.size());
  for (const auto& p : pairs_) t.push_back(p.tail);
  return t;
}

std::string HeadTailPairs::to_string() const {
  std::string out = "{";
  for (std::size_t j = 0; j < pairs_.size(); ++j) {
    if (j) out += ',';
    out += '(' + std::to_string(pairs_[j].head) + ',' + std::to_string(pairs_[j].tail) + ')';
  }
  return out + '}';
}

HeadTailPairs head_tail_pairs(const Permutation& sigma) {
  std::vector<int> w(sigma.word().begin(), sigma.word().end());
  const int n = sigma.size();
  std::vector<HeadTail> pairs;
  for (;;) {
    int value = 0;
    int pos = 0;
    for (int i = 1; i <= n; ++i) {
      const int v = w[static_cast<std::size_t>(i - 1)];
      if (v > i && v > value) {
        value = v;
        pos = i;
      }
    }
    if (value == 0) break;
    // Slide the value right to position `value`; letters in between shift left.
    std::rotate(w.begin() + (pos - 1), w.begin() + pos, w.begin() + value);
    pairs.push_back({value - 1, pos});
  }
  return HeadTailPairs(n, std::move(pairs));
}

Permutation permutation_from_head_tail(const HeadTailPairs& pairs) {
  std::vector<int> w(static_cast<std::size_t>(pairs.n()));
  std::iota(w.begin(), w.end(), 1);
  // Composing s_{a1} s_{a2} ... s_{am} as maps amounts to swapping positions
  // a1, a2, ..., am of the identity word in that order.
  for (const auto& [h, t] : pairs.pairs()) {
    for (int a = h; a >= t; --a) {
      std::swap(w[static_cast<std::size_t>(a - 1)], w[static_cast<std::size_t>(a)]);
    }
  }
  return Permutation(std::move(w));
}

}  // namespace motzkin
