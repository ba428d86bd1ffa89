#pragma once

// Reference implementations written straight from the definitions, sharing no
// code with the library: quadratic/cubic loops, subset scans, closed forms.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using Word = std::vector<int>;  // w[i-1] = sigma(i)

inline std::vector<Word> all_perms(int n) {
  Word w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Word> out;
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

struct Stats {
  int exc = 0, fp = 0, crs = 0, nes = 0, inv = 0;
};

inline Stats stats(const Word& w) {
  const int n = static_cast<int>(w.size());
  auto s = [&](int i) { return w[static_cast<std::size_t>(i - 1)]; };
  Stats r;
  for (int i = 1; i <= n; ++i) {
    r.exc += s(i) > i;
    r.fp += s(i) == i;
    for (int j = i + 1; j <= n; ++j) {
      r.inv += s(i) > s(j);
      r.crs += (i < j && j < s(i) && s(i) < s(j)) || (s(i) < s(j) && s(j) <= i && i < j);
      r.nes += (i < j && j < s(j) && s(j) < s(i)) || (s(j) < s(i) && s(i) <= i && i < j);
    }
  }
  return r;
}

inline bool order_isomorphic(const Word& a, const Word& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if ((a[i] < a[j]) != (b[i] < b[j])) return false;
    }
  }
  return true;
}

// Every subsequence of the pattern's length, by bitmask.
inline bool contains(const Word& w, const Word& pattern) {
  const std::size_t n = w.size(), k = pattern.size();
  if (k > n) return false;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
    Word sub;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) sub.push_back(w[i]);
    }
    if (order_isomorphic(sub, pattern)) return true;
  }
  return false;
}

inline bool avoids_3bar142(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        if (!(w[k] < w[i] && w[i] < w[j])) continue;
        bool rescued = false;
        for (std::size_t l = i + 1; l < j; ++l) rescued = rescued || w[l] < w[k];
        if (!rescued) return false;
      }
  return true;
}

inline bool involution(const Word& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[static_cast<std::size_t>(w[i] - 1)] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

inline bool in_i4321(const Word& w) { return involution(w) && !contains(w, {4, 3, 2, 1}); }
inline bool in_i3412(const Word& w) { return involution(w) && !contains(w, {3, 4, 1, 2}); }
inline bool in_s321(const Word& w) { return !contains(w, {3, 2, 1}) && avoids_3bar142(w); }

// Paths as strings over {u,h,d}.
inline std::vector<std::string> all_paths(int n) {
  std::vector<std::string> out;
  std::string w(static_cast<std::size_t>(n), 'h');
  // Base-3 odometer over all words, filtered.
  const std::string letters = "uhd";
  std::vector<int> digit(static_cast<std::size_t>(n), 0);
  while (true) {
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = letters[static_cast<std::size_t>(digit[static_cast<std::size_t>(i)])];
    int y = 0;
    bool ok = true;
    for (char c : w) {
      y += c == 'u' ? 1 : c == 'd' ? -1 : 0;
      ok = ok && y >= 0;
    }
    if (ok && y == 0) out.push_back(w);
    int i = n - 1;
    while (i >= 0 && digit[static_cast<std::size_t>(i)] == 2) digit[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++digit[static_cast<std::size_t>(i)];
  }
  return out;
}

struct PathStats {
  int hor = 0, up = 0, down = 0, sh_u = 0, sh_h = 0, sh_d = 0, area = 0;
};

// Area as the sum of trapezoids under each step.
inline PathStats path_stats(const std::string& w) {
  PathStats r;
  int y = 0, twice_area = 0;
  for (char c : w) {
    const int y1 = y + (c == 'u') - (c == 'd');
    twice_area += y + y1;
    if (c == 'u') ++r.up, r.sh_u += y;
    if (c == 'h') ++r.hor, r.sh_h += y;
    if (c == 'd') ++r.down, r.sh_d += y;
    y = y1;
  }
  r.area = twice_area / 2;
  return r;
}

inline mpz_class binomial(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// Sum_k C(n,2k) Catalan(k).
inline mpz_class motzkin_closed_form(int n) {
  mpz_class sum = 0;
  for (int k = 0; 2 * k <= n; ++k) sum += binomial(n, 2 * k) * binomial(2 * k, k) / (k + 1);
  return sum;
}

// Distribution as exponent -> count.
using Dist = std::map<int, long>;

template <class Member, class Stat>
Dist scan_distribution(int n, Member member, Stat stat) {
  Dist d;
  for (const auto& w : all_perms(n)) {
    if (member(w)) ++d[stat(w)];
  }
  return d;
}

}  // namespace oracle
