#pragma once

// Permutations of [n] in one-line notation, their crossing/nesting
// statistics, pattern containment, the three Motzkin-counted classes, and the
// (head, tail) form of the canonical reduced decomposition.

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace motzkin {

class Permutation {
 public:
  /// The empty permutation.
  Permutation() = default;

  /// Takes a one-line word over {1..n}; throws std::invalid_argument unless
  /// every value 1..n occurs exactly once.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);

  /// Parses "4 6 2 9 8 1 7 3 10 5" (any whitespace separates letters).
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(word_.size()); }
  bool empty() const { return word_.empty(); }

  /// Image of the 1-based position i.
  int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }

  std::span<const int> word() const { return word_; }

  bool is_involution() const;
  Permutation inverse() const;

  std::string to_string() const;

  /// Cycle notation with fixed points, cycles opened at their least element,
  /// e.g. "(1 6)(2 7)(3)". Display only.
  std::string cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

struct StatRecord {
  int exc = 0;
  int fp = 0;
  int crs = 0;
  int nes = 0;
  int inv = 0;
  std::vector<int> exc_set;
  std::vector<int> des_set;
  bool is_involution = false;
};

StatRecord perm_statistics(const Permutation& sigma);

int crossings(const Permutation& sigma);
int nestings(const Permutation& sigma);
int excedances(const Permutation& sigma);
int fixed_points(const Permutation& sigma);
int inversions(const Permutation& sigma);

/// True iff some subsequence of sigma is order-isomorphic to pattern.
/// Throws std::invalid_argument for an empty pattern.
bool contains_classical(const Permutation& sigma, const Permutation& pattern);

/// Barred-pattern avoidance for 3-bar1-4-2: every occurrence s(i)s(j)s(k) of
/// 231 must have some i < l < j with s(l) < s(k).
bool avoids_barred_3142(const Permutation& sigma);

enum class ClassId { All, Involutions, I4321, I3412, S321Barred3142 };

std::string_view class_name(ClassId id);

/// Accepts the canonical names ("ALL", "INVOLUTIONS", "I4321", "I3412",
/// "S321_B3142") case-insensitively, plus a few short aliases.
ClassId parse_class(std::string_view text);

bool in_class(const Permutation& sigma, ClassId id);

/// Visits every member of the class exactly once in lexicographic order of
/// the one-line word. Involution classes are generated directly; the others
/// scan S_n. n = 0 visits the empty permutation.
void for_each_in_class(int n, ClassId id, const std::function<void(const Permutation&)>& visit);

std::vector<Permutation> enumerate_class(int n, ClassId id);

struct HeadTail {
  int head = 0;
  int tail = 0;

  friend bool operator==(const HeadTail&, const HeadTail&) = default;
  friend auto operator<=>(const HeadTail&, const HeadTail&) = default;
};

/// Ordered (head, tail) pairs over an ambient length n. Sorted by strictly
/// increasing head with 1 <= tail <= head <= n - 1.
class HeadTailPairs {
 public:
  HeadTailPairs() = default;
  /// Sorts by head and validates; throws std::invalid_argument.
  HeadTailPairs(int n, std::vector<HeadTail> pairs);

  int n() const { return n_; }
  std::span<const HeadTail> pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

  std::vector<int> tails() const;

  /// "{(5,1),(6,3)}"
  std::string to_string() const;

  friend bool operator==(const HeadTailPairs&, const HeadTailPairs&) = default;

 private:
  int n_ = 0;
  std::vector<HeadTail> pairs_;
};

/// Repeatedly moves the greatest excedance value v from its position i to
/// position v, recording (v - 1, i), until the identity is reached.
HeadTailPairs head_tail_pairs(const Permutation& sigma);

/// The product s_{h1}...s_{t1} s_{h2}...s_{t2} ... of adjacent transpositions.
/// Right inverse of head_tail_pairs.
Permutation permutation_from_head_tail(const HeadTailPairs& pairs);

}  // namespace motzkin
