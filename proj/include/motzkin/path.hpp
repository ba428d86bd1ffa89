#pragma once

// Motzkin paths: words over {u, h, d} that never dip below the x-axis and end
// on it. Step indices are 1-based throughout; a step's height is the
// y-coordinate of its starting point.

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "motzkin/permutation.hpp"

namespace motzkin {

enum class Step : char { Up = 'u', Hor = 'h', Down = 'd' };

/// Raised by MotzkinPath::parse. index() is the 1-based position of the
/// offending character, or of the last step when the word ends above zero.
class PathError : public std::invalid_argument {
 public:
  PathError(const std::string& what, std::size_t index) : std::invalid_argument(what), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

class MotzkinPath {
 public:
  MotzkinPath() = default;

  /// Validates the height invariants; throws PathError.
  explicit MotzkinPath(std::vector<Step> steps);

  /// Case-insensitive word over {u,h,d}; whitespace is ignored.
  static MotzkinPath parse(std::string_view text);

  static MotzkinPath horizontal(int n);

  int size() const { return static_cast<int>(steps_.size()); }
  bool empty() const { return steps_.empty(); }
  Step operator[](int i) const { return steps_[static_cast<std::size_t>(i - 1)]; }
  std::span<const Step> steps() const { return steps_; }

  /// Start heights of steps 1..n (index 0 of the result is step 1).
  std::vector<int> heights() const;

  std::string to_string() const;

  friend bool operator==(const MotzkinPath&, const MotzkinPath&) = default;
  friend auto operator<=>(const MotzkinPath&, const MotzkinPath&) = default;

 private:
  std::vector<Step> steps_;
};

struct PathStatRecord {
  int hor = 0;
  int up = 0;
  int down = 0;
  int sh_u = 0;
  int sh_h = 0;
  int sh_d = 0;
  int area = 0;

  friend bool operator==(const PathStatRecord&, const PathStatRecord&) = default;
};

/// Start height of step i; throws std::out_of_range unless 1 <= i <= n.
int step_height(const MotzkinPath& path, int i);

PathStatRecord path_statistics(const MotzkinPath& path);

/// Lexicographic in u < h < d.
void for_each_path(int n, const std::function<void(const MotzkinPath&)>& visit);
std::vector<MotzkinPath> enumerate_paths(int n);

using Matching = std::vector<std::pair<int, int>>;

/// k-th up step joined with the k-th down step; ordered by up index.
Matching sequential_matching(const MotzkinPath& path);

/// Each up step joined with the down step closing its tunnel, i.e. the
/// bracket matching of u/d with h ignored; ordered by up index.
Matching tunnel_matching(const MotzkinPath& path);

/// Peels strips off the path, last up step to last down step, recording the
/// (x+y)-labels of the cells at either end: head = r + y_r - 2 and
/// tail = p + y_p for the last down step r and the last up step p.
HeadTailPairs strip_decomposition(const MotzkinPath& path);

/// Rebuilds the path by inserting strips from the all-h path in ascending
/// head order. Throws std::invalid_argument when the pairs do not come from a
/// path (tails closer than 2 apart, or no unique step carries a label).
MotzkinPath path_from_head_tail(const HeadTailPairs& pairs);

}  // namespace motzkin
