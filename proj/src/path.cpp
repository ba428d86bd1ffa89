#include "motzkin/path.hpp"

#include <algorithm>
#include <cctype>

namespace motzkin {

namespace {

int delta(Step s) {
  switch (s) {
    case Step::Up: return 1;
    case Step::Down: return -1;
    case Step::Hor: return 0;
  }
  return 0;
}

void validate(std::span<const Step> steps) {
  int y = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    y += delta(steps[i]);
    if (y < 0) {
      throw PathError("path goes below the x-axis at step " + std::to_string(i + 1), i + 1);
    }
  }
  if (y != 0) {
    throw PathError("path ends at height " + std::to_string(y) + " instead of 0", steps.size());
  }
}

void paths_rec(std::vector<Step>& steps, std::size_t pos, int height,
               const std::function<void(const MotzkinPath&)>& visit) {
  const auto n = steps.size();
  if (pos == n) {
    visit(MotzkinPath(steps));
    return;
  }
  const auto remaining = static_cast<int>(n - pos);
  if (height + 1 <= remaining - 1) {
    steps[pos] = Step::Up;
    paths_rec(steps, pos + 1, height + 1, visit);
  }
  if (height <= remaining - 1) {
    steps[pos] = Step::Hor;
    paths_rec(steps, pos + 1, height, visit);
  }
  if (height > 0) {
    steps[pos] = Step::Down;
    paths_rec(steps, pos + 1, height - 1, visit);
  }
}

}  // namespace

MotzkinPath::MotzkinPath(std::vector<Step> steps) : steps_(std::move(steps)) { validate(steps_); }

MotzkinPath MotzkinPath::parse(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    switch (std::tolower(static_cast<unsigned char>(c))) {
      case 'u': steps.push_back(Step::Up); break;
      case 'h': steps.push_back(Step::Hor); break;
      case 'd': steps.push_back(Step::Down); break;
      default:
        throw PathError(std::string("illegal step '") + c + "' at index " + std::to_string(steps.size() + 1),
                        steps.size() + 1);
    }
  }
  return MotzkinPath(std::move(steps));
}

MotzkinPath MotzkinPath::horizontal(int n) {
  return MotzkinPath(std::vector<Step>(static_cast<std::size_t>(n), Step::Hor));
}

std::vector<int> MotzkinPath::heights() const {
  std::vector<int> h(steps_.size());
  int y = 0;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    h[i] = y;
    y += delta(steps_[i]);
  }
  return h;
}

std::string MotzkinPath::to_string() const {
  std::string s;
  s.reserve(steps_.size());
  for (Step step : steps_) s += static_cast<char>(step);
  return s;
}

int step_height(const MotzkinPath& path, int i) {
  if (i < 1 || i > path.size()) {
    throw std::out_of_range("step index " + std::to_string(i) + " outside 1.." + std::to_string(path.size()));
  }
  int ups = 0;
  int downs = 0;
  for (int k = 1; k <= i; ++k) {
    ups += path[k] == Step::Up;
    downs += path[k] == Step::Down;
  }
  const int level = ups - downs;
  switch (path[i]) {
    case Step::Up: return level - 1;
    case Step::Down: return level + 1;
    case Step::Hor: return level;
  }
  return level;
}

PathStatRecord path_statistics(const MotzkinPath& path) {
  PathStatRecord r;
  int y = 0;
  for (Step s : path.steps()) {
    switch (s) {
      case Step::Up:
        ++r.up;
        r.sh_u += y;
        break;
      case Step::Hor:
        ++r.hor;
        r.sh_h += y;
        break;
      case Step::Down:
        ++r.down;
        r.sh_d += y;
        break;
    }
    const int next = y + delta(s);
    // Trapezoid under the step, doubled to stay integral.
    r.area += y + next;
    y = next;
  }
  r.area /= 2;
  return r;
}

void for_each_path(int n, const std::function<void(const MotzkinPath&)>& visit) {
  if (n < 0) throw std::invalid_argument("negative path length");
  std::vector<Step> steps(static_cast<std::size_t>(n));
  paths_rec(steps, 0, 0, visit);
}

std::vector<MotzkinPath> enumerate_paths(int n) {
  std::vector<MotzkinPath> out;
  for_each_path(n, [&](const MotzkinPath& p) { out.push_back(p); });
  return out;
}

Matching sequential_matching(const MotzkinPath& path) {
  std::vector<int> ups;
  std::vector<int> downs;
  for (int i = 1; i <= path.size(); ++i) {
    if (path[i] == Step::Up) ups.push_back(i);
    if (path[i] == Step::Down) downs.push_back(i);
  }
  Matching m;
  m.reserve(ups.size());
  for (std::size_t k = 0; k < ups.size(); ++k) m.emplace_back(ups[k], downs[k]);
  return m;
}

Matching tunnel_matching(const MotzkinPath& path) {
  std::vector<int> open;
  Matching m;
  for (int i = 1; i <= path.size(); ++i) {
    if (path[i] == Step::Up) {
      open.push_back(i);
    } else if (path[i] == Step::Down) {
      m.emplace_back(open.back(), i);
      open.pop_back();
    }
  }
  std::sort(m.begin(), m.end());
  return m;
}

HeadTailPairs strip_decomposition(const MotzkinPath& path) {
  std::vector<Step> steps(path.steps().begin(), path.steps().end());
  const int n = path.size();
  std::vector<HeadTail> pairs;
  for (;;) {
    int p = 0;
    int r = 0;
    for (int i = 1; i <= n; ++i) {
      if (steps[static_cast<std::size_t>(i - 1)] == Step::Up) p = i;
      if (steps[static_cast<std::size_t>(i - 1)] == Step::Down) r = i;
    }
    if (p == 0) break;
    int y = 0;
    int y_p = 0;
    int y_r = 0;
    for (int i = 1; i <= n; ++i) {
      if (i == p) y_p = y;
      if (i == r) y_r = y;
      y += delta(steps[static_cast<std::size_t>(i - 1)]);
    }
    pairs.push_back({r + y_r - 2, p + y_p});
    // Flattening both ends lowers everything strictly between them by one.
    steps[static_cast<std::size_t>(p - 1)] = Step::Hor;
    steps[static_cast<std::size_t>(r - 1)] = Step::Hor;
  }
  return HeadTailPairs(n, std::move(pairs));
}

MotzkinPath path_from_head_tail(const HeadTailPairs& pairs) {
  const int n = pairs.n();
  const auto list = pairs.pairs();
  for (std::size_t j = 1; j < list.size(); ++j) {
    if (list[j - 1].tail + 2 > list[j].tail) {
      throw std::invalid_argument("tails " + std::to_string(list[j - 1].tail) + " and " +
                                  std::to_string(list[j].tail) + " are closer than 2");
    }
  }
  std::vector<Step> steps(static_cast<std::size_t>(n), Step::Hor);
  auto at = [&](int i) -> Step& { return steps[static_cast<std::size_t>(i - 1)]; };
  for (const auto& [head, tail] : list) {
    std::vector<int> y(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) y[static_cast<std::size_t>(i)] = y[static_cast<std::size_t>(i - 1)] + delta(at(i));
    auto start = [&](int i) { return y[static_cast<std::size_t>(i - 1)]; };

    int p = 0;
    int matches = 0;
    for (int i = 1; i <= n; ++i) {
      if (at(i) == Step::Hor && i + start(i) == tail) {
        p = i;
        ++matches;
      }
    }
    if (matches != 1) {
      throw std::invalid_argument("no unique horizontal step labelled " + std::to_string(tail) + " for pair (" +
                                  std::to_string(head) + "," + std::to_string(tail) + ")");
    }
    // After raising, the closing step starts at height 1 and its cell label
    // is r + 1 - 2.
    int r = 0;
    matches = 0;
    for (int i = p + 1; i <= n; ++i) {
      if (at(i) == Step::Hor && start(i) == 0 && i - 1 == head) {
        r = i;
        ++matches;
      }
    }
    if (matches != 1) {
      throw std::invalid_argument("no horizontal step on the axis closes pair (" + std::to_string(head) + "," +
                                  std::to_string(tail) + ")");
    }
    at(p) = Step::Up;
    at(r) = Step::Down;
  }
  return MotzkinPath(std::move(steps));
}

}  // namespace motzkin
