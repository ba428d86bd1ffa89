#include "motzkin/qmotzkin.hpp"

#include <mutex>
#include <stdexcept>

namespace motzkin {

namespace {

// Grows a memo table under a lock; callers get copies of finished entries.
template <typename T, typename Next>
T memoized(std::vector<T>& table, std::mutex& mu, int n, Next next) {
  if (n < 0) throw std::invalid_argument("negative index");
  std::lock_guard lock(mu);
  while (static_cast<int>(table.size()) <= n) table.push_back(next(table));
  return table[static_cast<std::size_t>(n)];
}

}  // namespace

BigInt motzkin_number(int n) {
  static std::vector<BigInt> table;
  static std::mutex mu;
  return memoized(table, mu, n, [](const std::vector<BigInt>& m) {
    const auto n = static_cast<int>(m.size());
    if (n == 0) return BigInt(1);
    BigInt v = m[static_cast<std::size_t>(n - 1)];
    for (int k = 0; k <= n - 2; ++k) v += m[static_cast<std::size_t>(k)] * m[static_cast<std::size_t>(n - 2 - k)];
    return v;
  });
}

UniPoly q_motzkin(int n) {
  static std::vector<UniPoly> table;
  static std::mutex mu;
  return memoized(table, mu, n, [](const std::vector<UniPoly>& m) {
    const auto n = static_cast<int>(m.size());
    if (n == 0) return UniPoly(1);
    UniPoly v = m[static_cast<std::size_t>(n - 1)];
    for (int k = 0; k <= n - 2; ++k) {
      v += (m[static_cast<std::size_t>(k)] * m[static_cast<std::size_t>(n - 2 - k)]).shifted(k);
    }
    return v;
  });
}

UniPoly q_motzkin_tilde(int n) {
  static std::vector<UniPoly> table;
  static std::mutex mu;
  return memoized(table, mu, n, [](const std::vector<UniPoly>& m) {
    const auto n = static_cast<int>(m.size());
    if (n == 0) return UniPoly(1);
    UniPoly v = m[static_cast<std::size_t>(n - 1)];
    for (int k = 0; k <= n - 2; ++k) {
      const int exponent = k + 1 - (k == n - 2 ? n - 1 : 0);
      v += (m[static_cast<std::size_t>(k)] * m[static_cast<std::size_t>(n - 2 - k)]).shifted(exponent);
    }
    return v;
  });
}

PowerSeries series_of(const std::function<UniPoly(int)>& family, int order) {
  PowerSeries s(VarSet::Q, order);
  for (int k = 0; k <= order; ++k) s[k] = MultiPoly::from_uni(VarSet::Q, "q", family(k));
  return s;
}

const UniPoly& Tableau::at(int n, int i) const {
  static const UniPoly zero;
  if (n < 0 || n > n_max() || i < 0 || i > n) return zero;
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
}

Tableau stieltjes_tableau(const LevelFn& alpha, const LevelFn& beta, int n_max) {
  if (n_max < 0) throw std::invalid_argument("negative tableau size");
  std::vector<UniPoly> a(static_cast<std::size_t>(n_max) + 2);
  std::vector<UniPoly> b(static_cast<std::size_t>(n_max) + 2);
  for (int level = 1; level <= n_max; ++level) {
    a[static_cast<std::size_t>(level)] = alpha(level);
    b[static_cast<std::size_t>(level)] = beta(level);
  }
  std::vector<std::vector<UniPoly>> rows;
  rows.push_back({UniPoly(1)});
  for (int n = 1; n <= n_max; ++n) {
    const auto& prev = rows.back();
    auto get = [&](int i) -> const UniPoly& {
      static const UniPoly zero;
      return i >= 0 && i <= n - 1 ? prev[static_cast<std::size_t>(i)] : zero;
    };
    std::vector<UniPoly> row(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
      UniPoly v = get(i + 1);
      if (i >= 1) v += b[static_cast<std::size_t>(i)] * get(i - 1);
      if (i + 1 <= n_max) v += a[static_cast<std::size_t>(i + 1)] * get(i);
      row[static_cast<std::size_t>(i)] = std::move(v);
    }
    rows.push_back(std::move(row));
  }
  return Tableau(std::move(rows));
}

Tableau h_tableau(int n_max) {
  const LevelFn level = [](int i) { return UniPoly::monomial(i - 1); };
  return stieltjes_tableau(level, level, n_max);
}

UniPoly h_recursion_rhs(int n, int i, const Tableau& table) {
  if (i < 1 || i > n || n > table.n_max()) {
    throw std::out_of_range("h_recursion_rhs needs 1 <= i <= n <= " + std::to_string(table.n_max()));
  }
  UniPoly sum = table.at(n - 1, i - 1);
  for (int k = i - 1; k <= n - 2; ++k) {
    sum += (table.at(k, i - 1) * table.at(n - 1 - k, 0)).shifted(1 + k);
  }
  return sum.shifted(i - 1);
}

}  // namespace motzkin
