#pragma once

// Motzkin numbers, the two q-Motzkin polynomial families, and Stieltjes
// tableaux. The memo tables behind motzkin_number, q_motzkin and
// q_motzkin_tilde are shared and mutex-guarded.

#include <functional>
#include <vector>

#include "motzkin/poly.hpp"
#include "motzkin/series.hpp"

namespace motzkin {

/// M_0 = 1, M_n = M_{n-1} + sum_{k=0}^{n-2} M_k M_{n-2-k}.
BigInt motzkin_number(int n);

/// M_0(q) = 1, M_n(q) = M_{n-1}(q) + sum_{k=0}^{n-2} q^k M_k(q) M_{n-2-k}(q).
UniPoly q_motzkin(int n);

/// Same shape with exponent k + 1 - (n-1) [k == n-2], so the last term of the
/// sum carries q^0.
UniPoly q_motzkin_tilde(int n);

/// Coefficients 0..order of a UniPoly family as a series over (q).
PowerSeries series_of(const std::function<UniPoly(int)>& family, int order);

/// Triangle h[n][i], 0 <= i <= n <= n_max. Lookups outside the triangle
/// return the zero polynomial.
class Tableau {
 public:
  explicit Tableau(std::vector<std::vector<UniPoly>> rows) : rows_(std::move(rows)) {}

  int n_max() const { return static_cast<int>(rows_.size()) - 1; }
  const UniPoly& at(int n, int i) const;

 private:
  std::vector<std::vector<UniPoly>> rows_;
};

using LevelFn = std::function<UniPoly(int)>;

/// h_{0,0} = 1; h_{n,i} = beta_i h_{n-1,i-1} + alpha_{i+1} h_{n-1,i} + h_{n-1,i+1}.
/// alpha and beta are queried at levels 1..n_max.
Tableau stieltjes_tableau(const LevelFn& alpha, const LevelFn& beta, int n_max);

/// The q-tableau with alpha_i = beta_i = q^{i-1}.
Tableau h_tableau(int n_max);

/// q^{i-1} (H_{n-1,i-1} + sum_{k=i-1}^{n-2} q^{1+k} H_{k,i-1} H_{n-1-k,0}).
/// Requires 1 <= i <= n <= table.n_max(); throws std::out_of_range.
UniPoly h_recursion_rhs(int n, int i, const Tableau& table);

}  // namespace motzkin
