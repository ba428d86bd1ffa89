#pragma once

// Truncated power series in t with MultiPoly coefficients, and expansion of
// continued fractions into them.

#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "motzkin/poly.hpp"

namespace motzkin {

class PowerSeries {
 public:
  PowerSeries(VarSet vars, int order);  // zero series

  static PowerSeries one(VarSet vars, int order);
  static PowerSeries from_coeffs(VarSet vars, std::vector<MultiPoly> coeffs);

  VarSet vars() const { return vars_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  const MultiPoly& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  MultiPoly& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }

  /// Keeps coefficients 0..order.
  PowerSeries truncated(int order) const;

  /// f(t) -> f(m t) for a monomial m given as a packed key.
  PowerSeries scale_t(MultiPoly::Key monomial) const;

  /// {"order":N,"vars":["q"],"coeffs":["1","1","2","3 + q"]}
  std::string to_json() const;

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  VarSet vars_;
  std::vector<MultiPoly> coeffs_;
};

/// Product truncated to the smaller order.
PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);

/// 1 / (1 - x) for x with zero constant term.
PowerSeries geometric(const PowerSeries& x);

/// 1/(1 - alpha(1) t - beta(1) t^2/(1 - alpha(2) t - beta(2) t^2/(...))).
/// Levels are 1-based.
struct JFraction {
  VarSet vars;
  std::function<MultiPoly(int)> alpha;
  std::function<MultiPoly(int)> beta;
};

/// 1/(1 - c(1)/(1 - c(2)/(1 - ...))) with c(k) = linear(k) t + quadratic(k) t^2.
struct NestedFraction {
  VarSet vars;
  std::function<MultiPoly(int)> linear;
  std::function<MultiPoly(int)> quadratic;
};

using FractionSpec = std::variant<JFraction, NestedFraction>;

/// Exact expansion to t^order, bottom-up from the deepest level that can still
/// reach t^order (ceil(order/2)+1 for a J-fraction). `extra_depth` adds levels
/// beneath that; the result must not change.
PowerSeries jfraction_series(const FractionSpec& spec, int order, int extra_depth = 0);

/// Number of levels jfraction_series evaluates for this spec and order.
int fraction_depth(const FractionSpec& spec, int order);

struct SeriesPreset {
  std::string name;
  VarSet vars;
  std::string description;
};

/// Registry of the named generating functions, in a fixed order.
const std::vector<SeriesPreset>& series_presets();

/// Throws std::invalid_argument for an unknown name.
PowerSeries named_series(std::string_view name, int order);

/// The continued fraction behind a preset; throws for presets that are not
/// defined by a fraction.
FractionSpec preset_fraction(std::string_view name);

}  // namespace motzkin
