#include "motzkin/series.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace motzkin {

namespace {

MultiPoly q_pow(int e) { return MultiPoly::variable(VarSet::Q, "q", e); }

struct Level {
  MultiPoly linear;
  MultiPoly quadratic;
  int min_degree;  // 0 when the numerator vanishes and the fraction stops here
};

Level nested_level(const NestedFraction& f, int k) {
  Level l{f.linear(k), f.quadratic(k), 0};
  if (!l.linear.is_zero()) {
    l.min_degree = 1;
  } else if (!l.quadratic.is_zero()) {
    l.min_degree = 2;
  }
  return l;
}

PowerSeries expand(const JFraction& f, int order, int extra_depth) {
  const bool full = extra_depth > 0;
  const int depth = fraction_depth(f, order) + extra_depth;
  PowerSeries below = PowerSeries::one(f.vars, full ? order : 0);
  for (int k = depth; k >= 1; --k) {
    const int m = full ? order : order - 2 * (k - 1);
    if (m <= 0) {
      below = PowerSeries::one(f.vars, std::max(m, 0));
      continue;
    }
    PowerSeries x(f.vars, m);
    x[1] = f.alpha(k);
    const MultiPoly beta = f.beta(k);
    for (int j = 2; j <= m; ++j) x[j] = beta * below[j - 2];
    below = geometric(x);
  }
  return below.truncated(order);
}

PowerSeries expand(const NestedFraction& f, int order, int extra_depth) {
  const bool full = extra_depth > 0;
  std::vector<Level> levels;
  std::vector<int> offsets;
  int offset = 0;
  for (int k = 1; offset <= order; ++k) {
    levels.push_back(nested_level(f, k));
    offsets.push_back(offset);
    if (levels.back().min_degree == 0) break;
    offset += levels.back().min_degree;
  }
  for (int e = 0; e < extra_depth && levels.back().min_degree != 0; ++e) {
    levels.push_back(nested_level(f, static_cast<int>(levels.size()) + 1));
    offsets.push_back(offset);
  }
  PowerSeries below = PowerSeries::one(f.vars, full ? order : 0);
  for (auto k = static_cast<int>(levels.size()); k >= 1; --k) {
    const auto& level = levels[static_cast<std::size_t>(k - 1)];
    const int m = full ? order : order - offsets[static_cast<std::size_t>(k - 1)];
    if (m <= 0 || level.min_degree == 0) {
      below = PowerSeries::one(f.vars, std::max(m, 0));
      continue;
    }
    PowerSeries x(f.vars, m);
    for (int j = 1; j <= m; ++j) {
      MultiPoly c(f.vars);
      if (!level.linear.is_zero()) c += level.linear * below[j - 1];
      if (!level.quadratic.is_zero() && j >= 2) c += level.quadratic * below[j - 2];
      x[j] = std::move(c);
    }
    below = geometric(x);
  }
  return below.truncated(order);
}

PowerSeries mtilde_functional(int order) {
  // F = 1 / (1 - (t + t^2) / (1 - q t^2 F(q t))), iterated to a fixed point.
  const auto q_key = MultiPoly::pack({1, 0, 0, 0});
  const MultiPoly q = q_pow(1);
  PowerSeries f = PowerSeries::one(VarSet::Q, order);
  for (int iter = 0; iter <= order + 1; ++iter) {
    const PowerSeries scaled = f.scale_t(q_key);
    PowerSeries y(VarSet::Q, order);
    for (int j = 2; j <= order; ++j) y[j] = q * scaled[j - 2];
    const PowerSeries inner = geometric(y);
    PowerSeries g(VarSet::Q, order);
    for (int j = 1; j <= order; ++j) {
      g[j] = inner[j - 1];
      if (j >= 2) g[j] += inner[j - 2];
    }
    PowerSeries next = geometric(g);
    if (next == f) break;
    f = std::move(next);
  }
  return f;
}

}  // namespace

PowerSeries::PowerSeries(VarSet vars, int order) : vars_(vars) {
  if (order < 0) throw std::invalid_argument("negative series order");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, MultiPoly(vars));
}

PowerSeries PowerSeries::one(VarSet vars, int order) {
  PowerSeries s(vars, order);
  s[0] = MultiPoly(vars, 1);
  return s;
}

PowerSeries PowerSeries::from_coeffs(VarSet vars, std::vector<MultiPoly> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("series needs at least one coefficient");
  PowerSeries s(vars, 0);
  for (const auto& c : coeffs) {
    if (c.vars() != vars) throw std::invalid_argument("coefficient over the wrong variables");
  }
  s.coeffs_ = std::move(coeffs);
  return s;
}

PowerSeries PowerSeries::truncated(int order) const {
  if (order > this->order()) throw std::invalid_argument("cannot extend a truncated series");
  PowerSeries s(vars_, order);
  for (int k = 0; k <= order; ++k) s[k] = (*this)[k];
  return s;
}

PowerSeries PowerSeries::scale_t(MultiPoly::Key monomial) const {
  PowerSeries s(vars_, order());
  MultiPoly::Key key = 0;
  for (int k = 0; k <= order(); ++k) {
    s[k] = (*this)[k].times_monomial(key);
    key += monomial;
  }
  return s;
}

std::string PowerSeries::to_json() const {
  nlohmann::ordered_json j;
  j["order"] = order();
  auto vars = nlohmann::ordered_json::array();
  for (auto name : var_names(vars_)) vars.push_back(std::string(name));
  j["vars"] = vars;
  auto coeffs = nlohmann::ordered_json::array();
  for (const auto& c : coeffs_) coeffs.push_back(c.to_string());
  j["coeffs"] = coeffs;
  return j.dump();
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  if (a.vars() != b.vars()) throw std::invalid_argument("series over different variables");
  const int n = std::min(a.order(), b.order());
  PowerSeries out(a.vars(), n);
  for (int i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::min(a.order(), b.order());
  PowerSeries out(a.vars(), n);
  for (int k = 0; k <= n; ++k) out[k] = a[k] + b[k];
  return out;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::min(a.order(), b.order());
  PowerSeries out(a.vars(), n);
  for (int k = 0; k <= n; ++k) out[k] = a[k] - b[k];
  return out;
}

PowerSeries geometric(const PowerSeries& x) {
  if (!x[0].is_zero()) throw std::invalid_argument("geometric series needs a zero constant term");
  const int n = x.order();
  PowerSeries s = PowerSeries::one(x.vars(), n);
  for (int j = 1; j <= n; ++j) {
    MultiPoly acc(x.vars());
    for (int i = 1; i <= j; ++i) {
      if (!x[i].is_zero() && !s[j - i].is_zero()) acc += x[i] * s[j - i];
    }
    s[j] = std::move(acc);
  }
  return s;
}

int fraction_depth(const FractionSpec& spec, int order) {
  if (order < 0) throw std::invalid_argument("negative series order");
  // Entering J-fraction level k costs t^{2(k-1)}.
  if (std::holds_alternative<JFraction>(spec)) return (order + 1) / 2 + 1;
  const auto& f = std::get<NestedFraction>(spec);
  int offset = 0;
  int depth = 0;
  for (int k = 1; offset <= order; ++k) {
    ++depth;
    const int d = nested_level(f, k).min_degree;
    if (d == 0) break;
    offset += d;
  }
  return depth;
}

PowerSeries jfraction_series(const FractionSpec& spec, int order, int extra_depth) {
  if (order < 0) throw std::invalid_argument("negative series order");
  if (extra_depth < 0) throw std::invalid_argument("negative extra depth");
  return std::visit([&](const auto& f) { return expand(f, order, extra_depth); }, spec);
}

const std::vector<SeriesPreset>& series_presets() {
  static const std::vector<SeriesPreset> presets = {
      {"motzkin", VarSet::Q, "Motzkin numbers: alpha_k = beta_k = 1"},
      {"I-abcd", VarSet::ABCD, "sum over paths of a^hor b^up c^sh_u d^sh_h"},
      {"I4321-fp-exc-crs-nes", VarSet::XYPQ, "4321-avoiding involutions by x^fp y^exc p^crs q^nes"},
      {"I3412-fp-exc-nes", VarSet::XYPQ, "3412-avoiding involutions by x^fp y^exc q^nes"},
      {"A", VarSet::Q, "4321-avoiding involutions by q^(crs+nes); coefficients M_n(q)"},
      {"S321-exc-crs", VarSet::YQ, "(321, 3-bar1-42)-avoiders by y^exc q^crs"},
      {"main12-lhs", VarSet::Q, "nested fraction with numerators t+t^2, q t^2, q t+q^2 t^2, q^3 t^2, ..."},
      {"main12-rhs", VarSet::Q, "J-fraction with alpha_k = beta_k = q^(k-1); coefficients H_{n,0}"},
      {"Mtilde-fe", VarSet::Q, "fixed point of M(t) = 1/(1 - (t+t^2)/(1 - q t^2 M(q t)))"},
  };
  return presets;
}

FractionSpec preset_fraction(std::string_view name) {
  if (name == "motzkin") {
    return JFraction{VarSet::Q, [](int) { return MultiPoly(VarSet::Q, 1); },
                     [](int) { return MultiPoly(VarSet::Q, 1); }};
  }
  if (name == "I-abcd") {
    return JFraction{VarSet::ABCD, [](int k) { return MultiPoly::monomial(VarSet::ABCD, {1, 0, 0, k - 1}); },
                     [](int k) { return MultiPoly::monomial(VarSet::ABCD, {0, 1, k - 1, 0}); }};
  }
  if (name == "I4321-fp-exc-crs-nes") {
    return JFraction{VarSet::XYPQ, [](int k) { return MultiPoly::monomial(VarSet::XYPQ, {1, 0, 0, k - 1}); },
                     [](int k) { return MultiPoly::monomial(VarSet::XYPQ, {0, 1, 2 * (k - 1), 0}); }};
  }
  if (name == "I3412-fp-exc-nes") {
    return JFraction{VarSet::XYPQ, [](int k) { return MultiPoly::monomial(VarSet::XYPQ, {1, 0, 0, k - 1}); },
                     [](int k) { return MultiPoly::monomial(VarSet::XYPQ, {0, 1, 0, 2 * (k - 1)}); }};
  }
  if (name == "A") {
    return JFraction{VarSet::Q, [](int k) { return q_pow(k - 1); }, [](int k) { return q_pow(2 * (k - 1)); }};
  }
  if (name == "S321-exc-crs") {
    return JFraction{VarSet::YQ, [](int k) { return MultiPoly::monomial(VarSet::YQ, {0, k - 1, 0, 0}); },
                     [](int k) { return MultiPoly::monomial(VarSet::YQ, {1, k - 1, 0, 0}); }};
  }
  if (name == "main12-rhs") {
    return JFraction{VarSet::Q, [](int k) { return q_pow(k - 1); }, [](int k) { return q_pow(k - 1); }};
  }
  if (name == "main12-lhs") {
    // c_1 = t + t^2, c_{2j} = q^{2j-1} t^2, c_{2j+1} = q^j t + q^{2j} t^2
    return NestedFraction{VarSet::Q,
                          [](int k) { return k % 2 == 1 ? q_pow(k / 2) : MultiPoly(VarSet::Q); },
                          [](int k) { return q_pow(k - 1); }};
  }
  throw std::invalid_argument("preset '" + std::string(name) + "' is not a continued fraction");
}

PowerSeries named_series(std::string_view name, int order) {
  if (order < 0) throw std::invalid_argument("negative series order");
  if (name == "Mtilde-fe") return mtilde_functional(order);
  for (const auto& p : series_presets()) {
    if (p.name == name) return jfraction_series(preset_fraction(name), order);
  }
  throw std::invalid_argument("unknown series preset '" + std::string(name) + "'");
}

}  // namespace motzkin
