#include <gtest/gtest.h>

#include <json.hpp>

#include "motzkin/path.hpp"
#include "motzkin/qmotzkin.hpp"
#include "motzkin/series.hpp"
#include "oracles.hpp"

using namespace motzkin;

namespace {

UniPoly up(std::vector<BigInt> c) { return UniPoly(std::move(c)); }

// q-tableau rows 0..4.
const std::vector<std::vector<std::string>> kTable1 = {
    {"1"},
    {"1", "1"},
    {"2", "1 + q", "q"},
    {"3 + q", "2 + 2*q + q^2", "q + q^2 + q^3", "q^3"},
    {"5 + 3*q + q^2", "3 + 4*q + 3*q^2 + 2*q^3", "2*q + 2*q^2 + 3*q^3 + q^4 + q^5", "q^3 + q^4 + q^5 + q^6", "q^6"},
};

}  // namespace

TEST(Motzkin, NumbersMatchClosedForm) {
  EXPECT_EQ(motzkin_number(0), 1);
  EXPECT_EQ(motzkin_number(9), 835);
  for (int n = 0; n <= 60; ++n) ASSERT_EQ(motzkin_number(n), oracle::motzkin_closed_form(n)) << n;
}

TEST(Motzkin, QPolynomialExamples) {
  EXPECT_EQ(q_motzkin(0), UniPoly(1));
  EXPECT_EQ(q_motzkin(3), up({3, 1}));
  EXPECT_EQ(q_motzkin(4), up({5, 2, 2}));
  EXPECT_EQ(q_motzkin_tilde(2), UniPoly(2));
  EXPECT_EQ(q_motzkin_tilde(3), up({3, 1}));
  EXPECT_EQ(q_motzkin_tilde(4), up({5, 3, 1}));
  for (int n = 0; n <= 30; ++n) {
    ASSERT_EQ(q_motzkin(n).evaluate(1), oracle::motzkin_closed_form(n));
    ASSERT_EQ(q_motzkin_tilde(n).evaluate(1), oracle::motzkin_closed_form(n));
  }
}

// M_n(q) as a path sum: each path contributes q^(2 sh_u + sh_h), the image of
// crs + nes under the sequential matching.
TEST(Motzkin, QPolynomialEqualsPathSum) {
  for (int n = 0; n <= 11; ++n) {
    std::vector<BigInt> c;
    for (const auto& w : oracle::all_paths(n)) {
      const auto s = oracle::path_stats(w);
      const auto e = static_cast<std::size_t>(2 * s.sh_u + s.sh_h);
      if (c.size() <= e) c.resize(e + 1);
      c[e] += 1;
    }
    ASSERT_EQ(q_motzkin(n), UniPoly(c)) << n;
  }
}

TEST(Tableau, FirstFiveRows) {
  const auto h = h_tableau(4);
  for (int n = 0; n <= 4; ++n) {
    for (int i = 0; i <= n; ++i) {
      EXPECT_EQ(h.at(n, i).to_string(), kTable1[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)]) << n << "," << i;
    }
  }
  EXPECT_TRUE(h.at(2, 3).is_zero());
  EXPECT_TRUE(h.at(5, 0).is_zero());
  EXPECT_EQ(h_tableau(0).at(0, 0), UniPoly(1));
}

TEST(Tableau, AllOnesColumnIsMotzkin) {
  const auto t = stieltjes_tableau([](int) { return UniPoly(1); }, [](int) { return UniPoly(1); }, 15);
  for (int n = 0; n <= 15; ++n) ASSERT_EQ(t.at(n, 0), UniPoly(oracle::motzkin_closed_form(n)));
}

TEST(Tableau, RecursionExamples) {
  const auto h = h_tableau(8);
  EXPECT_EQ(h_recursion_rhs(2, 1, h), up({1, 1}));
  EXPECT_EQ(h_recursion_rhs(4, 2, h).to_string(), "2*q + 2*q^2 + 3*q^3 + q^4 + q^5");
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(h_recursion_rhs(n, n, h), h.at(n - 1, n - 1).shifted(n - 1));
    for (int i = 1; i <= n; ++i) EXPECT_EQ(h_recursion_rhs(n, i, h), h.at(n, i));
  }
  EXPECT_THROW(h_recursion_rhs(3, 0, h), std::out_of_range);
  EXPECT_THROW(h_recursion_rhs(3, 4, h), std::out_of_range);
  EXPECT_THROW(h_recursion_rhs(9, 1, h), std::out_of_range);
}

TEST(Series, JFractionExamples) {
  const JFraction ones{VarSet::Q, [](int) { return MultiPoly(VarSet::Q, 1); }, [](int) { return MultiPoly(VarSet::Q, 1); }};
  const auto m = jfraction_series(ones, 5);
  std::vector<std::string> got;
  for (int k = 0; k <= 5; ++k) got.push_back(m[k].to_string());
  EXPECT_EQ(got, (std::vector<std::string>{"1", "1", "2", "4", "9", "21"}));
  EXPECT_EQ(jfraction_series(ones, 0).order(), 0);
  EXPECT_EQ(jfraction_series(ones, 0)[0].to_string(), "1");
  EXPECT_EQ(fraction_depth(ones, 5), 4);

  const auto a = named_series("A", 3);
  EXPECT_EQ(a[3].to_string(), "3 + q");
}

TEST(Series, PresetExamples) {
  const auto i = named_series("I-abcd", 2);
  EXPECT_EQ(i[0].to_string(), "1");
  EXPECT_EQ(i[1].to_string(), "a");
  EXPECT_EQ(i[2].to_string(), "b + a^2");
  EXPECT_EQ(named_series("S321-exc-crs", 3)[3].substitute("y", 1).to_uni("q"), up({3, 1}));
  EXPECT_EQ(named_series("main12-lhs", 3)[3].to_string(), "3 + q");
  EXPECT_EQ(named_series("main12-rhs", 3)[3].to_string(), "3 + q");
  EXPECT_EQ(named_series("Mtilde-fe", 4)[4].to_string(), "5 + 3*q + q^2");
  EXPECT_THROW(named_series("nope", 3), std::invalid_argument);
  EXPECT_THROW(preset_fraction("Mtilde-fe"), std::invalid_argument);
  for (const auto& p : series_presets()) {
    const auto s = named_series(p.name, 6);
    EXPECT_EQ(s.vars(), p.vars) << p.name;
    EXPECT_TRUE(s[0].is_one()) << p.name;
  }
}

TEST(Series, DeeperLevelsDoNotChangeCoefficients) {
  for (const auto& p : series_presets()) {
    if (p.name == "Mtilde-fe") continue;
    const auto spec = preset_fraction(p.name);
    for (int order : {0, 1, 2, 7, 12}) {
      ASSERT_EQ(jfraction_series(spec, order), jfraction_series(spec, order, 3)) << p.name << " " << order;
    }
  }
}

TEST(Series, ArithmeticAndJson) {
  const auto m = series_of(q_motzkin, 3);
  EXPECT_EQ(m.to_json(), R"({"order":3,"vars":["q"],"coeffs":["1","1","2","3 + q"]})");
  const auto j = nlohmann::json::parse(named_series("S321-exc-crs", 2).to_json());
  EXPECT_EQ(j["vars"], nlohmann::json::array({"y", "q"}));
  const auto g = geometric(series_of([](int k) { return UniPoly(k == 1 ? 1 : 0); }, 6));
  for (int k = 0; k <= 6; ++k) EXPECT_TRUE(g[k].is_one());
  EXPECT_THROW(geometric(PowerSeries::one(VarSet::Q, 3)), std::invalid_argument);
  EXPECT_EQ((m * m).order(), 3);
  EXPECT_EQ((m - m)[3].to_string(), "0");
}
