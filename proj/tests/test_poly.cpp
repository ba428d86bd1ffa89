#include <gtest/gtest.h>

#include <random>

#include "motzkin/poly.hpp"
#include "oracles.hpp"

using namespace motzkin;

namespace {

BigInt eval(const MultiPoly& p, const std::array<long, 4>& at) {
  BigInt sum = 0;
  for (const auto& t : p.terms()) {
    BigInt v = t.coeff;
    const auto e = MultiPoly::unpack(t.key);
    for (int i = 0; i < 4; ++i) {
      BigInt pw;
      mpz_pow_ui(pw.get_mpz_t(), BigInt(at[static_cast<std::size_t>(i)]).get_mpz_t(), static_cast<unsigned long>(e[static_cast<std::size_t>(i)]));
      v *= pw;
    }
    sum += v;
  }
  return sum;
}

MultiPoly random_poly(std::mt19937& rng, VarSet vars) {
  std::uniform_int_distribution<int> exp(0, 4), coeff(-5, 5), count(0, 6);
  std::vector<MultiPoly::Term> terms;
  const int k = count(rng);
  for (int j = 0; j < k; ++j) {
    MultiPoly::Exponents e{};
    for (int i = 0; i < var_count(vars); ++i) e[static_cast<std::size_t>(i)] = exp(rng);
    terms.push_back({MultiPoly::pack(e), BigInt(coeff(rng))});
  }
  return MultiPoly::from_terms(vars, std::move(terms));
}

UniPoly random_uni(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(-1, 8), coeff(-9, 9);
  std::vector<BigInt> c(static_cast<std::size_t>(deg(rng) + 1));
  for (auto& x : c) x = coeff(rng);
  return UniPoly(std::move(c));
}

}  // namespace

TEST(UniPoly, CanonicalText) {
  EXPECT_EQ(UniPoly().to_string(), "0");
  EXPECT_EQ(UniPoly(std::vector<BigInt>{5, 3, 1}).to_string(), "5 + 3*q + q^2");
  EXPECT_EQ(UniPoly(std::vector<BigInt>{0, -1, 0, 2}).to_string(), "-q + 2*q^3");
  EXPECT_EQ(UniPoly(std::vector<BigInt>{1, -2}).to_string(), "1 - 2*q");
  EXPECT_EQ(UniPoly(std::vector<BigInt>{0, 0, 0}).degree(), -1);
  EXPECT_EQ(UniPoly::monomial(3).to_string("t"), "t^3");
}

TEST(UniPoly, RingLawsAtIntegerPoints) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = random_uni(rng), b = random_uni(rng), c = random_uni(rng);
    for (long q : {-3L, -1L, 0L, 2L, 5L}) {
      const BigInt x = q;
      ASSERT_EQ((a * b).evaluate(x), a.evaluate(x) * b.evaluate(x));
      ASSERT_EQ((a + b).evaluate(x), a.evaluate(x) + b.evaluate(x));
      ASSERT_EQ((a - b).evaluate(x), a.evaluate(x) - b.evaluate(x));
      ASSERT_EQ(a.shifted(3).evaluate(x), a.evaluate(x) * x * x * x);
    }
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a - a).degree(), -1);
  }
}

TEST(UniPoly, BigCoefficients) {
  UniPoly p(std::vector<BigInt>{1, 1});
  UniPoly acc(1);
  for (int i = 0; i < 100; ++i) acc *= p;
  EXPECT_EQ(acc.coeff(50), oracle::binomial(100, 50));
  EXPECT_EQ(acc.evaluate(1), BigInt("1267650600228229401496703205376"));
}

TEST(MultiPoly, CanonicalText) {
  const auto x = MultiPoly::variable(VarSet::XYPQ, "x");
  const auto y = MultiPoly::variable(VarSet::XYPQ, "y");
  const auto q = MultiPoly::variable(VarSet::XYPQ, "q");
  EXPECT_EQ((MultiPoly(VarSet::XYPQ, 2) * x * y * y * q * q * q).to_string(), "2*x*y^2*q^3");
  EXPECT_EQ((x + y + MultiPoly(VarSet::XYPQ, 1) + x * x + y * y).to_string(), "1 + x + y + x^2 + y^2");
  EXPECT_EQ((x * y + q * q).to_string(), "x*y + q^2");
  EXPECT_EQ(MultiPoly(VarSet::ABCD).to_string(), "0");
  EXPECT_EQ((MultiPoly(VarSet::YQ) - MultiPoly::variable(VarSet::YQ, "y")).to_string(), "-y");
  EXPECT_THROW(MultiPoly::variable(VarSet::YQ, "x"), std::invalid_argument);
}

TEST(MultiPoly, RingLawsAtIntegerPoints) {
  std::mt19937 rng(11);
  for (auto vars : {VarSet::Q, VarSet::YQ, VarSet::XYPQ, VarSet::ABCD}) {
    for (int trial = 0; trial < 300; ++trial) {
      const auto a = random_poly(rng, vars), b = random_poly(rng, vars), c = random_poly(rng, vars);
      for (const std::array<long, 4> pt : {std::array<long, 4>{1, 1, 1, 1}, {2, -1, 3, 0}, {-2, 5, 1, 2}}) {
        ASSERT_EQ(eval(a * b, pt), eval(a, pt) * eval(b, pt));
        ASSERT_EQ(eval(a + b, pt), eval(a, pt) + eval(b, pt));
        ASSERT_EQ(eval(a - b, pt), eval(a, pt) - eval(b, pt));
      }
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(a * b, b * a);
      ASSERT_TRUE((a - a).is_zero());
      for (const auto& t : (a * b).terms()) ASSERT_NE(t.coeff, 0);
    }
  }
}

TEST(MultiPoly, SubstituteAndProject) {
  const auto y = MultiPoly::variable(VarSet::YQ, "y");
  const auto q = MultiPoly::variable(VarSet::YQ, "q");
  const auto p = y * q + y * y + MultiPoly(VarSet::YQ, 3) * q;
  EXPECT_EQ(p.substitute("y", 1).to_uni("q"), UniPoly(std::vector<BigInt>{1, 4}));
  EXPECT_THROW(p.to_uni("q"), std::invalid_argument);
  const auto u = UniPoly(std::vector<BigInt>{5, 3, 1});
  EXPECT_EQ(MultiPoly::from_uni(VarSet::Q, "q", u).to_uni("q"), u);
  EXPECT_EQ(MultiPoly::from_uni(VarSet::Q, "q", u).to_string(), u.to_string());
}

TEST(MultiPoly, ExponentOverflowIsRejected) {
  const auto big = MultiPoly::variable(VarSet::Q, "q", 40000);
  EXPECT_THROW(big * big, std::overflow_error);
}
