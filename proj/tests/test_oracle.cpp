#include <gtest/gtest.h>

#include <json.hpp>

#include "motzkin/oracle.hpp"
#include "motzkin/qmotzkin.hpp"
#include "oracles.hpp"

using namespace motzkin;

namespace {

// Exponent -> count, read back from a (q) polynomial.
oracle::Dist as_dist(const MultiPoly& p) {
  oracle::Dist d;
  for (const auto& t : p.terms()) d[MultiPoly::unpack(t.key)[0]] = t.coeff.get_si();
  return d;
}

}  // namespace

TEST(Distribution, Examples) {
  EXPECT_EQ(distribution(ClassId::I4321, 3, StatSpec::CrsPlusNes).to_string(), "3 + q");
  EXPECT_EQ(distribution(ClassId::S321Barred3142, 3, StatSpec::Crs).to_string(), "3 + q");
  for (auto spec : {StatSpec::Crs, StatSpec::Nes, StatSpec::CrsPlusNes, StatSpec::JointFpExcCrsNes, StatSpec::JointExcCrs}) {
    EXPECT_TRUE(distribution(ClassId::All, 0, spec).is_one());
    EXPECT_EQ(distribution(ClassId::All, 2, spec).vars(), stat_vars(spec));
  }
}

TEST(Distribution, MatchesSubsetScanOracle) {
  for (int n = 0; n <= 7; ++n) {
    const auto crs_nes = [](const oracle::Word& w) { const auto s = oracle::stats(w); return s.crs + s.nes; };
    const auto nes = [](const oracle::Word& w) { return oracle::stats(w).nes; };
    const auto crs = [](const oracle::Word& w) { return oracle::stats(w).crs; };
    ASSERT_EQ(as_dist(distribution(ClassId::I4321, n, StatSpec::CrsPlusNes)), oracle::scan_distribution(n, oracle::in_i4321, crs_nes));
    ASSERT_EQ(as_dist(distribution(ClassId::I3412, n, StatSpec::Nes)), oracle::scan_distribution(n, oracle::in_i3412, nes));
    ASSERT_EQ(as_dist(distribution(ClassId::S321Barred3142, n, StatSpec::Crs)), oracle::scan_distribution(n, oracle::in_s321, crs));
    ASSERT_EQ(as_dist(distribution(ClassId::All, n, StatSpec::Crs)), oracle::scan_distribution(n, [](const oracle::Word&) { return true; }, crs));
  }
}

TEST(Distribution, QMotzkinIdentitiesSmall) {
  for (int n = 0; n <= 8; ++n) {
    const auto m = MultiPoly::from_uni(VarSet::Q, "q", q_motzkin(n));
    EXPECT_EQ(distribution(ClassId::I4321, n, StatSpec::CrsPlusNes), m);
    EXPECT_EQ(distribution(ClassId::I3412, n, StatSpec::Nes), m);
    EXPECT_EQ(distribution(ClassId::S321Barred3142, n, StatSpec::Crs), MultiPoly::from_uni(VarSet::Q, "q", q_motzkin_tilde(n)));
  }
}

TEST(Distribution, SizeGuard) {
  EXPECT_THROW(distribution(ClassId::All, 6, StatSpec::Crs, 5), SizeGuardError);
  EXPECT_THROW(distribution(ClassId::S321Barred3142, 13, StatSpec::Crs), SizeGuardError);
  EXPECT_NO_THROW(distribution(ClassId::I4321, 6, StatSpec::Crs, 5));
  EXPECT_THROW(distribution(ClassId::I4321, -1, StatSpec::Crs), std::invalid_argument);
}

TEST(StatSpec, Parsing) {
  for (auto spec : {StatSpec::Crs, StatSpec::Nes, StatSpec::CrsPlusNes, StatSpec::JointFpExcCrsNes, StatSpec::JointExcCrs}) {
    EXPECT_EQ(parse_stat(stat_name(spec)), spec);
  }
  EXPECT_EQ(parse_stat("CRS_PLUS_NES"), StatSpec::CrsPlusNes);
  EXPECT_EQ(parse_stat("JOINT_EXC_CRS"), StatSpec::JointExcCrs);
  EXPECT_THROW(parse_stat("des"), std::invalid_argument);
}

TEST(Suite, DistributionsPassAtEight) {
  const auto r = run_suite("distributions", 8);
  EXPECT_TRUE(r.all_passed());
  for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << c.name << ": " << c.counterexample.value_or("");
}

TEST(Suite, PathsAtZeroAreVacuous) {
  const auto r = run_suite("paths", 0);
  EXPECT_TRUE(r.all_passed());
  for (const auto& c : r.checks) EXPECT_EQ(c.range, "n≤0");
}

TEST(Suite, AllAtSixHasNamedChecksSortedAndPassing) {
  const auto r = run_suite("all", 6);
  EXPECT_GE(r.checks.size(), 10u);
  EXPECT_TRUE(r.all_passed());
  EXPECT_TRUE(std::is_sorted(r.checks.begin(), r.checks.end(), [](const auto& a, const auto& b) { return a.name < b.name; }));
  for (const auto& c : r.checks) EXPECT_EQ(c.pass, !c.counterexample.has_value());

  const auto j = nlohmann::json::parse(r.to_json());
  EXPECT_EQ(j["suite"], "all");
  EXPECT_EQ(j["max_n"], 6);
  EXPECT_EQ(j["checks"].size(), r.checks.size());
  EXPECT_TRUE(j["checks"][0].contains("range"));
  EXPECT_TRUE(j.contains("elapsed_ms"));
}

TEST(Suite, UnknownSuite) {
  EXPECT_THROW(run_suite("proofs", 3), std::invalid_argument);
  EXPECT_EQ(suite_names().back(), "all");
}
