#include <gtest/gtest.h>

#include "motzkin/path.hpp"
#include "oracles.hpp"

using namespace motzkin;

namespace {

const MotzkinPath kSample = MotzkinPath::parse("uuhuudddudduuhdd");

std::size_t error_index(std::string_view text) {
  try {
    MotzkinPath::parse(text);
  } catch (const PathError& e) {
    return e.index();
  }
  return 0;
}

}  // namespace

TEST(Path, Parse) {
  EXPECT_EQ(kSample.size(), 16);
  EXPECT_TRUE(MotzkinPath::parse("").empty());
  EXPECT_EQ(MotzkinPath::parse("U H d").to_string(), "uhd");
  EXPECT_EQ(error_index("ud d"), 3u);
  EXPECT_EQ(error_index("uxd"), 2u);
  EXPECT_EQ(error_index("uuhd"), 4u);
  EXPECT_EQ(error_index("d"), 1u);
}

TEST(Path, Heights) {
  EXPECT_EQ(step_height(kSample, 7), 3);
  EXPECT_EQ(step_height(kSample, 14), 2);
  EXPECT_EQ(step_height(MotzkinPath::parse("h"), 1), 0);
  EXPECT_THROW(step_height(kSample, 0), std::out_of_range);
  EXPECT_THROW(step_height(kSample, 17), std::out_of_range);
}

TEST(Path, WorkedStatistics) {
  EXPECT_EQ(path_statistics(kSample), (PathStatRecord{2, 7, 7, 8, 4, 15, 27}));
  EXPECT_EQ(path_statistics(MotzkinPath::parse("hhh")), (PathStatRecord{3, 0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(path_statistics(MotzkinPath::parse("uhd")), (PathStatRecord{1, 1, 1, 0, 1, 1, 2}));
}

TEST(Path, EnumerationMatchesFilteredWords) {
  for (int n = 0; n <= 10; ++n) {
    const auto paths = enumerate_paths(n);
    const auto words = oracle::all_paths(n);  // odometer order u < h < d
    ASSERT_EQ(paths.size(), words.size());
    ASSERT_EQ(mpz_class(static_cast<unsigned long>(paths.size())), oracle::motzkin_closed_form(n));
    for (std::size_t k = 0; k < paths.size(); ++k) {
      ASSERT_EQ(paths[k].to_string(), words[k]);
      const auto got = path_statistics(paths[k]);
      const auto want = oracle::path_stats(words[k]);
      ASSERT_EQ(got, (PathStatRecord{want.hor, want.up, want.down, want.sh_u, want.sh_h, want.sh_d, want.area}))
          << words[k];
    }
  }
  std::vector<std::string> three;
  for (const auto& p : enumerate_paths(3)) three.push_back(p.to_string());
  EXPECT_EQ(three, (std::vector<std::string>{"uhd", "udh", "hud", "hhh"}));
  EXPECT_EQ(enumerate_paths(9).size(), 835u);
}

TEST(Matchings, WorkedExamples) {
  EXPECT_EQ(sequential_matching(kSample), (Matching{{1, 6}, {2, 7}, {4, 8}, {5, 10}, {9, 11}, {12, 15}, {13, 16}}));
  EXPECT_EQ(tunnel_matching(kSample), (Matching{{1, 11}, {2, 8}, {4, 7}, {5, 6}, {9, 10}, {12, 16}, {13, 15}}));
  EXPECT_EQ(sequential_matching(MotzkinPath::parse("uhd")), (Matching{{1, 3}}));
  EXPECT_EQ(tunnel_matching(MotzkinPath::parse("uhd")), (Matching{{1, 3}}));
  EXPECT_EQ(sequential_matching(MotzkinPath::parse("uudd")), (Matching{{1, 3}, {2, 4}}));
  EXPECT_EQ(tunnel_matching(MotzkinPath::parse("uudd")), (Matching{{1, 4}, {2, 3}}));
}

TEST(Matchings, TunnelClosesAtStartHeight) {
  for (int n = 0; n <= 9; ++n) {
    for (const auto& p : enumerate_paths(n)) {
      const auto h = p.heights();
      for (const auto& [u, d] : tunnel_matching(p)) {
        // First down step after u whose end height equals u's start height.
        int first = 0;
        for (int k = u + 1; k <= n && first == 0; ++k) {
          if (p[k] == Step::Down && h[static_cast<std::size_t>(k - 1)] - 1 == h[static_cast<std::size_t>(u - 1)]) first = k;
        }
        ASSERT_EQ(d, first) << p.to_string();
      }
    }
  }
}

TEST(Strips, WorkedExamples) {
  EXPECT_EQ(strip_decomposition(kSample).to_string(), "{(5,1),(6,3),(7,6),(9,8),(10,10),(14,12),(15,14)}");
  EXPECT_TRUE(strip_decomposition(MotzkinPath::parse("hh")).empty());
  EXPECT_EQ(strip_decomposition(MotzkinPath::parse("ud")).to_string(), "{(1,1)}");

  const HeadTailPairs sample(16, {{5, 1}, {6, 3}, {7, 6}, {9, 8}, {10, 10}, {14, 12}, {15, 14}});
  EXPECT_EQ(path_from_head_tail(sample), kSample);
  EXPECT_EQ(path_from_head_tail(HeadTailPairs(4, {})).to_string(), "hhhh");
  EXPECT_EQ(path_from_head_tail(HeadTailPairs(2, {{1, 1}})).to_string(), "ud");
}

TEST(Strips, RejectsPairSetsNotFromPaths) {
  EXPECT_THROW(path_from_head_tail(HeadTailPairs(4, {{1, 1}, {2, 2}})), std::invalid_argument);
  EXPECT_THROW(path_from_head_tail(HeadTailPairs(3, {{1, 1}, {2, 1}})), std::invalid_argument);
}

TEST(Strips, RoundTripAndPairCountEqualsUpSteps) {
  for (int n = 0; n <= 10; ++n) {
    for (const auto& p : enumerate_paths(n)) {
      const auto pairs = strip_decomposition(p);
      ASSERT_EQ(static_cast<int>(pairs.size()), path_statistics(p).up);
      ASSERT_EQ(path_from_head_tail(pairs), p) << p.to_string();
    }
  }
}
