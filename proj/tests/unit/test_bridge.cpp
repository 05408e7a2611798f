#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pathlab/adr.hpp"
#include "pathlab/bridge.hpp"

using namespace pathlab;
using namespace fixtures;

namespace {
std::vector<bool> mask(const DecoratedPermutation& w) {
  std::vector<bool> m;
  for (int i = 1; i <= w.size(); ++i) m.push_back(w.decorated(i));
  return m;
}
}  // namespace

TEST(PathFromSdw, SampleFour) {
  const auto w = parse_permutation(kSample4Word);
  EXPECT_EQ(to_text(path_from_sdw(w, 2)), kSample4a);
  const auto at3 = path_from_sdw(w, 3);
  const auto fiber = oracle::paths_with_sdw(w.values(), mask(w), 3);
  ASSERT_EQ(fiber.size(), 1u);
  EXPECT_EQ(to_text(at3), oracle::text(fiber[0]));
  EXPECT_EQ(canonical_rep(at3), canonical_rep(path_from_sdw(w, 2)));
}

TEST(PathFromSdw, SmallestAndErrors) {
  EXPECT_EQ(to_text(path_from_sdw(parse_permutation("1"), 0)), "NE:1:");
  try {
    path_from_sdw(parse_permutation(kSample4Word), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ScheduleNotOne);
  }
  EXPECT_THROW(path_from_sdw(parse_permutation(kPerm9), 0), Error);
}

TEST(PathFromSdw, UniqueFiberMemberUpToFive) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& wit : all_adrs(n)) {
      std::optional<DecoratedLabeledPath> canon;
      for (int s : wit.valid_shifts) {
        const auto p = path_from_sdw(wit.word, s);
        const auto fiber = oracle::paths_with_sdw(wit.word.values(), mask(wit.word), s);
        ASSERT_EQ(fiber.size(), 1u) << to_text(wit.word) << " s=" << s;
        ASSERT_EQ(to_text(p), oracle::text(fiber[0]));
        ASSERT_EQ(diagonal_word(p), (ShiftedDiagonalWord{wit.word, s}));
        const auto c = canonical_rep(p);
        if (canon) {
          ASSERT_EQ(c, *canon) << to_text(wit.word);
        }
        canon = c;
      }
    }
}

TEST(Classes, SmallCases) {
  const auto one = classes(1, 0);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].size, 1);
  EXPECT_EQ(to_text(one[0].canonical), "NE:1:");

  const auto c32 = classes(3, 2);
  std::vector<int> areas;
  for (const auto& c : c32) areas.push_back(c.area);
  std::sort(areas.begin(), areas.end());
  EXPECT_EQ(areas, (std::vector<int>{0, 1, 2}));
}

TEST(Classes, CountMatchesAdrsUpToFive) {
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k < n; ++k) {
      EXPECT_EQ(classes(n, k).size(), enumerate_adrs(n, k).size()) << n << "," << k;
      EXPECT_TRUE(theorem_equivalence_check(n, k)) << n << "," << k;
    }
  EXPECT_TRUE(theorem_equivalence_check(6, 1, 2));
}
