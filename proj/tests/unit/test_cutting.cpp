#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "pathlab/cutting.hpp"
#include "pathlab/enumeration.hpp"

using namespace pathlab;
using namespace fixtures;

namespace {
std::vector<DecoratedLabeledPath> sched_one_seeds(int max_n) {
  std::vector<DecoratedLabeledPath> out;
  for (int n = 1; n <= max_n; ++n)
    for (int k = 0; k < n; ++k)
      for_each_path({n, k, PathKind::Square}, [&](const DecoratedLabeledPath& p) {
        if (all_ones(sched(p))) out.push_back(p);
      });
  return out;
}
}  // namespace

TEST(Psi, SampleThree) {
  const auto p = parse_path(kSample3);
  ASSERT_TRUE(psi(p, 1));
  EXPECT_EQ(to_text(*psi(p, 1)), kSample3Psi1);
  EXPECT_FALSE(psi(p, 2));
  EXPECT_EQ(*psi(p, 3), p);
  EXPECT_THROW(psi(p, 0), Error);
  EXPECT_THROW(psi(p, 4), Error);
}

TEST(Psi, SampleFourImages) {
  const auto p = parse_path(kSample4a);
  const std::vector<std::pair<int, const char*>> images{
      {2, kSample4b}, {4, kSample4c}, {5, kSample4d}, {6, kSample4e}, {7, kSample4f}, {8, kSample4a}};
  for (const auto& [i, want] : images) {
    ASSERT_TRUE(psi(p, i)) << i;
    EXPECT_EQ(to_text(*psi(p, i)), want) << i;
  }
  EXPECT_FALSE(psi(p, 1));
  EXPECT_FALSE(psi(p, 3));
}

TEST(CuttingCycle, SampleThreeAndFour) {
  const auto c3 = cutting_cycle(parse_path(kSample3));
  EXPECT_EQ(c3.members.size(), 2u);
  const auto c4 = cutting_cycle(parse_path(kSample4a));
  std::vector<DecoratedLabeledPath> want;
  for (const char* t : {kSample4a, kSample4b, kSample4c, kSample4d, kSample4e, kSample4f}) want.push_back(parse_path(t));
  std::sort(want.begin(), want.end());
  EXPECT_EQ(c4.members, want);
  EXPECT_EQ(to_text(c4.canonical), kSample4b);
}

TEST(CuttingCycle, UndecoratedStaircase) {
  EXPECT_EQ(cutting_cycle(parse_path("NENENENE:4,3,2,1:")).members.size(), 4u);
}

TEST(BreakingStep, Examples) {
  EXPECT_EQ(breaking_step(parse_path(kSample4a)), 2);
  const auto staircase = parse_path("NENENE:3,2,1:");
  EXPECT_EQ(breaking_step(staircase), 3);
  EXPECT_EQ(canonical_rep(staircase), staircase);
  // (c) has a decorated step leftmost on its bottom diagonal.
  const auto c = parse_path(kSample4c);
  EXPECT_EQ(to_text(canonical_rep(c)), kSample4b);
}

TEST(CanonicalRep, IdempotentWithZeroDinv) {
  for (const auto& p : sched_one_seeds(6)) {
    const auto c = canonical_rep(p);
    ASSERT_EQ(dinv(c), 0) << to_text(p);
    ASSERT_EQ(canonical_rep(c), c) << to_text(p);
  }
}

TEST(OrderedCycle, SampleFourLadder) {
  const auto q = ordered_cycle(parse_path(kSample4a));
  const std::vector<const char*> want{kSample4b, kSample4c, kSample4a, kSample4f, kSample4e, kSample4d};
  ASSERT_EQ(q.size(), want.size());
  for (size_t i = 0; i < q.size(); ++i) {
    EXPECT_EQ(to_text(q[i]), want[i]);
    EXPECT_EQ(dinv(q[i]), static_cast<int>(i));
  }
}

TEST(OrderedCycle, SmallCases) {
  const auto q3 = ordered_cycle(parse_path(kSample3));
  ASSERT_EQ(q3.size(), 2u);
  EXPECT_EQ(dinv(q3[0]), 0);
  EXPECT_EQ(dinv(q3[1]), 1);
  // n - k = 1.
  const auto single = parse_path("ENNE:1,2:1");
  EXPECT_EQ(ordered_cycle(single), std::vector<DecoratedLabeledPath>{single});
}

TEST(OrderedCycle, LadderViolationOutsideScheduleOne) {
  // Undecorated staircase 1,2,3: every member has dinv 3.
  try {
    ordered_cycle(parse_path("NENENE:1,2,3:"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::LadderViolation);
  }
}

TEST(HorizontalOrder, SampleFive) {
  EXPECT_EQ(horizontal_step_order(parse_path(kSample4b)), (std::vector<int>{8, 2, 6, 5, 4, 3}));
}

TEST(HorizontalOrder, SampleSeven) {
  EXPECT_EQ(horizontal_step_order(parse_path(kSample7)),
            (std::vector<int>{21, 3, 19, 4, 18, 17, 15, 5, 14, 6, 13, 11, 9}));
}

TEST(HorizontalOrder, AgreesWithDinvLadder) {
  for (const auto& p : sched_one_seeds(6)) {
    const auto c = canonical_rep(p);
    const auto order = horizontal_step_order(c);
    const auto ladder = ordered_cycle(p);
    ASSERT_EQ(order.size(), ladder.size());
    for (size_t i = 0; i < order.size(); ++i) {
      const auto q = psi(c, order[i]);
      ASSERT_TRUE(q);
      ASSERT_EQ(*q, ladder[i]) << to_text(p) << " position " << i;
    }
  }
}

TEST(Shape, SampleSix) {
  const auto p = parse_path(kSample6);
  ASSERT_TRUE(all_ones(sched(p)));
  const auto s = shape_stretches(p);
  EXPECT_EQ(s.first, (pathlab::Run{0, 11}));
  EXPECT_EQ(s.second, (pathlab::Run{11, 31}));
  EXPECT_EQ(s.third, (pathlab::Run{31, 48}));
}

TEST(Shape, UndecoratedHasEmptyOuterStretches) {
  const auto p = parse_path("NENENE:3,2,1:");
  const auto s = shape_stretches(p);
  EXPECT_EQ(s.first.length(), 0);
  EXPECT_EQ(s.third.length(), 0);
}

TEST(Shape, DoubleEastInsideSecondStretch) {
  EXPECT_THROW(shape_stretches(parse_path("NEENNE:1,2,3:")), Error);
}

TEST(Shape, HoldsForScheduleOneAndCanonical) {
  for (const auto& p : sched_one_seeds(6)) {
    ASSERT_NO_THROW(shape_stretches(p)) << to_text(p);
    ASSERT_TRUE(has_canonical_shape(canonical_rep(p))) << to_text(p);
  }
  EXPECT_TRUE(has_canonical_shape(parse_path(kSample4b)));
  EXPECT_FALSE(has_canonical_shape(parse_path(kSample4a)));
}

TEST(SchedOneMembers, SampleFour) {
  const auto cycle = cutting_cycle(parse_path(kSample4a));
  const auto ones = sched_one_members(cycle);
  // One member per valid shift of the word.
  EXPECT_EQ(ones.size(), 2u);
  for (const auto& m : cycle.members) {
    const bool in = std::find(ones.begin(), ones.end(), m) != ones.end();
    EXPECT_EQ(in, undecorated_on_zero_diagonal(m) == 1) << to_text(m);
  }
}

TEST(SchedOneMembers, Singleton) {
  const auto p = parse_path("ENNE:1,2:1");
  EXPECT_EQ(sched_one_members(cutting_cycle(p)), std::vector<DecoratedLabeledPath>{p});
}
