#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "pathlab/paths.hpp"

using namespace pathlab;
using namespace fixtures;

namespace {
ErrorKind kind_of(const std::string& text) {
  try {
    parse_path(text);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << text << " validated";
  return ErrorKind::ParseError;
}

DecoratedLabeledPath staircase_descending(int n) {
  std::string steps, labels;
  for (int i = 0; i < n; ++i) {
    steps += "NE";
    labels += (i ? "," : "") + std::to_string(n - i);
  }
  return parse_path(steps + ":" + labels + ":");
}
}  // namespace

TEST(Validate, AcceptsSampleThreeAndSmallest) {
  EXPECT_NO_THROW(parse_path(kSample3));
  EXPECT_NO_THROW(parse_path("NE:1:"));
  EXPECT_NO_THROW(parse_path("::"));
}

TEST(Validate, RejectsNonContractibleDecorations) {
  // Both the step string stated for the bad cut and the one obtained by
  // cutting the sample path after its second E step.
  EXPECT_EQ(kind_of("NEENNE:3,1,2:1"), ErrorKind::DecorationNotContractible);
  EXPECT_EQ(kind_of(kSample3Psi2), ErrorKind::DecorationNotContractible);
  EXPECT_EQ(kind_of("NENE:1,2:1,1"), ErrorKind::DecorationNotContractible);
}

TEST(Validate, RejectsMalformedPaths) {
  EXPECT_EQ(kind_of("NNE:1,2:"), ErrorKind::NotAPath);
  EXPECT_EQ(kind_of("EN:1:"), ErrorKind::NotAPath);
  EXPECT_EQ(kind_of("ENNE:1:"), ErrorKind::NotAPath);
  EXPECT_EQ(kind_of("NE:0:"), ErrorKind::NotAPath);
  EXPECT_EQ(kind_of("NNEE:2,1:"), ErrorKind::ColumnOrderViolation);
  EXPECT_EQ(kind_of("NNEE:1,1:"), ErrorKind::ColumnOrderViolation);
  EXPECT_EQ(kind_of("NXE:1:"), ErrorKind::ParseError);
  EXPECT_EQ(kind_of("NE:1"), ErrorKind::ParseError);
  EXPECT_EQ(kind_of("NE:a:"), ErrorKind::ParseError);
  EXPECT_EQ(kind_of("NE:1,:"), ErrorKind::ParseError);
}

TEST(Text, RoundTrips) {
  for (const char* t : {kSample1, kSample2, kSample3, kSample4a, kSample6, "NE:1:"}) EXPECT_EQ(to_text(parse_path(t)), t);
}

TEST(SampleOne, Statistics) {
  const auto p = parse_path(kSample1);
  EXPECT_EQ(area_word(p), (std::vector<int>{-1, -2, -1, 0, 0, 0, 0}));
  EXPECT_EQ(shift(p), 2);
  EXPECT_EQ(area(p), 10);
  EXPECT_EQ(contractible_valleys(p), (std::vector<int>{1, 2, 6, 7}));
  const std::vector<AttackPair> attacks{{1, 2, AttackKind::Secondary}, {5, 6, AttackKind::Primary}, {5, 7, AttackKind::Primary}};
  EXPECT_EQ(attack_pairs(p), attacks);
  EXPECT_EQ(dinv(p), 3);
  EXPECT_EQ(monomial(p), (std::map<int, int>{{1, 2}, {2, 3}, {3, 2}}));
  EXPECT_FALSE(is_dyck(p));
  EXPECT_FALSE(is_standard(p));
}

TEST(SampleTwo, Statistics) {
  const auto p = parse_path(kSample2);
  EXPECT_EQ(shift(p), 1);
  EXPECT_EQ(area(p), 6);
  EXPECT_FALSE(is_dyck(p));
  EXPECT_TRUE(is_standard(p));
}

TEST(Staircase, Statistics) {
  for (int n = 1; n <= 5; ++n) {
    const auto p = staircase_descending(n);
    EXPECT_EQ(area_word(p), std::vector<int>(static_cast<size_t>(n), 0));
    EXPECT_EQ(area(p), 0);
    EXPECT_TRUE(contractible_valleys(p).empty());
    EXPECT_TRUE(attack_pairs(p).empty());
    EXPECT_EQ(dinv(p), 0);
    EXPECT_TRUE(is_dyck(p));
  }
}

TEST(Valleys, FirstStepBelowDiagonal) {
  const auto p = parse_path("ENNE:1,2:");
  EXPECT_EQ(contractible_valleys(p), std::vector<int>{1});
}

TEST(Attacks, DecoratedStepsNeverAttack) {
  const auto p = parse_path("ENENNE:1,2,3:1,2");
  EXPECT_TRUE(attack_pairs(p).empty());
  EXPECT_EQ(dinv(p), 0);
}

TEST(Monomial, EmptyPath) { EXPECT_TRUE(monomial(parse_path("::")).empty()); }

TEST(SampleFour, CanonicalHasZeroDinv) { EXPECT_EQ(dinv(parse_path(kSample4b)), 0); }
