#include <gtest/gtest.h>

#include "pathlab/verify.hpp"

using namespace pathlab;

TEST(Verify, EveryCheckPassesAtSmallSizes) {
  const auto ids = check_ids();
  EXPECT_EQ(ids.size(), 14u);
  for (const auto& id : ids) {
    const int max_n = std::min(default_max_n(id), 5);
    const auto reports = run_check(id, max_n, 2);
    EXPECT_FALSE(reports.empty()) << id;
    for (const auto& r : reports) {
      EXPECT_TRUE(r.pass) << id << " n=" << r.params["n"] << ": " << r.witness.value_or("");
      EXPECT_EQ(r.check_id, id);
      EXPECT_FALSE(r.witness.has_value());
    }
  }
}

TEST(Verify, ReportsOneEntryPerSize) {
  const auto reports = run_check("delta-bijection", 4);
  ASSERT_EQ(reports.size(), 3u);
  EXPECT_EQ(reports.front().params["n"], 2);
  EXPECT_EQ(run_check("euler", 3).size(), 3u);
}

TEST(Verify, UnknownIdThrows) {
  EXPECT_THROW(run_check("no-such-check", 3), Error);
  EXPECT_THROW(default_max_n("no-such-check"), Error);
}

TEST(Verify, JsonOmitsElapsedTime) {
  VerificationReport r{"euler", {{"n", 3}}, false, "example witness", 1.5};
  const nlohmann::json j = r;
  EXPECT_EQ(j.dump(), R"({"check_id":"euler","params":{"n":3},"status":"fail","witness":"example witness"})");
  r.pass = true;
  r.witness.reset();
  EXPECT_FALSE(nlohmann::json(r).contains("witness"));
}
