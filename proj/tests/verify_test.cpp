#include <gtest/gtest.h>

#include "ribbonkit/verify.hpp"

using namespace ribbonkit::verify;

TEST(Verify, CheckTable) {
  EXPECT_EQ(checks().size(), 10u);
  EXPECT_TRUE(is_suite("all"));
  EXPECT_TRUE(is_suite("braiding"));
  EXPECT_FALSE(is_suite("nope"));
}

TEST(Verify, BraidingSuiteRunsBothChecks) {
  std::vector<CheckRecord> records;
  EXPECT_TRUE(run_suite("braiding", 3, 3, Options{}, [&](const CheckRecord& r) { records.push_back(r); }));
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[0].check, "tl-braiding");
  EXPECT_EQ(records[1].check, "uq-braiding");
  auto j = records[0].to_json();
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["p"], 3);
  EXPECT_TRUE(j.contains("detail"));
  EXPECT_TRUE(j.contains("elapsed"));
}

TEST(Verify, FpdimDetail) {
  auto r = run_check("fpdim", 4, Options{});
  EXPECT_TRUE(r.pass);
  EXPECT_NE(r.detail.find("128"), std::string::npos);
}

TEST(Verify, UnknownCheckFails) {
  auto r = run_check("nope", 3, Options{});
  EXPECT_FALSE(r.pass);
}

TEST(Verify, LibraryErrorsBecomeFailures) {
  // p = 1 has no field context.
  auto r = run_check("fpdim", 1, Options{});
  EXPECT_FALSE(r.pass);
  EXPECT_NE(r.detail.find("error"), std::string::npos);
}
