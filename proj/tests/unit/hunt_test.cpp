#include <gtest/gtest.h>

#include "mtp/error.hpp"
#include "mtp/hunt.hpp"
#include "mtp/io.hpp"

using mtp::make_signature;
using mtp::VerdictTag;

TEST(Hunt, NoCandidatesForKTwo) {
  mtp::HuntOptions o;
  o.k = 2;
  o.a_max = 12;
  const auto r = mtp::run_hunt(o);
  EXPECT_GT(r.signatures, 0u);
  EXPECT_TRUE(r.candidates.empty());
  EXPECT_EQ(r.checksum, mtp::fnv1a64_hex(""));
  std::uint64_t total = 0;
  for (auto c : r.verdict_counts) total += c;
  EXPECT_EQ(total, r.signatures);
}

TEST(Hunt, DeltaRefutesTheA7Signature) {
  mtp::HuntOptions o;
  o.k = 2;
  o.a_min = 7;
  o.a_max = 7;
  const auto r = mtp::run_hunt(o);
  EXPECT_TRUE(r.candidates.empty());
  EXPECT_GE(r.count(VerdictTag::RefutedByDelta), 1u);
  EXPECT_EQ(mtp::assess(make_signature(7, {{1, 1}, {2, 4}, {4, 2}})).tag, VerdictTag::RefutedByDelta);
}

TEST(Hunt, KThreeCandidatesAreTheoremSurvivors) {
  mtp::HuntOptions o;
  o.k = 3;
  o.a_max = 12;
  const auto r = mtp::run_hunt(o);
  ASSERT_FALSE(r.candidates.empty());
  bool found = false;
  for (const auto& c : r.candidates) {
    EXPECT_TRUE(mtp::theorem_filter(c.sig));
    EXPECT_LT(c.delta.sign(), 0);
    EXPECT_EQ(c.sigma, mtp::sigma(c.sig));
    if (c.sig == make_signature(11, {{1, 1}, {3, 8}, {4, 3}})) found = true;
  }
  EXPECT_TRUE(found);
  EXPECT_EQ(r.checksum, mtp::run_hunt(o).checksum);
  EXPECT_EQ(r.checksum.size(), 16u);
}

TEST(Hunt, RejectsBadK) {
  mtp::HuntOptions o;
  o.k = 1;
  o.a_max = 5;
  EXPECT_THROW((void)mtp::run_hunt(o), mtp::Error);
}

TEST(Hunt, Fnv) {
  EXPECT_EQ(mtp::fnv1a64_hex(""), "cbf29ce484222325");
  EXPECT_EQ(mtp::fnv1a64_hex("a"), "af63dc4c8601ec8c");
}

TEST(Hunt, ReportJson) {
  mtp::HuntOptions o;
  o.k = 2;
  o.a_max = 6;
  const auto json = mtp::hunt_report_json(mtp::run_hunt(o));
  EXPECT_NE(json.find("\"candidates\": []"), std::string::npos);
  EXPECT_NE(json.find("\"target\": \"5/2\""), std::string::npos);
  EXPECT_NE(json.find("\"RefutedByDelta\""), std::string::npos);
}
