#include <gtest/gtest.h>

#include "mtp/error.hpp"
#include "mtp/io.hpp"
#include "mtp/verify.hpp"

using mtp::CheckStatus;

TEST(Verify, SmallSweepPasses) {
  mtp::VerifyOptions o;
  o.k_max = 3;
  o.a_max = 20;
  const auto r = mtp::run_verification(o);
  EXPECT_TRUE(r.passed()) << mtp::verify_report_text(r);
  EXPECT_GT(r.signatures, 0u);
  EXPECT_EQ(r.check("identities").examined, r.signatures);
  EXPECT_EQ(r.check("lemma1").status, CheckStatus::Pass);
  EXPECT_EQ(r.check("lemma-n1").status, CheckStatus::Pass);
  EXPECT_THROW((void)r.check("nope"), std::out_of_range);
}

TEST(Verify, TinyRangeIsVacuous) {
  mtp::VerifyOptions o;
  o.k_max = 2;
  o.a_max = 3;
  const auto r = mtp::run_verification(o);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.signatures, 0u);
  EXPECT_EQ(r.check("lemma-l3").status, CheckStatus::Vacuous);
  EXPECT_EQ(r.check("identities").status, CheckStatus::Vacuous);
  EXPECT_NE(mtp::verify_report_text(r).find("vacuous"), std::string::npos);
}

TEST(Verify, CorruptDeltaIsCaughtByLemma1) {
  mtp::VerifyOptions o;
  o.k_max = 2;
  o.a_max = 8;
  o.delta_hook = [](const mtp::Signature& s) { return mtp::delta(s) + mtp::ExactInt(4); };
  const auto r = mtp::run_verification(o);
  EXPECT_FALSE(r.passed());
  const auto& l1 = r.check("lemma1");
  EXPECT_EQ(l1.status, CheckStatus::Fail);
  EXPECT_NE(l1.first_violation.find("{a=4,[(1,4),(2,3)]}"), std::string::npos);
}

TEST(Verify, ExceedersAreReported) {
  mtp::VerifyOptions o;
  o.k_max = 3;
  o.a_max = 12;
  const auto r = mtp::run_verification(o);
  EXPECT_TRUE(r.passed());
  // {5,(1,1),(2,6)} for k=2 and {10,(1,1),(3,11)}, {11,(1,1),(3,8),(4,3)} for k=3
  EXPECT_EQ(r.exceeding.size(), 3u);
  EXPECT_EQ(r.check("theorem").examined, 3u);
}

TEST(Verify, BadOptions) {
  mtp::VerifyOptions o;
  o.k_min = 1;
  EXPECT_THROW((void)mtp::run_verification(o), mtp::Error);
  o.k_min = 3;
  o.k_max = 2;
  EXPECT_THROW((void)mtp::run_verification(o), mtp::Error);
}

TEST(SweepAuditor, RuleTuplesAndGrid) {
  mtp::SweepAuditor a;
  a.audit_lemma_sq_grid(20);
  a.audit_rule_tuples(2, 5, 12);
  const auto checks = a.finish({}, 1);
  for (const auto& c : checks) {
    if (c.id == "lemma-sq" || c.id == "mod-rules") {
      EXPECT_EQ(c.status, CheckStatus::Pass) << c.id << ": " << c.first_violation;
    }
  }
}

TEST(ConjecturedFamily, Shape) {
  EXPECT_EQ(mtp::conjectured_family(mtp::ExactInt(3)), mtp::make_signature(6, {{1, 4}, {2, 8}}));
}
