#include <gtest/gtest.h>

#include "mtp/error.hpp"
#include "mtp/signature.hpp"

using mtp::ErrorCode;
using mtp::ExactInt;
using mtp::make_signature;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const mtp::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no mtp::Error thrown";
  return ErrorCode::ParseError;
}

}  // namespace

TEST(MakeSignature, SortsClasses) {
  const auto s = make_signature(4, {{2, 3}, {1, 4}});
  EXPECT_EQ(s.str(), "{a=4,[(1,4),(2,3)]}");
}

TEST(MakeSignature, CanonicalDivisionThenAreaCheck) {
  EXPECT_EQ(code_of([] { (void)make_signature(8, {{2, 8}, {4, 3}}); }), ErrorCode::AreaMismatch);
  // a consistent scaled signature canonicalizes cleanly
  EXPECT_EQ(make_signature(8, {{2, 4}, {4, 3}}), make_signature(4, {{1, 4}, {2, 3}}));
}

TEST(MakeSignature, LemmaTwoExample) {
  const auto s = make_signature(5, {{1, 17}, {2, 2}});
  EXPECT_EQ(s.str(), "{a=5,[(1,17),(2,2)]}");
}

TEST(MakeSignature, Errors) {
  EXPECT_EQ(code_of([] { (void)make_signature(4, {{1, 4}, {1, 3}}); }), ErrorCode::DuplicateSize);
  EXPECT_EQ(code_of([] { (void)make_signature(4, {{1, 5}, {2, 3}}); }), ErrorCode::AreaMismatch);
  EXPECT_EQ(code_of([] { (void)make_signature(5, {{2, 5}, {4, 1}}); }), ErrorCode::NonCanonicalizable);
  EXPECT_EQ(code_of([] { (void)make_signature(0, {{1, 1}}); }), ErrorCode::NonPositive);
  EXPECT_EQ(code_of([] { (void)make_signature(4, {{1, 0}, {2, 4}}); }), ErrorCode::NonPositive);
  EXPECT_EQ(code_of([] { (void)make_signature(4, {}); }), ErrorCode::NonPositive);
  EXPECT_EQ(code_of([] { (void)make_signature(1, {{1, 1}}); }), ErrorCode::DegenerateGrid);
  EXPECT_EQ(code_of([] { (void)make_signature(3, {{3, 1}}); }), ErrorCode::DegenerateGrid);
}

TEST(TileCount, Examples) {
  EXPECT_EQ(mtp::tile_count(make_signature(4, {{1, 4}, {2, 3}})), ExactInt(7));
  EXPECT_EQ(mtp::tile_count(make_signature(5, {{1, 17}, {2, 2}})), ExactInt(19));
  EXPECT_EQ(mtp::tile_count(make_signature(2, {{1, 4}})), ExactInt(4));
}

TEST(KOf, Examples) {
  EXPECT_EQ(mtp::k_of(make_signature(4, {{1, 4}, {2, 3}})), ExactInt(2));
  EXPECT_EQ(mtp::k_of(make_signature(5, {{1, 17}, {2, 2}})), ExactInt(4));
  EXPECT_FALSE(mtp::k_of(make_signature(3, {{1, 9}})).has_value());
  EXPECT_FALSE(mtp::k_of(make_signature(2, {{1, 4}})).has_value());  // 4 = 1 + 3, k = 1 excluded
}

TEST(Functionals, Sigma) {
  EXPECT_EQ(mtp::sigma(make_signature(4, {{1, 4}, {2, 3}})).str(), "5/2");
  EXPECT_EQ(mtp::sigma(make_signature(5, {{1, 17}, {2, 2}})).str(), "21/5");
  EXPECT_EQ(mtp::sigma(make_signature(2, {{1, 4}})).str(), "2/1");
}

TEST(Functionals, Gamma) {
  EXPECT_EQ(mtp::gamma(make_signature(4, {{1, 4}, {2, 3}})).str(), "3/4");
  EXPECT_EQ(mtp::gamma(make_signature(2, {{1, 4}})).str(), "0/1");
  EXPECT_EQ(mtp::gamma(make_signature(5, {{1, 17}, {2, 2}})).str(), "34/25");
}

TEST(Functionals, Delta) {
  EXPECT_EQ(mtp::delta(make_signature(4, {{1, 4}, {2, 3}})), ExactInt(-4));
  EXPECT_EQ(mtp::delta(make_signature(5, {{1, 17}, {2, 2}})), ExactInt(9));
  EXPECT_EQ(mtp::delta(make_signature(7, {{1, 1}, {2, 4}, {4, 2}})), ExactInt(5));
}

TEST(Conjecture, Target) {
  EXPECT_EQ(mtp::conjecture_target(ExactInt(2)).value.str(), "5/2");
  EXPECT_EQ(mtp::conjecture_target(ExactInt(4)).value.str(), "17/4");
  EXPECT_THROW((void)mtp::conjecture_target(ExactInt(1)), mtp::Error);
}

TEST(Conjecture, ExceedsIsStrict) {
  EXPECT_FALSE(mtp::exceeds_conjecture(make_signature(4, {{1, 4}, {2, 3}}), ExactInt(2)));
  EXPECT_TRUE(mtp::attains_conjecture(make_signature(4, {{1, 4}, {2, 3}}), ExactInt(2)));
  EXPECT_FALSE(mtp::exceeds_conjecture(make_signature(5, {{1, 17}, {2, 2}}), ExactInt(4)));
  EXPECT_TRUE(mtp::exceeds_conjecture(make_signature(5, {{1, 1}, {2, 6}}), ExactInt(2)));  // 13/5 > 5/2
  EXPECT_EQ(code_of([] { (void)mtp::exceeds_conjecture(make_signature(3, {{1, 5}, {2, 1}}), ExactInt(2)); }),
            ErrorCode::KMismatch);
}

TEST(Conjecture, Lemma1Implication) {
  EXPECT_TRUE(mtp::lemma1_implication(make_signature(5, {{1, 17}, {2, 2}}), ExactInt(4)));
  EXPECT_TRUE(mtp::lemma1_implication(make_signature(4, {{1, 4}, {2, 3}}), ExactInt(2)));
  EXPECT_TRUE(mtp::lemma1_implication(make_signature(7, {{1, 1}, {2, 4}, {4, 2}}), ExactInt(2)));
  EXPECT_THROW((void)mtp::lemma1_implication(make_signature(4, {{1, 4}, {2, 3}}), ExactInt(3)), mtp::Error);
}
