#include <gtest/gtest.h>

#include "clifford3/serialize.hpp"

using namespace clifford3;
using nlohmann::json;

TEST(Serialize, BoundResultRoundTrip) {
  const auto r = h0_rank3_semistable_bound({Curve(3), BundleInvariants::rank3(10, 1, 2), 1, true});
  const json j = r;
  EXPECT_EQ(j.at("case"), "RANK3_BALANCED");
  EXPECT_EQ(j.at("value"), 6);
  const auto back = json::parse(j.dump()).get<BoundResult>();
  EXPECT_EQ(back, r);
}

TEST(Serialize, EveryCaseRoundTrips) {
  for (std::int64_t d = -3; d <= 20; d += 3) {
    const auto r = h0_rank3_semistable_bound({Curve(3), BundleInvariants::rank3(d, 0, 0), std::nullopt});
    EXPECT_EQ(json(r).get<BoundResult>(), r);
  }
  const auto slope = slope_bound(2, 5);
  EXPECT_EQ(json(slope).get<BoundResult>(), slope);
}

TEST(Serialize, UnknownCaseRejected) {
  json j{{"value", 1}, {"case", "BOGUS"}, {"exact", false}, {"assumptions", json::array()}};
  EXPECT_THROW(j.get<BoundResult>(), Error);
}

TEST(Serialize, InvariantsRoundTrip) {
  const auto inv = BundleInvariants::rank3(5, 2, 1);
  EXPECT_EQ(json(inv).get<BundleInvariants>(), inv);
  EXPECT_EQ(json(BundleInvariants::line(4)).get<BundleInvariants>(), BundleInvariants::line(4));
}

TEST(Serialize, ElmState) {
  const auto st = generic_sequence(seed_split_state(Curve(3), 3), 2);
  const json j = st;
  EXPECT_EQ(j.at("step"), 2);
  EXPECT_EQ(j.at("s"), json({2, 4}));
  EXPECT_EQ(j.at("certified"), json({true, false}));
  EXPECT_TRUE(j.at("sb_dim_upper").is_array());
}

TEST(Serialize, ExampleReport) {
  const json j = family_c(2, FamilyCVariant::E2, 0);
  EXPECT_EQ(j.at("family"), "c");
  EXPECT_EQ(j.at("variant"), "E2");
  EXPECT_EQ(j.at("attainable_h0"), 4);
  EXPECT_EQ(j.at("slope_bound").at("value"), 4);
  EXPECT_TRUE(j.at("quotient_s1").is_null());
  const json a = family_a(5, 0, 2);
  EXPECT_EQ(a.at("params").at("k"), 2);
  EXPECT_EQ(a.at("quotient_s1"), 2);
}

TEST(Serialize, ErrorJson) {
  const Error e(ErrorCode::CongruenceViolation, "bad", 2);
  const json j = error_json(e);
  EXPECT_EQ(j.at("code"), "CongruenceViolation");
  EXPECT_EQ(j.at("detail"), 2);
  EXPECT_FALSE(error_json(Error(ErrorCode::InvalidQuery, "x")).contains("detail"));
}
