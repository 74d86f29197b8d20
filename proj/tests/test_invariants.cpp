#include <gtest/gtest.h>

#include "clifford3/arith.hpp"
#include "clifford3/invariants.hpp"

using namespace clifford3;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Curve, RejectsGenusBelowTwo) {
  EXPECT_EQ(code_of([] { Curve c(1); }), ErrorCode::InvalidCurve);
  EXPECT_EQ(Curve(4).canonical_degree(), 6);
}

TEST(HalfInt, FloorUsesFloorSemantics) {
  EXPECT_EQ(HalfInt::half_of(5).floor(), 2);
  EXPECT_EQ(HalfInt::half_of(-5).floor(), -3);
  EXPECT_EQ(HalfInt::half_of(-5).ceil(), -2);
  EXPECT_EQ((HalfInt::whole(3) - HalfInt::half_of(1)).floor(), 2);
  EXPECT_TRUE(HalfInt::half_of(-4).is_integral());
  EXPECT_EQ(floor_div(-7, 6), -2);
  EXPECT_EQ(floor(Rational(-1, 2)), -1);
}

TEST(Validate, AcceptsAndRejects) {
  EXPECT_NO_THROW(validate(BundleInvariants::rank3(5, 2, 1)));
  EXPECT_NO_THROW(validate(BundleInvariants::line(7)));
  try {
    validate(BundleInvariants::rank3(5, 1, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CongruenceViolation);
    EXPECT_EQ(e.detail(), 1);
  }
  try {
    validate(BundleInvariants::rank3(5, 2, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.detail(), 2);
  }
  EXPECT_EQ(code_of([] { validate(BundleInvariants{4, 0, {0, 0, 0}}); }), ErrorCode::RankUnsupported);
  EXPECT_EQ(code_of([] { validate(BundleInvariants{3, 0, {0}}); }), ErrorCode::InvalidArgument);
}

TEST(Validate, StabilityPredicates) {
  EXPECT_TRUE(BundleInvariants::rank3(3, 0, 0).semistable());
  EXPECT_FALSE(BundleInvariants::rank3(3, 0, 0).stable());
  EXPECT_TRUE(BundleInvariants::rank3(5, 2, 1).stable());
  EXPECT_FALSE(BundleInvariants::rank3(6, -3, 0).semistable());
  EXPECT_EQ(BundleInvariants::rank3(6, -3, 0).max_subbundle_degree(1), 3);
}

TEST(SerreDual, Examples) {
  EXPECT_EQ(serre_dual(Curve(3), BundleInvariants::rank3(10, 1, 2)), BundleInvariants::rank3(2, 2, 1));
  EXPECT_EQ(serre_dual(Curve(2), BundleInvariants::rank3(6, 0, 0)), BundleInvariants::rank3(0, 0, 0));
  EXPECT_EQ(serre_dual(Curve(3), BundleInvariants::rank2(3, 1)), BundleInvariants::rank2(5, 1));
}

TEST(SerreDual, InvolutionPreservesCongruencesExhaustively) {
  for (std::int64_t g = 2; g <= 6; ++g) {
    const Curve c(g);
    for (std::int64_t d = -12; d <= 12; ++d) {
      for (std::int64_t s1 = -12; s1 <= 12; ++s1) {
        for (std::int64_t s2 = -12; s2 <= 12; ++s2) {
          const auto inv = BundleInvariants::rank3(d, s1, s2);
          if (!congruent(s1, d, 3) || !congruent(s2, 2 * d, 3)) continue;
          const auto dual = serre_dual(c, inv);
          ASSERT_NO_THROW(validate(dual));
          ASSERT_EQ(serre_dual(c, dual), inv);
        }
        if (congruent(s1, d, 2)) {
          const auto inv2 = BundleInvariants::rank2(d, s1);
          ASSERT_NO_THROW(validate(serre_dual(c, inv2)));
          ASSERT_EQ(serre_dual(c, serre_dual(c, inv2)), inv2);
        }
      }
    }
  }
}

TEST(TwistByLine, Examples) {
  for (std::int64_t m = 0; m <= 6; m += 2) {
    for (std::int64_t k = 0; k <= 4; ++k) {
      EXPECT_EQ(twist_by_line(BundleInvariants::rank2(m, m), 2 * k),
                BundleInvariants::rank2(m + 4 * k, m));
    }
  }
  const auto e = BundleInvariants::rank3(4, 1, 2);
  EXPECT_EQ(twist_by_line(e, 0), e);
  for (std::int64_t k = 0; k <= 5; ++k) {
    EXPECT_EQ(twist_by_line(e, 2 * k), BundleInvariants::rank3(6 * k + 4, 1, 2));
  }
}

TEST(TwistByLine, LeavesStabilityDegrees) {
  const auto e = BundleInvariants::rank3(5, 2, 1);
  for (std::int64_t a = -10; a <= 10; ++a) {
    const auto t = twist_by_line(e, a);
    EXPECT_EQ(t.s, e.s);
    EXPECT_EQ(t.degree, 5 + 3 * a);
    EXPECT_NO_THROW(validate(t));
  }
}

TEST(HyperellipticPower, Values) {
  EXPECT_EQ(h0_hyperelliptic_power(Curve(5, true), 3, false), 4);
  EXPECT_EQ(h0_hyperelliptic_power(Curve(2, true), 0, true), 1);
  EXPECT_EQ(h0_hyperelliptic_power(Curve(3, true), 4, false), 6);
  EXPECT_EQ(h0_hyperelliptic_power(Curve(3, true), 2, false), 3);  // canonical: h0 = g
}

TEST(HyperellipticPower, Errors) {
  EXPECT_EQ(code_of([] { h0_hyperelliptic_power(Curve(3, true), 2, true); }),
            ErrorCode::OutOfModeledRange);
  EXPECT_EQ(code_of([] { h0_hyperelliptic_power(Curve(3, false), 1, false); }),
            ErrorCode::NotHyperelliptic);
  EXPECT_EQ(code_of([] { h0_hyperelliptic_power(Curve(3, true), -1, false); }),
            ErrorCode::InvalidArgument);
}

TEST(HyperellipticPower, MonotoneAndRiemannRochAboveGenus) {
  for (std::int64_t g = 2; g <= 9; ++g) {
    const Curve c(g, true);
    std::int64_t prev = 0;
    for (std::int64_t a = 0; a <= 3 * g; ++a) {
      const auto v = h0_hyperelliptic_power(c, a, false);
      EXPECT_GE(v, prev);
      if (a >= g) EXPECT_EQ(v, 2 * a + 1 - g);
      prev = v;
    }
  }
}
