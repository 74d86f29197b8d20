#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clifford3/invariants.hpp"

namespace clifford3 {

/// Which branch of the piecewise bound produced a value.
enum class BoundCase {
  Vanishing,        // d below s_1: no sections
  RiemannRoch,      // h^1 = 0, value is the Euler characteristic
  CliffordLine,     // line bundle in the special range
  Rank2Semistable,  // rank-2 Clifford-type bound in the window s1 <= d <= 4g-4-s1
  Rank3Balanced,    // s1/2 <= s2 <= 2 s1
  Rank3S2Dominant,  // s2 > 2 s1, d >= s2 - s1
  Rank3S1Dominant,  // s2 < s1/2, d <= 6g-6-(s1-s2)
  Rank3LowDegree,   // s2 > 2 s1, s1 <= d < s2 - s1
  Rank3HighDegree,  // s2 < s1/2, 6g-6-(s1-s2) < d <= 6g-6-s2
  QuotientBound,    // bound through a minimal rank-2 quotient F and s1(F)
  UnstableSemistableQuotient,
  UnstableUnstableQuotient,
  Slope,            // stable rank 3 of slope < 2
};

std::string_view case_name(BoundCase c);
std::optional<BoundCase> case_from_name(std::string_view name);

/// Names recorded in BoundResult::assumptions.
namespace assumption {
inline constexpr std::string_view kHyperellipticSharpening = "hyperelliptic-sharpening";
inline constexpr std::string_view kHyperellipticRank2 = "hyperelliptic-rank2";
inline constexpr std::string_view kKrawtchoukNonvanishing = "krawtchouk-nonvanishing";
inline constexpr std::string_view kKrawtchoukVanishing = "krawtchouk-vanishing";
inline constexpr std::string_view kQuotientS1 = "quotient-s1";
inline constexpr std::string_view kQuotientSemistable = "quotient-semistable";
inline constexpr std::string_view kQuotientUnstable = "quotient-unstable";
inline constexpr std::string_view kSerreDualReduction = "serre-dual-reduction";
inline constexpr std::string_view kStable = "stable";
}  // namespace assumption

struct BoundResult {
  std::int64_t value = 0;
  BoundCase case_label = BoundCase::Vanishing;
  /// Optional hypotheses the value depends on, e.g. "quotient-s1=2".
  std::vector<std::string> assumptions;
  /// True when value is h^0 itself rather than an upper bound.
  bool exact = false;

  bool has_assumption(std::string_view prefix) const;

  friend bool operator==(const BoundResult&, const BoundResult&) = default;
};

/// Rank-3 request. `s1F` is s_1 of a rank-2 quotient of minimal degree, when
/// the caller knows it.
struct Rank3Query {
  Curve curve;
  BundleInvariants inv;
  std::optional<std::int64_t> s1F;
  bool use_delta = false;
  bool use_hyperelliptic_sharpening = false;
};

/// Checks rank, congruences and, when s1F is given, its parity against
/// deg F = (2d + s1)/3 and, for semistable E, s1F >= (2 s2 - s1)/3.
void validate_query(const Rank3Query& q);

/// Smallest s1F compatible with the quotient inequality and parity:
/// ceil((2 s2 - s1)/3) adjusted up to deg F mod 2.
std::int64_t suggested_min_s1F(const BundleInvariants& inv);

BoundResult h0_line_bound(const Curve& curve, std::int64_t d);

BoundResult h0_rank2_bound(const Curve& curve, std::int64_t d, std::int64_t s1,
                           bool use_delta = false);

/// Semistable rank 3. Exact branches (vanishing, Riemann-Roch) are tried
/// first, then the low/high degree sub-ranges, then the general formula
/// [d/2 - max(2s2-s1, 2s1-s2)/6] + 3 with its optional -1 refinements.
BoundResult h0_rank3_semistable_bound(const Rank3Query& q);

/// Every semistable branch whose defining inequalities hold at (d, s1, s2),
/// evaluated independently of the dispatch order. Used to check totality.
std::vector<BoundCase> rank3_semistable_branches(const Curve& curve, std::int64_t d,
                                                 std::int64_t s1, std::int64_t s2);

/// [d/2 - s1F/2] + 3 through a minimal rank-2 quotient, under s1 <= 2 s2 and
/// max(s1, (3 s1F - s1)/2) <= d <= 6g-6 - (3 s1F + s1)/2.
BoundResult h0_quotient_bound(const Rank3Query& q);

/// Unstable rank 3 as h^0(L) + h^0(F) with L a maximal line subbundle and F
/// the quotient. When s1 >= 0 > s2 the bound is computed for E* (x) K, and
/// `q.s1F` then refers to the quotient of that dual bundle.
BoundResult h0_rank3_unstable_bound(const Rank3Query& q, bool quotient_semistable);

/// 3 + [(d-3)/g] for stable rank 3 with d < 6.
BoundResult slope_bound(std::int64_t g, std::int64_t d);

}  // namespace clifford3
