#include "clifford3/bounds.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <utility>

#include "clifford3/arith.hpp"
#include "clifford3/krawtchouk.hpp"

namespace clifford3 {
namespace {

constexpr std::array<std::pair<BoundCase, std::string_view>, 13> kCaseNames{{
    {BoundCase::Vanishing, "VANISHING"},
    {BoundCase::RiemannRoch, "RIEMANN_ROCH"},
    {BoundCase::CliffordLine, "CLIFFORD_LINE"},
    {BoundCase::Rank2Semistable, "RANK2_SEMISTABLE"},
    {BoundCase::Rank3Balanced, "RANK3_BALANCED"},
    {BoundCase::Rank3S2Dominant, "RANK3_S2_DOMINANT"},
    {BoundCase::Rank3S1Dominant, "RANK3_S1_DOMINANT"},
    {BoundCase::Rank3LowDegree, "RANK3_LOW_DEGREE"},
    {BoundCase::Rank3HighDegree, "RANK3_HIGH_DEGREE"},
    {BoundCase::QuotientBound, "QUOTIENT_BOUND"},
    {BoundCase::UnstableSemistableQuotient, "UNSTABLE_SEMISTABLE_QUOTIENT"},
    {BoundCase::UnstableUnstableQuotient, "UNSTABLE_UNSTABLE_QUOTIENT"},
    {BoundCase::Slope, "SLOPE"},
}};

BoundResult make(std::int64_t value, BoundCase c, bool exact,
                 std::vector<std::string> assumptions = {}) {
  return BoundResult{std::max<std::int64_t>(value, 0), c, std::move(assumptions), exact};
}

std::string tagged(std::string_view name, std::int64_t v) {
  return std::string(name) + "=" + std::to_string(v);
}

std::string krawtchouk_tag(std::string_view name, const KrawtchoukQuery& q, const BigInt& v) {
  return std::string(name) + ":K_" + std::to_string(q.r) + "(" + std::to_string(q.n) + "," +
         std::to_string(q.N) + ")=" + v.str();
}

void require_rank3(const BundleInvariants& inv) {
  if (inv.rank != 3) {
    throw Error(ErrorCode::RankUnsupported,
                "rank-3 bound called with rank " + std::to_string(inv.rank));
  }
}

std::int64_t quotient_degree(const BundleInvariants& inv) {
  return (2 * inv.degree + inv.s_at(1)) / 3;
}

}  // namespace

std::string_view case_name(BoundCase c) {
  for (const auto& [k, name] : kCaseNames) {
    if (k == c) return name;
  }
  return "UNKNOWN";
}

std::optional<BoundCase> case_from_name(std::string_view name) {
  for (const auto& [k, n] : kCaseNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

bool BoundResult::has_assumption(std::string_view prefix) const {
  return std::any_of(assumptions.begin(), assumptions.end(),
                     [&](const std::string& a) { return a.starts_with(prefix); });
}

void validate_query(const Rank3Query& q) {
  validate(q.inv);
  require_rank3(q.inv);
  if (!q.s1F) return;
  const std::int64_t s1F = *q.s1F;
  const std::int64_t degF = quotient_degree(q.inv);
  if (!congruent(s1F, degF, 2)) {
    throw Error(ErrorCode::InvalidQuery, "s1(F) = " + std::to_string(s1F) +
                                             " must have the parity of deg F = " +
                                             std::to_string(degF));
  }
  if (q.inv.semistable() && 3 * s1F < 2 * q.inv.s_at(2) - q.inv.s_at(1)) {
    throw Error(ErrorCode::InvalidQuery,
                "s1(F) = " + std::to_string(s1F) + " is below (2 s2 - s1)/3 = " +
                    std::to_string(2 * q.inv.s_at(2) - q.inv.s_at(1)) + "/3");
  }
}

std::int64_t suggested_min_s1F(const BundleInvariants& inv) {
  validate(inv);
  require_rank3(inv);
  std::int64_t v = ceil_div(2 * inv.s_at(2) - inv.s_at(1), 3);
  if (!congruent(v, quotient_degree(inv), 2)) ++v;
  return v;
}

BoundResult h0_line_bound(const Curve& curve, std::int64_t d) {
  if (d < 0) return make(0, BoundCase::Vanishing, true);
  if (d > curve.canonical_degree()) return make(d + 1 - curve.genus(), BoundCase::RiemannRoch, true);
  return make(floor_div(d, 2) + 1, BoundCase::CliffordLine, false);
}

BoundResult h0_rank2_bound(const Curve& curve, std::int64_t d, std::int64_t s1, bool use_delta) {
  validate(BundleInvariants::rank2(d, s1));
  if (s1 < 0) {
    throw Error(ErrorCode::NotSemistable, "rank-2 bound needs s1 >= 0, got " + std::to_string(s1));
  }
  const std::int64_t g = curve.genus();
  if (d < s1) return make(0, BoundCase::Vanishing, true);
  if (d > 4 * g - 4 - s1) return make(d + 2 - 2 * g, BoundCase::RiemannRoch, true);

  const std::int64_t half = (d - s1) / 2;
  BoundResult result = make(half + 2, BoundCase::Rank2Semistable, false);
  if (curve.hyperelliptic() && s1 > 0) {
    result.value = half + 1;
    result.assumptions.emplace_back(assumption::kHyperellipticRank2);
  }
  if (use_delta) {
    const KrawtchoukQuery kq = rank2_delta_query(g, d, s1);
    const BigInt k = krawtchouk(kq);
    const std::int64_t delta = k == 0 ? 1 : 0;
    result.value = std::min(result.value, half + 1 + delta);
    result.assumptions.push_back(krawtchouk_tag(
        delta ? assumption::kKrawtchoukVanishing : assumption::kKrawtchoukNonvanishing, kq, k));
  }
  return result;
}

std::vector<BoundCase> rank3_semistable_branches(const Curve& curve, std::int64_t d,
                                                 std::int64_t s1, std::int64_t s2) {
  const std::int64_t top = 3 * curve.canonical_degree();
  std::vector<BoundCase> hits;
  if (d < s1) hits.push_back(BoundCase::Vanishing);
  if (d > top - s2) hits.push_back(BoundCase::RiemannRoch);
  if (s2 > 2 * s1 && s1 <= d && d < s2 - s1 && d <= top - s2) {
    hits.push_back(BoundCase::Rank3LowDegree);
  }
  if (2 * s2 < s1 && s1 <= d && top - (s1 - s2) < d && d <= top - s2) {
    hits.push_back(BoundCase::Rank3HighDegree);
  }
  if (s1 <= 2 * s2 && s2 <= 2 * s1 && s1 <= d && d <= top - s2) hits.push_back(BoundCase::Rank3Balanced);
  if (s2 > 2 * s1 && s2 - s1 <= d && d <= top - s2) hits.push_back(BoundCase::Rank3S2Dominant);
  if (2 * s2 < s1 && s1 <= d && d <= top - (s1 - s2)) hits.push_back(BoundCase::Rank3S1Dominant);
  return hits;
}

BoundResult h0_rank3_semistable_bound(const Rank3Query& q) {
  validate_query(q);
  if (!q.inv.semistable()) {
    throw Error(ErrorCode::NotSemistable, "semistable rank-3 bound needs s1, s2 >= 0");
  }
  const std::int64_t g = q.curve.genus();
  const std::int64_t top = 3 * q.curve.canonical_degree();
  const std::int64_t d = q.inv.degree;
  const std::int64_t s1 = q.inv.s_at(1);
  const std::int64_t s2 = q.inv.s_at(2);

  if (d < s1) return make(0, BoundCase::Vanishing, true);
  if (d > top - s2) return make(d + 3 - 3 * g, BoundCase::RiemannRoch, true);
  if (s2 > 2 * s1 && d < s2 - s1) {
    return make(floor_div(d - s1, 2) + 1, BoundCase::Rank3LowDegree, false);
  }
  if (2 * s2 < s1 && d > top - (s1 - s2)) {
    return make(floor_div(d - s2, 2) + 1, BoundCase::Rank3HighDegree, false);
  }

  BoundCase branch = BoundCase::Rank3Balanced;
  if (s2 > 2 * s1) branch = BoundCase::Rank3S2Dominant;
  if (2 * s2 < s1) branch = BoundCase::Rank3S1Dominant;
  const std::int64_t spread = std::max(2 * s2 - s1, 2 * s1 - s2);
  const std::int64_t base = floor(Rational(d, 2) - Rational(spread, 6)) + 3;

  BoundResult result = make(base, branch, false);
  if (q.use_hyperelliptic_sharpening && q.curve.hyperelliptic() && !(s1 == 0 && s2 == 0)) {
    result.value = base - 1;
    result.assumptions.emplace_back(assumption::kHyperellipticSharpening);
  }
  if (q.use_delta) {
    if (!q.s1F) {
      throw Error(ErrorCode::MissingS1F, "the Krawtchouk refinement needs s1(F)");
    }
    const KrawtchoukQuery kq = delta_query(g, d, s1, *q.s1F);
    const BigInt k = krawtchouk(kq);
    result.assumptions.push_back(tagged(assumption::kQuotientS1, *q.s1F));
    if (k != 0) {
      result.value = std::min(result.value, base - 1);
      result.assumptions.push_back(krawtchouk_tag(assumption::kKrawtchoukNonvanishing, kq, k));
    } else {
      result.assumptions.push_back(krawtchouk_tag(assumption::kKrawtchoukVanishing, kq, k));
    }
  }
  return result;
}

BoundResult h0_quotient_bound(const Rank3Query& q) {
  validate_query(q);
  if (!q.inv.semistable()) {
    throw Error(ErrorCode::NotSemistable, "quotient bound needs a semistable bundle");
  }
  if (!q.s1F) throw Error(ErrorCode::MissingS1F, "quotient bound needs s1(F)");
  const std::int64_t g = q.curve.genus();
  const std::int64_t top = 3 * q.curve.canonical_degree();
  const std::int64_t d = q.inv.degree;
  const std::int64_t s1 = q.inv.s_at(1);
  const std::int64_t s2 = q.inv.s_at(2);
  const std::int64_t s1F = *q.s1F;

  if (s1 > 2 * s2) {
    throw Error(ErrorCode::HypothesisFailed, "quotient bound needs s1 <= 2 s2");
  }
  // max(s1, 3/2 s1F - s1/2) <= d <= 6g-6 - 3/2 s1F - s1/2, doubled.
  if (d < s1 || 2 * d < 3 * s1F - s1 || 2 * d > 2 * top - 3 * s1F - s1) {
    throw Error(ErrorCode::HypothesisFailed,
                "degree " + std::to_string(d) + " is outside the quotient-bound window [max(" +
                    std::to_string(s1) + ", (3 s1F - s1)/2), 6g-6 - (3 s1F + s1)/2]");
  }

  const std::int64_t half = floor_div(d - s1F, 2);
  BoundResult result = make(half + 3, BoundCase::QuotientBound, false,
                            {tagged(assumption::kQuotientS1, s1F)});
  if (q.use_hyperelliptic_sharpening && q.curve.hyperelliptic() && s1F > 0) {
    result.value = half + 2;
    result.assumptions.emplace_back(assumption::kHyperellipticSharpening);
  }
  if (q.use_delta) {
    const KrawtchoukQuery kq = delta_query(g, d, s1, s1F);
    const BigInt k = krawtchouk(kq);
    const std::int64_t delta = k == 0 ? 1 : 0;
    result.value = std::min(result.value, half + 2 + delta);
    result.assumptions.push_back(krawtchouk_tag(
        delta ? assumption::kKrawtchoukVanishing : assumption::kKrawtchoukNonvanishing, kq, k));
  }
  return result;
}

namespace {

struct Piece {
  std::int64_t value;
  bool exact;
};

// h^0 of the maximal line subbundle L, deg L = (d - s1)/3.
Piece line_piece(std::int64_t g, std::int64_t top, std::int64_t d, std::int64_t s1) {
  if (d <= top + s1) return {floor_div(d - s1, 6) + 1, false};
  return {(d - s1) / 3 + 1 - g, true};
}

// Boundaries are compared doubled: 2d against 3 s1F -/+ s1.
Piece semistable_quotient_piece(std::int64_t g, std::int64_t top, std::int64_t d,
                                std::int64_t s1, std::int64_t s2, std::int64_t s1F) {
  if (2 * d < 3 * s1F - s1) return {0, true};
  if (2 * d <= 2 * top - 3 * s1F - s1) return {floor(Rational(d + s1 - s2, 3)) + 2, false};
  return {(2 * d + s1) / 3 + 2 - 2 * g, true};
}

Piece unstable_quotient_piece(std::int64_t g, std::int64_t top, std::int64_t d,
                              std::int64_t s1, std::int64_t s2, std::int64_t s1F) {
  const std::int64_t twice = 2 * d;
  if (twice < 3 * s1F - s1) return {0, true};
  const bool second = twice < -(3 * s1F + s1);
  const bool fourth = twice > 2 * top + 3 * s1F - s1 && twice <= 2 * top - 3 * s1F - s1;
  if (second && fourth) {
    // Quotient line bundle of negative degree next to a maximal line
    // subbundle of degree > 2g-2; neither displayed formula bounds h^0(F).
    throw Error(ErrorCode::RangeUncovered,
                "d = " + std::to_string(d) +
                    " lies in both the second and fourth quotient ranges (s1F < 1-g)");
  }
  if (second) return {floor(Rational(d + s1 - s2, 6)) + 1, false};
  if (twice <= 2 * top + 3 * s1F - s1) return {floor(Rational(2 * d + s1, 6)) + 2, false};
  if (fourth) return {floor(Rational(6 * d + 4 * s1 - 2 * s2, 12)) - g + 2, false};
  return {(2 * d + s1) / 3 + 2 - 2 * g, true};
}

BoundResult unstable_direct(const Rank3Query& q, bool quotient_semistable) {
  const std::int64_t g = q.curve.genus();
  const std::int64_t top = 3 * q.curve.canonical_degree();
  const std::int64_t d = q.inv.degree;
  const std::int64_t s1 = q.inv.s_at(1);
  const std::int64_t s2 = q.inv.s_at(2);
  const std::int64_t s1F = *q.s1F;

  if (quotient_semistable != (s1F >= 0)) {
    throw Error(ErrorCode::HypothesisFailed,
                "s1(F) = " + std::to_string(s1F) + " contradicts the quotient being " +
                    (quotient_semistable ? "semistable" : "unstable"));
  }
  if (3 * s1F < 2 * s2 - s1) {
    throw Error(ErrorCode::HypothesisFailed,
                "s1(F) = " + std::to_string(s1F) + " is below (2 s2 - s1)/3");
  }

  const BoundCase branch = quotient_semistable ? BoundCase::UnstableSemistableQuotient
                                               : BoundCase::UnstableUnstableQuotient;
  std::vector<std::string> assumptions{
      tagged(assumption::kQuotientS1, s1F),
      std::string(quotient_semistable ? assumption::kQuotientSemistable
                                      : assumption::kQuotientUnstable)};

  if (d < s1) return make(0, BoundCase::Vanishing, true);
  if (d > top - s2) return make(d + 3 - 3 * g, BoundCase::RiemannRoch, true);

  const Piece line = line_piece(g, top, d, s1);
  const Piece quotient = quotient_semistable
                             ? semistable_quotient_piece(g, top, d, s1, s2, s1F)
                             : unstable_quotient_piece(g, top, d, s1, s2, s1F);
  return make(std::max<std::int64_t>(line.value, 0) + std::max<std::int64_t>(quotient.value, 0),
              branch, line.exact && quotient.exact, std::move(assumptions));
}

}  // namespace

BoundResult h0_rank3_unstable_bound(const Rank3Query& q, bool quotient_semistable) {
  validate(q.inv);
  require_rank3(q.inv);
  const std::int64_t s1 = q.inv.s_at(1);
  const std::int64_t s2 = q.inv.s_at(2);
  if (s1 >= 0 && s2 >= 0) {
    throw Error(ErrorCode::NotUnstable, "unstable bound needs s1 < 0 or s2 < 0");
  }
  if (!q.s1F) throw Error(ErrorCode::MissingS1F, "unstable bound needs s1(F)");

  if (s1 < 0) {
    validate_query(q);
    return unstable_direct(q, quotient_semistable);
  }

  // s2 < 0 <= s1: bound h^0(E* (x) K), whose s1 is s2 < 0, and add chi(E).
  Rank3Query dual = q;
  dual.inv = serre_dual(q.curve, q.inv);
  validate_query(dual);
  BoundResult r = unstable_direct(dual, quotient_semistable);
  const std::int64_t chi = q.inv.degree + 3 - 3 * q.curve.genus();
  r.value = std::max<std::int64_t>(r.value + chi, 0);
  r.assumptions.emplace_back(assumption::kSerreDualReduction);
  return r;
}

BoundResult slope_bound(std::int64_t g, std::int64_t d) {
  const Curve curve(g);
  if (d >= 6) {
    throw Error(ErrorCode::SlopeOutOfRange,
                "slope bound needs d < 6 (slope < 2), got d = " + std::to_string(d));
  }
  return make(3 + floor_div(d - 3, curve.genus()), BoundCase::Slope, false,
              {std::string(assumption::kStable)});
}

}  // namespace clifford3
