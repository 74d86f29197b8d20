#include "clifford3/invariants.hpp"

#include <algorithm>
#include <string>

#include "clifford3/arith.hpp"

namespace clifford3 {

Curve::Curve(std::int64_t genus, bool hyperelliptic)
    : genus_(genus), hyperelliptic_(hyperelliptic) {
  if (genus < 2) {
    throw Error(ErrorCode::InvalidCurve, "genus must be at least 2, got " + std::to_string(genus));
  }
}

bool BundleInvariants::semistable() const {
  return std::all_of(s.begin(), s.end(), [](std::int64_t v) { return v >= 0; });
}

bool BundleInvariants::stable() const {
  return std::all_of(s.begin(), s.end(), [](std::int64_t v) { return v > 0; });
}

std::int64_t BundleInvariants::max_subbundle_degree(int r) const {
  return (r * degree - s_at(r)) / rank;
}

void validate(const BundleInvariants& inv) {
  if (inv.rank < 1 || inv.rank > 3) {
    throw Error(ErrorCode::RankUnsupported,
                "rank must be 1, 2 or 3, got " + std::to_string(inv.rank));
  }
  if (inv.s.size() != static_cast<std::size_t>(inv.rank - 1)) {
    throw Error(ErrorCode::InvalidArgument,
                "rank " + std::to_string(inv.rank) + " needs " + std::to_string(inv.rank - 1) +
                    " stability degrees, got " + std::to_string(inv.s.size()));
  }
  for (int r = 1; r < inv.rank; ++r) {
    if (!congruent(inv.s_at(r), r * inv.degree, inv.rank)) {
      throw Error(ErrorCode::CongruenceViolation,
                  "s_" + std::to_string(r) + " = " + std::to_string(inv.s_at(r)) +
                      " is not congruent to " + std::to_string(r) + "*d = " +
                      std::to_string(r * inv.degree) + " mod " + std::to_string(inv.rank),
                  r);
    }
  }
}

BundleInvariants serre_dual(const Curve& curve, const BundleInvariants& inv) {
  validate(inv);
  BundleInvariants out = inv;
  out.degree = inv.rank * curve.canonical_degree() - inv.degree;
  std::reverse(out.s.begin(), out.s.end());
  return out;
}

BundleInvariants twist_by_line(const BundleInvariants& inv, std::int64_t a) {
  validate(inv);
  BundleInvariants out = inv;
  out.degree += inv.rank * a;
  return out;
}

std::int64_t h0_hyperelliptic_power(const Curve& curve, std::int64_t a,
                                    bool extra_general_point) {
  if (!curve.hyperelliptic()) {
    throw Error(ErrorCode::NotHyperelliptic, "powers of h need a hyperelliptic curve");
  }
  if (a < 0) {
    throw Error(ErrorCode::InvalidArgument, "exponent must be nonnegative, got " + std::to_string(a));
  }
  const std::int64_t g = curve.genus();
  if (extra_general_point) {
    if (a > g - 2) {
      throw Error(ErrorCode::OutOfModeledRange,
                  "h^a(p) is modeled only for a <= g-2 = " + std::to_string(g - 2));
    }
    return a + 1;
  }
  return a <= g - 1 ? a + 1 : 2 * a + 1 - g;
}

}  // namespace clifford3
