#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clifford3/bounds.hpp"
#include "clifford3/invariants.hpp"

namespace clifford3 {

/// A constructed bundle on a hyperelliptic curve with its exact h^0 and the
/// bound that applies to it.
struct ExampleReport {
  std::string family;
  std::int64_t genus = 0;
  std::vector<std::pair<std::string, std::int64_t>> params;
  std::string variant;  // family c only
  BundleInvariants inv;
  std::optional<std::int64_t> quotient_s1;
  /// s_2 is only known from below (family b).
  bool s2_is_lower_bound = false;
  std::int64_t exact_h0 = 0;
  BoundResult bound;
  bool sharp = false;
  std::optional<BoundResult> slope;
  /// h^0 known to be attained by some bundle with these invariants.
  std::optional<std::int64_t> attainable_h0;
  std::vector<std::string> notes;
};

/// E = h^(n+k+1) + F_{m,k}, m = 4n+2, F_{m,k} = F_m (x) h^k with F_m a general
/// m-step transformation of O(p1) + O(p2). Needs g >= 3, m <= g,
/// 0 <= k <= g - 2 - m/2.
ExampleReport family_a(std::int64_t g, std::int64_t n, std::int64_t k);

/// E_m, a general m-step transformation of O(p1)+O(p2)+O(p3), m even with
/// 2 <= m <= g, or m = 1 on genus 2.
ExampleReport family_b(std::int64_t g, std::int64_t m);

enum class FamilyCVariant { E1, E2 };

/// E_{1,k} = E_1 (x) h^k or E_{2,k} = E_2 (x) h^k, 0 <= k <= g-2.
ExampleReport family_c(std::int64_t g, FamilyCVariant variant, std::int64_t k);

/// Stable (s1, s2) pairs with the given congruences for which the base rank-3
/// bound allows h^0 >= `h0`, searched exhaustively.
std::vector<std::pair<std::int64_t, std::int64_t>> feasible_stability_pairs(
    const Curve& curve, std::int64_t d, std::int64_t h0);

/// E = L + F on a hyperelliptic curve, L = h^(dL/2) (or h^((dL-1)/2)(p) for odd
/// dL) and F = h^a + h^b the split bundle of degree dF with s_1(F) = s1F.
ExampleReport unstable_sharpness(const Curve& curve, std::int64_t dL, std::int64_t dF,
                                 std::int64_t s1F);

/// Every valid parameter set of families a, b, c with genus <= max_genus.
std::vector<ExampleReport> example_suite(std::int64_t max_genus);

}  // namespace clifford3
