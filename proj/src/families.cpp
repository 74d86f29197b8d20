#include "clifford3/families.hpp"

#include <string>

#include "clifford3/arith.hpp"
#include "clifford3/elmtrans.hpp"

namespace clifford3 {
namespace {

[[noreturn]] void out_of_range(const std::string& what) {
  throw Error(ErrorCode::ParamsOutOfRange, what);
}

// h^0 of h^a, or h^a(p) with p general; zero in negative degree.
std::int64_t h0_power(const Curve& curve, std::int64_t a, bool with_point) {
  const std::int64_t degree = 2 * a + (with_point ? 1 : 0);
  if (degree < 0) return 0;
  return h0_hyperelliptic_power(curve, a, with_point);
}

// Lower and upper estimates must meet; otherwise h^0 is not determined.
std::int64_t squeeze(std::int64_t lower, std::int64_t upper, const std::string& what) {
  if (lower != upper) {
    throw Error(ErrorCode::InvalidArgument, what + ": lower bound " + std::to_string(lower) +
                                                " and upper bound " + std::to_string(upper) +
                                                " do not meet");
  }
  return lower;
}

// s_1 of m general elementary transformations of the split rank-n seed.
std::int64_t general_s1(const Curve& curve, int n, std::int64_t m) {
  const ElmState st = generic_sequence(seed_split_state(curve, n), m);
  if (!st.certified(1)) {
    throw Error(ErrorCode::HypothesisUnverifiable,
                "s_1 after " + std::to_string(m) + " general steps is not certified");
  }
  return st.invariants().s_at(1);
}

}  // namespace

ExampleReport family_a(std::int64_t g, std::int64_t n, std::int64_t k) {
  if (g < 3) out_of_range("family a needs genus >= 3 (no admissible k on genus 2)");
  if (n < 0) out_of_range("family a needs n >= 0");
  const std::int64_t m = 4 * n + 2;
  if (m > g) out_of_range("family a needs m = 4n+2 <= g");
  if (k < 0 || k > g - 2 - m / 2) {
    out_of_range("family a needs 0 <= k <= g - 2 - m/2 = " + std::to_string(g - 2 - m / 2));
  }
  const Curve curve(g, true);

  // F_m = m general steps from O(p1)+O(p2), then twisted by h^k.
  const std::int64_t s1F = general_s1(curve, 2, m);
  const BundleInvariants quotient = twist_by_line(BundleInvariants::rank2(2 + m, s1F), 2 * k);
  const std::int64_t h0_quotient =
      squeeze(2 * h0_power(curve, k, true), h0_rank2_bound(curve, quotient.degree, s1F).value,
              "h0(F_{m,k})");
  const std::int64_t line_exponent = n + k + 1;

  ExampleReport rep;
  rep.family = "a";
  rep.genus = g;
  rep.params = {{"n", n}, {"k", k}, {"m", m}};
  rep.inv = BundleInvariants::rank3(2 * line_exponent + quotient.degree, 0, 0);
  validate(rep.inv);
  rep.quotient_s1 = s1F;
  rep.exact_h0 = h0_power(curve, line_exponent, false) + h0_quotient;
  rep.bound = h0_quotient_bound(Rank3Query{curve, rep.inv, s1F, false, true});
  rep.sharp = rep.exact_h0 == rep.bound.value;
  rep.notes = {
      "E = h^(n+k+1) + F_{m,k}; s1(E) = s2(E) = 0 taken as given for this sum",
      "h0(F_{m,k}) = 2k+2: sections of h^k(p1)+h^k(p2) meet the hyperelliptic rank-2 bound",
  };
  return rep;
}

ExampleReport family_b(std::int64_t g, std::int64_t m) {
  const bool even_case = m % 2 == 0 && m >= 2 && m <= g;
  const bool genus2_case = g == 2 && m == 1;
  if (g < 2 || !(even_case || genus2_case)) {
    out_of_range("family b needs m even with 2 <= m <= g, or g = 2 and m = 1");
  }
  const Curve curve(g, true);
  const std::int64_t s1 = general_s1(curve, 3, m);
  const std::int64_t s1F = general_s1(curve, 2, m);

  ExampleReport rep;
  rep.family = "b";
  rep.genus = g;
  rep.params = {{"m", m}};
  rep.inv = BundleInvariants::rank3(3 + m, s1, s2_lower_bound_track(m));
  validate(rep.inv);
  rep.s2_is_lower_bound = true;
  rep.quotient_s1 = s1F;
  rep.bound = h0_quotient_bound(Rank3Query{curve, rep.inv, s1F, false, true});
  rep.exact_h0 = squeeze(3 * h0_power(curve, 0, true), rep.bound.value, "h0(E_m)");
  rep.sharp = true;
  rep.notes = {
      "h0(E_0) = 3 <= h0(E_m) <= quotient bound",
      "s2 is the certified lower bound; the quotient bound uses only s1(F) and s1 <= 2 s2",
  };
  return rep;
}

ExampleReport family_c(std::int64_t g, FamilyCVariant variant, std::int64_t k) {
  if (g < 2) out_of_range("family c needs genus >= 2");
  if (k < 0 || k > g - 2) out_of_range("family c needs 0 <= k <= g-2 = " + std::to_string(g - 2));
  const Curve curve(g, true);

  const ElmState e1 = generic_sequence(seed_split_state(curve, 3), 1);
  if (!e1.certified(1) || !e1.certified(2)) {
    throw Error(ErrorCode::HypothesisUnverifiable, "E_1 invariants are not certified");
  }
  const std::int64_t sections = 3 * h0_power(curve, k, true);

  ExampleReport rep;
  rep.family = "c";
  rep.genus = g;
  rep.params = {{"k", k}};
  if (variant == FamilyCVariant::E1) {
    rep.variant = "E1";
    rep.inv = twist_by_line(e1.invariants(), 2 * k);
    rep.bound = h0_rank3_semistable_bound(Rank3Query{curve, rep.inv, std::nullopt, false, true});
    rep.exact_h0 = squeeze(sections, rep.bound.value, "h0(E_{1,k})");
    rep.sharp = true;
    rep.notes = {"h0(E_{1,k}) >= h0(h^k(p1)) + h0(h^k(p2)) + h0(h^k(p3)) = 3k+3"};
    return rep;
  }

  // The maximal rank-2 subbundles of E_1 form a 1-dimensional family, so a
  // general second step hits one: s1 rises by 1, s2 drops by 1.
  const ElmState e2 = step(e1, StepChoice{{false, true}});
  rep.variant = "E2";
  rep.inv = twist_by_line(e2.invariants(), 2 * k);
  rep.bound = h0_rank3_semistable_bound(Rank3Query{curve, rep.inv, std::nullopt, false, true});
  rep.exact_h0 = sections;
  rep.sharp = rep.exact_h0 == rep.bound.value;
  rep.notes = {"h0(E_{2,k}) = 3k+3: general transformation of E_{1,k}, which has h1 > 0"};
  if (k == 0) {
    rep.slope = slope_bound(g, rep.inv.degree);
    if (g >= 3) {
      rep.notes.emplace_back("stable of slope < 2: h0 <= 3 + 2/g, so 3 is optimal");
    } else {
      rep.attainable_h0 = 4;
      rep.notes.emplace_back(
          "genus 2: a stable bundle of degree 5 with h0 = 4 exists; congruences force (s1,s2) = (2,1)");
    }
  }
  return rep;
}

std::vector<std::pair<std::int64_t, std::int64_t>> feasible_stability_pairs(
    const Curve& curve, std::int64_t d, std::int64_t h0) {
  // Beyond these limits the vanishing or Riemann-Roch branch is constant.
  const std::int64_t limit = 3 * curve.genus() + (d < 0 ? -d : d) + 6;
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t s1 = 1; s1 <= limit; ++s1) {
    if (!congruent(s1, d, 3)) continue;
    for (std::int64_t s2 = 1; s2 <= limit; ++s2) {
      if (!congruent(s2, 2 * d, 3)) continue;
      const Rank3Query q{curve, BundleInvariants::rank3(d, s1, s2), std::nullopt};
      if (h0_rank3_semistable_bound(q).value >= h0) out.emplace_back(s1, s2);
    }
  }
  return out;
}

ExampleReport unstable_sharpness(const Curve& curve, std::int64_t dL, std::int64_t dF,
                                 std::int64_t s1F) {
  if (!curve.hyperelliptic()) {
    throw Error(ErrorCode::NotHyperelliptic, "split examples need a hyperelliptic curve");
  }
  if (s1F > 0) {
    throw Error(ErrorCode::UnrealizableF, "a split rank-2 bundle has s1 <= 0");
  }
  if (mod(dF - s1F, 4) != 0 || mod(dF + s1F, 4) != 0) {
    throw Error(ErrorCode::UnrealizableF, "no h^a + h^b has degree " + std::to_string(dF) +
                                              " and s1 = " + std::to_string(s1F));
  }
  const std::int64_t a = (dF - s1F) / 4;
  const std::int64_t b = (dF + s1F) / 4;
  const std::int64_t g = curve.genus();

  const bool odd_line = mod(dL, 2) == 1;
  const std::int64_t x = odd_line ? (dL - 1) / 2 : dL / 2;
  if (odd_line && x > g - 2) {
    throw Error(ErrorCode::UnrealizableF, "h^x(p) is modeled only for x <= g-2");
  }
  if (dL < 2 * a) out_of_range("L must be a line subbundle of maximal degree");
  const std::int64_t d = dL + dF;
  if (3 * dL <= d) out_of_range("L + F is not unstable with s1 < 0 (needs 3 dL > dL + dF)");

  ExampleReport rep;
  rep.family = "unstable";
  rep.genus = g;
  rep.params = {{"dL", dL}, {"dF", dF}, {"s1F", s1F}, {"a", a}, {"b", b}};
  rep.inv = BundleInvariants::rank3(d, d - 3 * dL, 2 * d - 3 * (dL + 2 * a));
  validate(rep.inv);
  rep.quotient_s1 = s1F;
  rep.exact_h0 = h0_power(curve, x, odd_line) + h0_power(curve, a, false) + h0_power(curve, b, false);
  rep.bound = h0_rank3_unstable_bound(Rank3Query{curve, rep.inv, s1F}, s1F >= 0);
  rep.sharp = rep.exact_h0 == rep.bound.value;
  rep.notes = {odd_line ? "L = h^x(p), F = h^a + h^b" : "L = h^x, F = h^a + h^b"};
  return rep;
}

std::vector<ExampleReport> example_suite(std::int64_t max_genus) {
  std::vector<ExampleReport> out;
  for (std::int64_t g = 2; g <= max_genus; ++g) {
    for (std::int64_t n = 0; g >= 3 && 4 * n + 2 <= g; ++n) {
      for (std::int64_t k = 0; k <= g - 2 - (2 * n + 1); ++k) out.push_back(family_a(g, n, k));
    }
    for (std::int64_t m = 1; m <= g; ++m) {
      const bool valid = (m % 2 == 0 && g >= 3) || (g == 2 && m == 1);
      if (valid) out.push_back(family_b(g, m));
    }
    for (std::int64_t k = 0; k <= g - 2; ++k) {
      out.push_back(family_c(g, FamilyCVariant::E1, k));
      out.push_back(family_c(g, FamilyCVariant::E2, k));
    }
  }
  return out;
}

}  // namespace clifford3
