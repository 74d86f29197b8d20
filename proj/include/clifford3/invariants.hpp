#pragma once

#include <cstdint>
#include <vector>

#include "clifford3/error.hpp"

namespace clifford3 {

/// A smooth projective curve, known only through its genus and whether it is
/// hyperelliptic. Genus must be at least 2.
class Curve {
 public:
  explicit Curve(std::int64_t genus, bool hyperelliptic = false);

  std::int64_t genus() const { return genus_; }
  bool hyperelliptic() const { return hyperelliptic_; }
  std::int64_t canonical_degree() const { return 2 * genus_ - 2; }

  friend bool operator==(const Curve&, const Curve&) = default;

 private:
  std::int64_t genus_;
  bool hyperelliptic_;
};

/// Numerical invariants of a vector bundle: rank n, degree d and the degrees
/// of stability s_1, ..., s_{n-1}, where s_r = r*d - n*(max degree of a rank-r
/// subbundle).
struct BundleInvariants {
  int rank = 1;
  std::int64_t degree = 0;
  std::vector<std::int64_t> s;

  static BundleInvariants line(std::int64_t d) { return {1, d, {}}; }
  static BundleInvariants rank2(std::int64_t d, std::int64_t s1) { return {2, d, {s1}}; }
  static BundleInvariants rank3(std::int64_t d, std::int64_t s1, std::int64_t s2) {
    return {3, d, {s1, s2}};
  }

  /// s_r for 1 <= r <= rank-1.
  std::int64_t s_at(int r) const { return s.at(static_cast<std::size_t>(r - 1)); }

  bool semistable() const;
  bool stable() const;

  /// Maximal degree of a rank-r subbundle, (r*d - s_r)/n.
  std::int64_t max_subbundle_degree(int r) const;

  friend bool operator==(const BundleInvariants&, const BundleInvariants&) = default;
};

/// Accepts iff rank is 1, 2 or 3, there are rank-1 stability degrees and each
/// s_r is congruent to r*d modulo the rank.
void validate(const BundleInvariants& inv);

/// Invariants of E* (x) K: degree n(2g-2) - d, with s_r and s_{n-r} exchanged.
BundleInvariants serre_dual(const Curve& curve, const BundleInvariants& inv);

/// Invariants of E (x) M for a line bundle M of degree a.
BundleInvariants twist_by_line(const BundleInvariants& inv, std::int64_t a);

/// h^0 of h^a on a hyperelliptic curve, h the degree-2 pencil. With
/// `extra_general_point` it is h^0(h^a(p)) for a general point p, modeled
/// only for a <= g-2.
std::int64_t h0_hyperelliptic_power(const Curve& curve, std::int64_t a,
                                    bool extra_general_point);

}  // namespace clifford3
