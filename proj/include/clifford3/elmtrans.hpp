#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "clifford3/invariants.hpp"

namespace clifford3 {

/// For each r = 1..n-1, whether the line l_x lies in the fibre of some
/// maximal rank-r subbundle.
struct StepChoice {
  std::vector<bool> hits_maximal;

  static StepChoice all_miss(int rank) {
    return {std::vector<bool>(static_cast<std::size_t>(rank > 0 ? rank - 1 : 0), false)};
  }
  friend bool operator==(const StepChoice&, const StepChoice&) = default;
};

/// Invariants of a bundle reached by elementary transformations, together
/// with upper bounds on dim SB^i_r, the family of rank-r subbundles of degree
/// d^r_max - i. A missing (r, i) entry means the dimension is unknown.
class ElmState {
 public:
  using SbKey = std::pair<int, std::int64_t>;  // (r, i)

  ElmState() = default;
  explicit ElmState(BundleInvariants inv);

  const BundleInvariants& invariants() const { return inv_; }
  std::int64_t step_count() const { return step_count_; }
  const std::map<SbKey, std::int64_t>& sb_dim_upper() const { return sb_dim_upper_; }

  std::optional<std::int64_t> sb_upper(int r, std::int64_t i) const;
  ElmState with_sb_upper(int r, std::int64_t i, std::int64_t bound) const;

  /// Whether s_r is known to be the value for the bundle being modeled. A
  /// generic sequence leaves s_r uncertified when the dimension hypotheses for
  /// r cannot be verified.
  bool certified(int r) const { return certified_.at(static_cast<std::size_t>(r - 1)); }

  friend bool operator==(const ElmState&, const ElmState&) = default;

 private:
  friend ElmState step(const ElmState&, const StepChoice&);
  friend ElmState generic_sequence(const ElmState&, std::int64_t);

  BundleInvariants inv_;
  std::map<SbKey, std::int64_t> sb_dim_upper_;
  std::vector<bool> certified_;
  std::int64_t step_count_ = 0;
};

/// One elementary transformation. Degree goes up by one; s_r drops by n-r on
/// a hit and rises by r on a miss. On a miss the subbundle families update as
/// upper(r,i) <- max(upper(r,i), upper(r,i+1) - (n-r)); on a hit they become
/// unknown.
ElmState step(const ElmState& st, const StepChoice& choice);

enum class HypothesisStatus { Holds, Fails, Unknown };

/// Status of dim SB^i_r < (i+1)(n-r) for i = 0..m-1 in `st`.
HypothesisStatus generic_hypothesis(const ElmState& st, int r, std::int64_t m);

/// m general elementary transformations: the m-fold all-miss step. s_r stays
/// certified only for the r whose dimension hypotheses hold. Throws
/// HypothesisUnverifiable when no r can be checked at all.
ElmState generic_sequence(const ElmState& start, std::int64_t m);

/// E_0 = O(p_1) + ... + O(p_n) for general points, n = 2 or 3: degree n,
/// s = 0, dim SB^i_1 <= (i+1)(n-1) - 1 for i <= g-1. For n = 3 the three
/// maximal rank-2 subbundles give dim SB^0_2 = 0, and on a hyperelliptic curve
/// the degree-1 rank-2 subbundles form a 2-dimensional family.
ElmState seed_split_state(const Curve& curve, int n);

/// Lower bound on s_2(E_m) for E_m a general m-step transformation of the
/// rank-3 split seed: s_2(E_1) = 2, otherwise the least integer >= (m-3)/2
/// congruent to 2m mod 3.
std::int64_t s2_lower_bound_track(std::int64_t m);

/// Choices a general transformation of `st` may make. r is forced to miss
/// when dim SB^0_r < n-r is known, or (rank 3, r = 2) when d^1_max = 1 and
/// 2 s_2 < s_1, where the maximal rank-2 subbundles are finite in number.
std::vector<StepChoice> admissible_choices(const ElmState& st);

}  // namespace clifford3
