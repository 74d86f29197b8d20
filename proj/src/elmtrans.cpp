#include "clifford3/elmtrans.hpp"

#include <algorithm>
#include <string>

#include "clifford3/arith.hpp"

namespace clifford3 {

ElmState::ElmState(BundleInvariants inv) : inv_(std::move(inv)) {
  validate(inv_);
  certified_.assign(static_cast<std::size_t>(inv_.rank - 1), true);
}

std::optional<std::int64_t> ElmState::sb_upper(int r, std::int64_t i) const {
  auto it = sb_dim_upper_.find({r, i});
  if (it == sb_dim_upper_.end()) return std::nullopt;
  return it->second;
}

ElmState ElmState::with_sb_upper(int r, std::int64_t i, std::int64_t bound) const {
  if (r < 1 || r >= inv_.rank || i < 0) {
    throw Error(ErrorCode::InvalidArgument, "no subbundle family SB^" + std::to_string(i) + "_" +
                                                std::to_string(r) + " for rank " +
                                                std::to_string(inv_.rank));
  }
  ElmState out = *this;
  out.sb_dim_upper_[{r, i}] = bound;
  return out;
}

ElmState step(const ElmState& st, const StepChoice& choice) {
  const int n = st.inv_.rank;
  if (choice.hits_maximal.size() != static_cast<std::size_t>(n - 1)) {
    throw Error(ErrorCode::InvalidArgument, "a rank-" + std::to_string(n) + " step needs " +
                                                std::to_string(n - 1) + " choices");
  }
  ElmState out = st;
  out.inv_.degree += 1;
  out.sb_dim_upper_.clear();
  for (int r = 1; r < n; ++r) {
    auto& s = out.inv_.s[static_cast<std::size_t>(r - 1)];
    if (choice.hits_maximal[static_cast<std::size_t>(r - 1)]) {
      s -= n - r;
      continue;
    }
    s += r;
    for (const auto& [key, upper] : st.sb_dim_upper_) {
      if (key.first != r) continue;
      const auto next = st.sb_upper(r, key.second + 1);
      if (!next) continue;
      out.sb_dim_upper_[key] = std::max(upper, *next - (n - r));
    }
  }
  out.step_count_ += 1;
  return out;
}

HypothesisStatus generic_hypothesis(const ElmState& st, int r, std::int64_t m) {
  const int n = st.invariants().rank;
  bool unknown = false;
  for (std::int64_t i = 0; i < m; ++i) {
    const auto upper = st.sb_upper(r, i);
    if (!upper) {
      unknown = true;
    } else if (*upper >= (i + 1) * (n - r)) {
      return HypothesisStatus::Fails;
    }
  }
  return unknown ? HypothesisStatus::Unknown : HypothesisStatus::Holds;
}

ElmState generic_sequence(const ElmState& start, std::int64_t m) {
  if (m < 0) {
    throw Error(ErrorCode::InvalidArgument, "step count must be nonnegative, got " + std::to_string(m));
  }
  if (m == 0) return start;
  const int n = start.invariants().rank;
  std::vector<HypothesisStatus> status;
  for (int r = 1; r < n; ++r) status.push_back(generic_hypothesis(start, r, m));
  if (n > 1 && std::all_of(status.begin(), status.end(),
                           [](HypothesisStatus s) { return s == HypothesisStatus::Unknown; })) {
    throw Error(ErrorCode::HypothesisUnverifiable,
                "no subbundle dimension bounds cover " + std::to_string(m) + " general steps");
  }
  ElmState st = start;
  for (std::int64_t k = 0; k < m; ++k) st = step(st, StepChoice::all_miss(n));
  for (int r = 1; r < n; ++r) {
    const auto idx = static_cast<std::size_t>(r - 1);
    st.certified_[idx] = start.certified_[idx] && status[idx] == HypothesisStatus::Holds;
  }
  return st;
}

ElmState seed_split_state(const Curve& curve, int n) {
  if (n != 2 && n != 3) {
    throw Error(ErrorCode::RankUnsupported, "split seed is defined for rank 2 or 3");
  }
  BundleInvariants inv{n, n, std::vector<std::int64_t>(static_cast<std::size_t>(n - 1), 0)};
  ElmState st(inv);
  for (std::int64_t i = 0; i < curve.genus(); ++i) {
    st = st.with_sb_upper(1, i, (i + 1) * (n - 1) - 1);
  }
  if (n == 3) {
    st = st.with_sb_upper(2, 0, 0);
    if (curve.hyperelliptic()) st = st.with_sb_upper(2, 1, 2);
  }
  return st;
}

std::int64_t s2_lower_bound_track(std::int64_t m) {
  if (m < 0) {
    throw Error(ErrorCode::InvalidArgument, "step count must be nonnegative, got " + std::to_string(m));
  }
  if (m == 1) return 2;
  std::int64_t v = ceil_div(m - 3, 2);
  while (!congruent(v, 2 * m, 3)) ++v;
  return v;
}

std::vector<StepChoice> admissible_choices(const ElmState& st) {
  const BundleInvariants& inv = st.invariants();
  const int n = inv.rank;
  std::vector<std::vector<bool>> options;
  for (int r = 1; r < n; ++r) {
    const auto upper = st.sb_upper(r, 0);
    bool forced_miss = upper && *upper < n - r;
    if (n == 3 && r == 2 && inv.degree - inv.s_at(1) == 3 && 2 * inv.s_at(2) < inv.s_at(1)) {
      forced_miss = true;
    }
    options.push_back(forced_miss ? std::vector<bool>{false} : std::vector<bool>{false, true});
  }
  std::vector<StepChoice> out{StepChoice{{}}};
  for (const auto& opts : options) {
    std::vector<StepChoice> next;
    for (const auto& partial : out) {
      for (bool hit : opts) {
        StepChoice c = partial;
        c.hits_maximal.push_back(hit);
        next.push_back(std::move(c));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace clifford3
