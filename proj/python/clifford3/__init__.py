"""Exact h0 bounds for vector bundles of rank 1, 2 and 3 on curves."""

from ._core import (
    BoundResult,
    BundleInvariants,
    Clifford3Error,
    Curve,
    ElmState,
    delta_vanishes,
    example_suite,
    family_a,
    family_b,
    family_c,
    feasible_stability_pairs,
    generic_sequence,
    h0_hyperelliptic_power,
    h0_line_bound,
    h0_quotient_bound,
    h0_rank2_bound,
    h0_rank3_semistable_bound,
    h0_rank3_unstable_bound,
    krawtchouk,
    krawtchouk_oracle,
    s2_lower_bound_track,
    seed_split_state,
    serre_dual,
    slope_bound,
    step,
    twist_by_line,
    unstable_sharpness,
    validate,
)

__all__ = [
    "BoundResult",
    "BundleInvariants",
    "Clifford3Error",
    "Curve",
    "ElmState",
    "delta_vanishes",
    "example_suite",
    "family_a",
    "family_b",
    "family_c",
    "feasible_stability_pairs",
    "generic_sequence",
    "h0_hyperelliptic_power",
    "h0_line_bound",
    "h0_quotient_bound",
    "h0_rank2_bound",
    "h0_rank3_semistable_bound",
    "h0_rank3_unstable_bound",
    "krawtchouk",
    "krawtchouk_oracle",
    "s2_lower_bound_track",
    "seed_split_state",
    "serre_dual",
    "slope_bound",
    "step",
    "twist_by_line",
    "unstable_sharpness",
    "validate",
]
