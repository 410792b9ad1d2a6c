//! Exact computation around the Takagi function on dyadic rationals.
//!
//! At a dyadic rational `r/2^k` the Takagi (blancmange) function takes the
//! dyadic value `delta(2^k + r) / 2^k`, where `delta(n)` counts the
//! imbalanced (D-labeled) interior nodes of the divide-and-conquer tree on
//! `n` leaves. This crate implements that dilation together with every other
//! route to the same numbers — the original tent-sum definition, per-level
//! closed forms, suffix-bit-sum explicit forms, step and neighbor
//! recurrences — plus the Hamming-weight and cumulative-digit-sum identities
//! they induce (including Trollope's formula), all in exact arithmetic.
//!
//! An explicit tree builder ([`sdtree`]) serves as the brute-force oracle,
//! and [`verify`] sweeps every identity in the catalog over integer ranges.
//! The `takagi` binary exposes the lot on the command line.

pub mod cli;
pub mod delta;
pub mod digitsum;
pub mod dyadic;
pub mod error;
pub mod sdtree;
pub mod takagi;
pub mod verify;

pub use delta::{
    check_neighbor_identity, delta_closed, delta_explicit, delta_recursive, delta_step,
    lambda_level, NeighborCheck,
};
pub use digitsum::{
    s1, s1_cumulative, s1_cumulative_forms, s1_cumulative_powtwo, s1_cumulative_trollope,
    s1_from_delta, s1_from_takagi,
};
pub use dyadic::{decompose, rho1, Decomposition, Dyadic, MAX_EXP, N_MAX};
pub use error::{Error, Result};
pub use sdtree::{
    build_dnc_tree, count_labels, export_dot, is_divide_and_conquer, level_d_counts, Label,
    LevelProfile, SdTree, ORACLE_MAX,
};
pub use takagi::{
    boros_check, check_takagi_neighbor, definition_args, evaluate, takagi_closed,
    takagi_definition, takagi_dilation, takagi_explicit, takagi_step, tent_series, BorosCheck,
    TakagiValue, K_MAX,
};
pub use verify::{list_identities, verify_range, IdentityId, IdentityReport, ALL_IDENTITIES};
