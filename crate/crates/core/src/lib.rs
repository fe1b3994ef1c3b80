//! Linear-time approximation algorithms for geometric optimization on unit
//! disk graphs and bounded-aspect rectangles, built from grid coresets and
//! the shifting strategy.
//!
//! | problem | bounded diameter | shifted |
//! |---|---|---|
//! | max-weight independent set, disks | [`wis_constdiam`] (4) | [`wis_shifted`] (4 + eps) |
//! | (partial) dominating set, disks | [`pds_constdiam`] (4) | [`pds_shifted`], [`ds_shifted`] (4 + eps) |
//! | vertex cover, disks | [`vc_constdiam`] (1 + eps) | [`vc_shifted`] (1 + eps) |
//! | max-weight independent set, rectangles | [`wis_rect_constdiam`] (6) | [`wis_rect_shifted`] (6 + eps) |
//!
//! Exact branch-and-bound solvers for small inputs live in [`exact`];
//! feasibility checkers in [`check`]; seeded generators and the text formats
//! in [`instances`].

pub mod baselines;
pub mod check;
mod coreset;
pub mod ds_udg;
mod error;
pub mod exact;
pub mod geom;
pub mod instances;
pub mod shifting;
mod solution;
pub mod vc_udg;
pub mod wis_rect;
pub mod wis_udg;

pub use baselines::{greedy_ds_udg, greedy_wis_udg};
pub use ds_udg::{
    check_ds_gamma, ds_coreset, ds_shifted, pds_constdiam, pds_select_k, pds_shifted,
    PdsInstance, DS_CORESET_DIAMETER,
};
pub use error::{Error, Result};
pub use exact::{exact_min_pds, exact_min_vc_udg, exact_mwis_rect, exact_mwis_udg};
pub use geom::{WeightedPoint, WeightedRect};
pub use shifting::{ShiftPlan, SubGrid, MAX_K};
pub use solution::{
    Problem, Solution, SolveMeta, SolverConfig, DEFAULT_CAP, DEFAULT_NODE_BUDGET,
};
pub use vc_udg::{vc_constdiam, vc_select_k, vc_shifted, vc_threshold};
pub use wis_rect::{rect_coreset, rect_select_k, wis_rect_constdiam, wis_rect_shifted, RECT_CORESET_DIAMETER};
pub use wis_udg::{wis_coreset, wis_constdiam, wis_select_k, wis_shifted, WIS_CORESET_DIAMETER};

/// Checks that the coreset cell diameters satisfy the bounds the
/// approximation factors rely on. Cheap; callers run it at startup.
pub fn verify_constants() -> Result<()> {
    let wis_bound = (2.0 - std::f64::consts::SQRT_2) / 2.0;
    assert!(
        WIS_CORESET_DIAMETER < wis_bound,
        "independent set coreset diameter {WIS_CORESET_DIAMETER} must be below {wis_bound}"
    );
    assert!(
        RECT_CORESET_DIAMETER < 1.0 / 6.0,
        "rectangle coreset diameter {RECT_CORESET_DIAMETER} must be below 1/6"
    );
    assert!(
        check_ds_gamma(DS_CORESET_DIAMETER)?,
        "dominating set coreset diameter {DS_CORESET_DIAMETER} is too large"
    );
    Ok(())
}
