//! Exact construction and verification of tangent circle chains.
//!
//! Two families of configurations are supported, each resting on the
//! horizontal baseline `y = 0`:
//!
//! * `CB(n)` — two congruent circles of radius `a` tangent to each other
//!   and to the baseline, with a chain of `n` congruent circles bridging
//!   the curvilinear triangle between them.
//! * `CA(n)` — one circle of radius `a` tangent to the baseline and to
//!   the first and last circle of an `n`-circle congruent chain.
//!
//! All coordinates live in the quadratic field Q(√n), so every tangency
//! and every derived identity is checked exactly, with no rounding. An
//! independent floating-point oracle re-derives the chain radii from the
//! tangency constraints alone and cross-checks the closed forms.

pub mod config;
pub mod error;
pub mod geom;
pub mod oracle;
pub mod qfield;
pub mod render;

pub use config::{
    build_ca, build_cb, chain_radius_ca, chain_radius_cb, incircle_delta, rejected_root_gap_cb,
    square_in_delta, verify_config, ChainConfig, ChainKind, SquareResult, VerificationReport,
};
pub use error::Error;
pub use geom::{foot_on_baseline, tangency_kind, tangency_point, touches_baseline, Circle, Point, Tangency};
pub use oracle::{
    numeric_residuals, oracle_chain_radius_ca, oracle_chain_radius_cb, oracle_square_side,
    OracleResult,
};
pub use qfield::{QNum, Rational};
pub use render::{render_report, render_svg, RenderOptions};
