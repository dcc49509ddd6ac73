//! Independent floating-point validation of the closed forms.
//!
//! Everything here is derived from the tangency constraints alone:
//! a circle of radius r touching the baseline sits at height r, and two
//! externally tangent baseline circles of radii r₁, r₂ have centers
//! 2√(r₁r₂) apart. The closed-form radius laws and the theorem
//! statements are never referenced, so agreement with the exact module
//! is a genuine cross-check.

use crate::config::{ChainConfig, ChainKind};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleResult {
    pub value: f64,
    pub iterations: u32,
    /// Width of the final bracket; at most the requested tolerance.
    pub residual: f64,
}

/// Bisection on a bracket with a sign change. The function is only ever
/// evaluated inside the initial bracket.
fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> Result<OracleResult> {
    if !(tol > 0.0) || !(hi > lo) {
        return Err(Error::InvalidParameter("bad bracket or tolerance".into()));
    }
    let flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Ok(OracleResult { value: lo, iterations: 0, residual: 0.0 });
    }
    if fhi == 0.0 {
        return Ok(OracleResult { value: hi, iterations: 0, residual: 0.0 });
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::InvalidParameter("no sign change on bracket".into()));
    }
    let mut iterations = 0;
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break; // bracket narrower than float spacing
        }
        let fm = f(mid);
        if fm == 0.0 {
            lo = mid;
            hi = mid;
            iterations += 1;
            break;
        }
        if fm.signum() == flo.signum() {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
    }
    Ok(OracleResult {
        value: 0.5 * (lo + hi),
        iterations,
        residual: hi - lo,
    })
}

fn check_inputs(a: f64, tol: f64) -> Result<()> {
    if !(a > 0.0) {
        return Err(Error::InvalidParameter("a must be positive".into()));
    }
    if !(tol > 0.0 && tol < a) {
        return Err(Error::InvalidParameter("need 0 < tol < a".into()));
    }
    Ok(())
}

/// Chain radius of `CB(n)` from the chain-closure constraint.
///
/// Tangency of β₁ to α₁ forces x₁ = −a + 2√(ab), tangency of βₙ to α₂
/// forces xₙ = a − 2√(ab), and the chain spacing forces
/// xₙ − x₁ = 2b(n−1). Together: f(b) = 2b(n−1) + 4√(ab) − 2a = 0,
/// strictly increasing on (0, a).
pub fn oracle_chain_radius_cb(n: u32, a: f64, tol: f64) -> Result<OracleResult> {
    if n == 0 {
        return Err(Error::InvalidParameter("CB needs n >= 1".into()));
    }
    check_inputs(a, tol)?;
    let f = |b: f64| 2.0 * b * (n as f64 - 1.0) + 4.0 * (a * b).sqrt() - 2.0 * a;
    bisect(f, 0.0, a, tol)
}

/// Chain radius of `CA(n)` from the single end-tangency constraint:
/// (b(n−1))² + (a−b)² = (a+b)², i.e. g(b) = b(n−1)² − 4a = 0.
pub fn oracle_chain_radius_ca(n: u32, a: f64, tol: f64) -> Result<OracleResult> {
    if n < 2 {
        return Err(Error::InvalidParameter("CA needs n >= 2".into()));
    }
    check_inputs(a, tol)?;
    let m = (n as f64 - 1.0) * (n as f64 - 1.0);
    let g = |b: f64| b * m - 4.0 * a;
    bisect(g, 0.0, 8.0 * a / m + 1.0, tol)
}

/// Side of the inscribed square: smaller positive root of
/// (5/4)s² − 3as + a² on (0, a).
pub fn oracle_square_side(a: f64, tol: f64) -> Result<OracleResult> {
    check_inputs(a, tol)?;
    let p = |s: f64| 1.25 * s * s - 3.0 * a * s + a * a;
    bisect(p, 0.0, a, tol)
}

/// Maximum absolute residual, relative to `a`, over all tangency
/// equations and theorem identities of a config, evaluated in floats.
pub fn numeric_residuals(cfg: &ChainConfig) -> f64 {
    let a = cfg.a.to_f64();
    let b = cfg.b.to_f64();
    let circles: Vec<(f64, f64, f64)> = cfg
        .outer
        .iter()
        .chain(cfg.chain.iter())
        .map(|c| (c.center.x.to_f64(), c.center.y.to_f64(), c.r.to_f64()))
        .collect();
    let n_outer = cfg.outer.len();

    let mut worst: f64 = 0.0;
    let mut note = |r: f64| worst = worst.max(r.abs());

    for &(_, cy, r) in &circles {
        note((cy - r) / a);
    }
    let ext = |c1: (f64, f64, f64), c2: (f64, f64, f64)| {
        let d = ((c1.0 - c2.0).powi(2) + (c1.1 - c2.1).powi(2)).sqrt();
        d - (c1.2 + c2.2)
    };
    if cfg.kind == ChainKind::CB {
        note(ext(circles[0], circles[1]) / a);
    }
    for w in circles[n_outer..].windows(2) {
        note(ext(w[0], w[1]) / a);
    }
    note(ext(circles[0], circles[n_outer]) / a);
    note(ext(circles[n_outer - 1], *circles.last().unwrap()) / a);

    let d = cfg.d.to_f64();
    let bc = cfg.bc.to_f64();
    let (bx, by) = (cfg.b_point.x.to_f64(), cfg.b_point.y.to_f64());
    let (cx, cy) = (cfg.c_point.x.to_f64(), cfg.c_point.y.to_f64());
    note((cx + bx) / a);
    note((cy - by) / a);
    note((d - by) / a);
    note((bc - 2.0 * bx) / a);
    note(((d - b) * (a + b) - (a - b) * b) / (a * a));
    match cfg.kind {
        ChainKind::CB => {
            note((cfg.n as f64 * d - bc) / a);
            let s = 1.0 + (cfg.n as f64).sqrt();
            note((2.0 * a - (s * s + 1.0) * d) / a);
        }
        ChainKind::CA => {
            note(((cfg.n as f64 - 1.0) * d - bc) / a);
            let m = cfg.n as f64 - 1.0;
            note((8.0 * a - (m * m + 4.0) * d) / a);
        }
    }
    worst
}
