//! Construction and exact verification of the two chain configurations.
//!
//! `CB(n)`: two radius-`a` circles α₁, α₂ tangent to each other and to
//! the baseline, with an `n`-circle congruent chain inside the
//! curvilinear triangle bridging them. The chain radius satisfies
//! `a = (√n+1)²·b`, so coordinates live in Q(√n).
//!
//! `CA(n)`: one radius-`a` circle tangent to the baseline and to the
//! first and last circles of an `n`-circle congruent chain; here the
//! radius ratio is `(n−1)² : 4` and everything stays rational.
//!
//! Both builders place the chain by closed-form centers
//! `x_i = (2i−1−n)·b` in a frame that is mirror symmetric about `x = 0`,
//! then audit every tangency and every derived identity exactly. A
//! construction that fails its own audit is an error, never a value.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::geom::{foot_on_baseline, tangency_kind, tangency_point, touches_baseline, Circle, Point, Tangency};
use crate::qfield::QNum;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainKind {
    CB,
    CA,
}

impl ChainKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ChainKind::CB => "CB",
            ChainKind::CA => "CA",
        }
    }
}

/// A fully built configuration with its derived measurements.
///
/// `b_point` is the tangency point with the rightmost outer circle,
/// `c_point` its mirror image, `a_point` the foot of the perpendicular
/// from `b_point` to the baseline. `d = |AB|` and `bc = |BC|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainConfig {
    pub kind: ChainKind,
    pub n: u32,
    pub a: QNum,
    pub b: QNum,
    pub outer: Vec<Circle>,
    pub chain: Vec<Circle>,
    pub a_point: Point,
    pub b_point: Point,
    pub c_point: Point,
    pub d: QNum,
    pub bc: QNum,
}

/// Axis-aligned square with its base on the baseline and upper corners
/// on the two outer circles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareResult {
    pub side: QNum,
    pub a: Point,
    pub b: Point,
    pub c: Point,
    pub d: Point,
}

/// Per-identity audit record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub entries: Vec<(String, bool)>,
}

impl VerificationReport {
    pub fn overall(&self) -> bool {
        self.entries.iter().all(|(_, ok)| *ok)
    }

    pub fn to_json(&self) -> Value {
        let mut obj = serde_json::Map::new();
        for (name, ok) in &self.entries {
            obj.insert(name.clone(), Value::Bool(*ok));
        }
        json!({ "identities": Value::Object(obj), "overall": self.overall() })
    }
}

fn require_positive(a: &QNum, what: &str) -> Result<()> {
    if a.sign() != 1 {
        return Err(Error::InvalidParameter(format!("{what} must be positive")));
    }
    Ok(())
}

/// Chain radius for `CB(n)`: `b = a / (√n + 1)²`, rationalized in Q(√n).
pub fn chain_radius_cb(n: u32, a: &QNum) -> Result<QNum> {
    if n == 0 {
        return Err(Error::InvalidParameter("CB needs n >= 1".into()));
    }
    let a = a.with_radicand(n as u64)?;
    require_positive(&a, "a")?;
    let s = &QNum::one(n as u64) + &QNum::sqrt_radicand(n as u64);
    a.try_div(&(&s * &s))
}

/// Chain radius for `CA(n)`: `b = 4a / (n − 1)²`.
pub fn chain_radius_ca(n: u32, a: &QNum) -> Result<QNum> {
    if n < 2 {
        return Err(Error::InvalidParameter("CA needs n >= 2".into()));
    }
    require_positive(a, "a")?;
    let m = QNum::from_int((n as i64 - 1) * (n as i64 - 1), a.radicand());
    (&QNum::from_int(4, a.radicand()) * a).try_div(&m)
}

fn chain_circles(n: u32, b: &QNum) -> Result<Vec<Circle>> {
    (1..=n as i64)
        .map(|i| {
            let x = &QNum::from_int(2 * i - 1 - n as i64, b.radicand()) * b;
            Circle::new(Point::new(x, b.clone()), b.clone())
        })
        .collect()
}

fn finish(kind: ChainKind, n: u32, a: QNum, b: QNum, outer: Vec<Circle>, chain: Vec<Circle>) -> Result<ChainConfig> {
    let (left, right) = (outer.first().unwrap(), outer.last().unwrap());
    let c_point = tangency_point(left, &chain[0])?;
    let b_point = tangency_point(right, chain.last().unwrap())?;
    let a_point = foot_on_baseline(&b_point);
    let d = b_point.y.clone();
    let bc = &QNum::from_int(2, b.radicand()) * &b_point.x;
    let cfg = ChainConfig { kind, n, a, b, outer, chain, a_point, b_point, c_point, d, bc };
    let report = verify_config(&cfg);
    if let Some((name, _)) = report.entries.iter().find(|(_, ok)| !*ok) {
        return Err(Error::ConstructionFailed(name.clone()));
    }
    Ok(cfg)
}

/// Build `CB(n)` with outer radius `a` (rational, or already in Q(√n)).
pub fn build_cb(n: u32, a: &QNum) -> Result<ChainConfig> {
    let b = chain_radius_cb(n, a)?;
    let a = a.with_radicand(n as u64)?;
    let alpha = |sign: i64| {
        Circle::new(
            Point::new(&QNum::from_int(sign, n as u64) * &a, a.clone()),
            a.clone(),
        )
    };
    let outer = vec![alpha(-1)?, alpha(1)?];
    let chain = chain_circles(n, &b)?;
    finish(ChainKind::CB, n, a, b, outer, chain)
}

/// Build `CA(n)` with outer radius `a`.
pub fn build_ca(n: u32, a: &QNum) -> Result<ChainConfig> {
    let b = chain_radius_ca(n, a)?;
    let a = a.with_radicand(b.radicand())?;
    let outer = vec![Circle::new(
        Point::new(QNum::zero(a.radicand()), a.clone()),
        a.clone(),
    )?];
    let chain = chain_circles(n, &b)?;
    finish(ChainKind::CA, n, a, b, outer, chain)
}

/// The incircle of the curvilinear triangle: radius `a/4`, centered on
/// the symmetry axis. It coincides with the single chain circle of
/// `CB(1)`.
pub fn incircle_delta(a: &QNum) -> Result<Circle> {
    require_positive(a, "a")?;
    let quarter = a.try_div(&QNum::from_int(4, a.radicand()))?;
    Circle::new(Point::new(QNum::zero(a.radicand()), quarter.clone()), quarter)
}

/// Solve for the axis-aligned square with base on the baseline and upper
/// corners on the two outer circles of `CB`.
///
/// The on-circle condition `(s/2 − a)² + (s − a)² = a²` reduces to
/// `(5/4)s² − 3as + a² = 0` with roots `2a/5` and `2a`; only the root
/// below `a` keeps the square inside the curvilinear triangle.
pub fn square_in_delta(a: &QNum) -> Result<SquareResult> {
    require_positive(a, "a")?;
    let rad = a.radicand();
    let side = (&QNum::from_int(2, rad) * a).try_div(&QNum::from_int(5, rad))?;
    let half = side.try_div(&QNum::from_int(2, rad))?;
    let result = SquareResult {
        a: Point::new(half.clone(), QNum::zero(rad)),
        b: Point::new(half.clone(), side.clone()),
        c: Point::new(-&half, side.clone()),
        d: Point::new(-&half, QNum::zero(rad)),
        side,
    };
    let alpha1 = Circle::new(Point::new(-a, a.clone()), a.clone())?;
    let alpha2 = Circle::new(Point::new(a.clone(), a.clone()), a.clone())?;
    if !alpha2.contains(&result.b) || !alpha1.contains(&result.c) {
        return Err(Error::ConstructionFailed("square corners off circle".into()));
    }
    Ok(result)
}

/// The gap `2b − d⁻` for the rejected root `d⁻ = 2a/(1+(1−√n)²)` of the
/// quadratic that determines `|AB|` in `CB(n)`. Negative for every
/// n ≥ 1, which is what rules the root out.
pub fn rejected_root_gap_cb(n: u32, a: &QNum) -> Result<QNum> {
    let b = chain_radius_cb(n, a)?;
    let a = a.with_radicand(n as u64)?;
    let rad = n as u64;
    let s = &QNum::one(rad) - &QNum::sqrt_radicand(rad);
    let denom = &QNum::one(rad) + &(&s * &s);
    let d_minus = (&QNum::from_int(2, rad) * &a).try_div(&denom)?;
    Ok(&(&QNum::from_int(2, rad) * &b) - &d_minus)
}

fn is_external(c1: &Circle, c2: &Circle) -> bool {
    matches!(tangency_kind(c1, c2), Ok(Tangency::External))
}

/// Evaluate every identity of the configuration exactly and record
/// pass/fail per identity. Failures are reported, never thrown.
pub fn verify_config(cfg: &ChainConfig) -> VerificationReport {
    let rad = cfg.b.radicand();
    let mut entries: Vec<(String, bool)> = Vec::new();
    let mut push = |name: &str, ok: bool| entries.push((name.to_string(), ok));

    let all_on_baseline = cfg
        .outer
        .iter()
        .chain(cfg.chain.iter())
        .all(touches_baseline);
    push("baseline_tangency", all_on_baseline);

    if cfg.kind == ChainKind::CB {
        push("outer_tangency", cfg.outer.len() == 2 && is_external(&cfg.outer[0], &cfg.outer[1]));
    }

    let adjacent = cfg.chain.windows(2).all(|w| is_external(&w[0], &w[1]));
    push("chain_adjacent_tangency", cfg.chain.len() == cfg.n as usize && adjacent);

    let ends_ok = !cfg.outer.is_empty()
        && !cfg.chain.is_empty()
        && is_external(cfg.outer.first().unwrap(), &cfg.chain[0])
        && is_external(cfg.outer.last().unwrap(), cfg.chain.last().unwrap());
    push("chain_end_tangency", ends_ok);

    let points_ok = !cfg.outer.is_empty()
        && !cfg.chain.is_empty()
        && cfg.outer.last().unwrap().contains(&cfg.b_point)
        && cfg.chain.last().unwrap().contains(&cfg.b_point)
        && cfg.outer.first().unwrap().contains(&cfg.c_point)
        && cfg.chain[0].contains(&cfg.c_point)
        && cfg.a_point == foot_on_baseline(&cfg.b_point)
        && cfg.d == cfg.b_point.y
        && cfg.bc == &QNum::from_int(2, rad) * &cfg.b_point.x;
    push("points_on_circles", points_ok);

    let mirror = cfg.c_point.x == -&cfg.b_point.x && cfg.c_point.y == cfg.b_point.y;
    push("mirror_symmetry", mirror);

    // internal division of the center segment in ratio a : b,
    // in cleared form: (d − b)(a + b) = (a − b)·b
    let lhs = &(&cfg.d - &cfg.b) * &(&cfg.a + &cfg.b);
    let rhs = &(&cfg.a - &cfg.b) * &cfg.b;
    push("internal_division", lhs == rhs);

    // right triangle over the half chord h = bc/2: for CB the legs are
    // a − h and a − d (B sits on a radius-a circle centered off axis);
    // for CA the chord belongs to the single outer circle, legs h, a − d
    let right_triangle = (|| -> Result<bool> {
        let h = cfg.bc.try_div(&QNum::from_int(2, rad))?;
        let ad = &cfg.a - &cfg.d;
        let first_leg = match cfg.kind {
            ChainKind::CB => &cfg.a - &h,
            ChainKind::CA => h,
        };
        Ok(&(&first_leg * &first_leg) + &(&ad * &ad) == &cfg.a * &cfg.a)
    })()
    .unwrap_or(false);
    push("right_triangle", right_triangle);

    let factor_i = match cfg.kind {
        ChainKind::CB => cfg.n as i64,
        ChainKind::CA => cfg.n as i64 - 1,
    };
    push("theorem_i", &QNum::from_int(factor_i, rad) * &cfg.d == cfg.bc);

    let two_a = &QNum::from_int(2, rad) * &cfg.a;
    let theorem_ii = match cfg.kind {
        ChainKind::CB => {
            // 2a = ((√n+1)² + 1)·d
            let s = &QNum::one(rad) + &QNum::sqrt_radicand(rad);
            let coeff = &(&s * &s) + &QNum::one(rad);
            two_a == &coeff * &cfg.d
        }
        ChainKind::CA => {
            // 2a = ((n−1)² + 4)·d/4, cleared: 8a = ((n−1)² + 4)·d
            let m = cfg.n as i64 - 1;
            &QNum::from_int(8, rad) * &cfg.a == &QNum::from_int(m * m + 4, rad) * &cfg.d
        }
    };
    push("theorem_ii", theorem_ii);

    VerificationReport { entries }
}

impl ChainConfig {
    pub fn to_json(&self) -> Value {
        json!({
            "kind": self.kind.as_str(),
            "n": self.n,
            "a": self.a.to_json(),
            "b": self.b.to_json(),
            "outer": self.outer.iter().map(Circle::to_json).collect::<Vec<_>>(),
            "chain": self.chain.iter().map(Circle::to_json).collect::<Vec<_>>(),
            "points": {
                "A": self.a_point.to_json(),
                "B": self.b_point.to_json(),
                "C": self.c_point.to_json(),
            },
            "d": self.d.to_json(),
            "bc": self.bc.to_json(),
            "report": verify_config(self).to_json(),
        })
    }

    pub fn from_json(v: &Value) -> Result<ChainConfig> {
        let bad = |what: &str| Error::InvalidParameter(format!("config json missing {what}"));
        let kind = match v.get("kind").and_then(Value::as_str) {
            Some("CB") => ChainKind::CB,
            Some("CA") => ChainKind::CA,
            _ => return Err(bad("kind")),
        };
        let n = v.get("n").and_then(Value::as_u64).ok_or_else(|| bad("n"))? as u32;
        let circles = |key: &str| -> Result<Vec<Circle>> {
            v.get(key)
                .and_then(Value::as_array)
                .ok_or_else(|| bad(key))?
                .iter()
                .map(Circle::from_json)
                .collect()
        };
        let pt = |key: &str| -> Result<Point> {
            Point::from_json(v.pointer(&format!("/points/{key}")).ok_or_else(|| bad(key))?)
        };
        Ok(ChainConfig {
            kind,
            n,
            a: QNum::from_json(v.get("a").ok_or_else(|| bad("a"))?)?,
            b: QNum::from_json(v.get("b").ok_or_else(|| bad("b"))?)?,
            outer: circles("outer")?,
            chain: circles("chain")?,
            a_point: pt("A")?,
            b_point: pt("B")?,
            c_point: pt("C")?,
            d: QNum::from_json(v.get("d").ok_or_else(|| bad("d"))?)?,
            bc: QNum::from_json(v.get("bc").ok_or_else(|| bad("bc"))?)?,
        })
    }
}

impl SquareResult {
    pub fn to_json(&self) -> Value {
        json!({
            "side": self.side.to_json(),
            "A": self.a.to_json(),
            "B": self.b.to_json(),
            "C": self.c.to_json(),
            "D": self.d.to_json(),
        })
    }
}
