//! Circles and points over exact Q(√n) coordinates.
//!
//! The common tangent line is fixed as the axis `y = 0` with every
//! circle above it, so tangency to the line and tangency between
//! circles are both coordinate identities. All metric predicates
//! compare squared quantities; no radical is ever extracted here.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::qfield::QNum;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Point {
    pub x: QNum,
    pub y: QNum,
}

impl Point {
    pub fn new(x: QNum, y: QNum) -> Self {
        Point { x, y }
    }

    /// Squared distance to another point.
    pub fn dist_sq(&self, other: &Point) -> QNum {
        let dx = &self.x - &other.x;
        let dy = &self.y - &other.y;
        &(&dx * &dx) + &(&dy * &dy)
    }

    pub fn to_json(&self) -> Value {
        json!({ "x": self.x.to_json(), "y": self.y.to_json() })
    }

    pub fn from_json(v: &Value) -> Result<Point> {
        let bad = || Error::BadRational(v.to_string());
        Ok(Point {
            x: QNum::from_json(v.get("x").ok_or_else(bad)?)?,
            y: QNum::from_json(v.get("y").ok_or_else(bad)?)?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circle {
    pub center: Point,
    pub r: QNum,
}

impl Circle {
    pub fn new(center: Point, r: QNum) -> Result<Self> {
        if r.sign() != 1 {
            return Err(Error::InvalidParameter("circle radius must be positive".into()));
        }
        Ok(Circle { center, r })
    }

    /// Exact on-circle test in squared form.
    pub fn contains(&self, p: &Point) -> bool {
        self.center.dist_sq(p) == &self.r * &self.r
    }

    pub fn to_json(&self) -> Value {
        json!({ "cx": self.center.x.to_json(), "cy": self.center.y.to_json(), "r": self.r.to_json() })
    }

    pub fn from_json(v: &Value) -> Result<Circle> {
        let bad = || Error::BadRational(v.to_string());
        Circle::new(
            Point {
                x: QNum::from_json(v.get("cx").ok_or_else(bad)?)?,
                y: QNum::from_json(v.get("cy").ok_or_else(bad)?)?,
            },
            QNum::from_json(v.get("r").ok_or_else(bad)?)?,
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tangency {
    External,
    Internal,
    None,
}

/// Classify the contact between two circles, exactly.
///
/// External iff dist²(centers) = (r₁+r₂)², internal iff it equals
/// (r₁−r₂)² with r₁ ≠ r₂. Coincident circles have no defined contact.
pub fn tangency_kind(c1: &Circle, c2: &Circle) -> Result<Tangency> {
    if c1.center == c2.center && c1.r == c2.r {
        return Err(Error::CoincidentCircles);
    }
    let d2 = c1.center.dist_sq(&c2.center);
    let sum = &c1.r + &c2.r;
    if d2 == &sum * &sum {
        return Ok(Tangency::External);
    }
    let diff = &c1.r - &c2.r;
    if !diff.is_zero() && d2 == &diff * &diff {
        return Ok(Tangency::Internal);
    }
    Ok(Tangency::None)
}

/// The single common point of two externally tangent circles: it divides
/// the center segment internally in the ratio r₁ : r₂.
pub fn tangency_point(c1: &Circle, c2: &Circle) -> Result<Point> {
    if tangency_kind(c1, c2)? != Tangency::External {
        return Err(Error::NotTangent);
    }
    let t = c1.r.try_div(&(&c1.r + &c2.r))?;
    let p = Point {
        x: &c1.center.x + &(&t * &(&c2.center.x - &c1.center.x)),
        y: &c1.center.y + &(&t * &(&c2.center.y - &c1.center.y)),
    };
    debug_assert!(c1.contains(&p) && c2.contains(&p));
    Ok(p)
}

/// True iff the circle touches the baseline `y = 0` from above.
pub fn touches_baseline(c: &Circle) -> bool {
    c.center.y == c.r
}

/// Orthogonal projection onto the baseline.
pub fn foot_on_baseline(p: &Point) -> Point {
    Point {
        x: p.x.clone(),
        y: QNum::zero(p.y.radicand()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qfield::Rational;
    use num_bigint::BigInt;

    fn qn(n: i64, d: i64) -> QNum {
        QNum::rational(Rational::new(BigInt::from(n), BigInt::from(d)), 1)
    }

    fn circle(cx: (i64, i64), cy: (i64, i64), r: (i64, i64)) -> Circle {
        Circle::new(Point::new(qn(cx.0, cx.1), qn(cy.0, cy.1)), qn(r.0, r.1)).unwrap()
    }

    #[test]
    fn external_tangency() {
        let a1 = circle((-1, 1), (1, 1), (1, 1));
        let a2 = circle((1, 1), (1, 1), (1, 1));
        assert_eq!(tangency_kind(&a1, &a2).unwrap(), Tangency::External);
        // incircle of the curvilinear triangle touches both outer circles
        let inc = circle((0, 1), (1, 4), (1, 4));
        assert_eq!(tangency_kind(&inc, &a1).unwrap(), Tangency::External);
    }

    #[test]
    fn concentric_is_none_and_coincident_errors() {
        let c1 = circle((0, 1), (0, 1), (1, 1));
        let c2 = circle((0, 1), (0, 1), (2, 1));
        assert_eq!(tangency_kind(&c1, &c2).unwrap(), Tangency::None);
        assert!(matches!(tangency_kind(&c1, &c1), Err(Error::CoincidentCircles)));
    }

    #[test]
    fn internal_tangency() {
        let big = circle((0, 1), (0, 1), (2, 1));
        let small = circle((1, 1), (0, 1), (1, 1));
        assert_eq!(tangency_kind(&big, &small).unwrap(), Tangency::Internal);
    }

    #[test]
    fn tangency_point_ratio() {
        // α₂ against the incircle: division in ratio 1 : 1/4
        let a2 = circle((1, 1), (1, 1), (1, 1));
        let b1 = circle((0, 1), (1, 4), (1, 4));
        let p = tangency_point(&a2, &b1).unwrap();
        assert_eq!(p, Point::new(qn(1, 5), qn(2, 5)));
        // midpoint by symmetry
        let u1 = circle((0, 1), (1, 1), (1, 1));
        let u2 = circle((2, 1), (1, 1), (1, 1));
        assert_eq!(tangency_point(&u1, &u2).unwrap(), Point::new(qn(1, 1), qn(1, 1)));
        // radii 3 and 1: three quarters of the way along
        let c1 = circle((0, 1), (3, 1), (3, 1));
        let c2 = circle((4, 1), (3, 1), (1, 1));
        assert_eq!(tangency_point(&c1, &c2).unwrap(), Point::new(qn(3, 1), qn(3, 1)));
    }

    #[test]
    fn tangency_point_rejects_non_tangent() {
        let c1 = circle((0, 1), (1, 1), (1, 1));
        let c2 = circle((5, 1), (1, 1), (1, 1));
        assert!(matches!(tangency_point(&c1, &c2), Err(Error::NotTangent)));
    }

    #[test]
    fn baseline_predicates() {
        assert!(touches_baseline(&circle((0, 1), (1, 4), (1, 4))));
        assert!(touches_baseline(&circle((-1, 1), (1, 1), (1, 1))));
        assert!(!touches_baseline(&circle((0, 1), (2, 1), (1, 1))));
        let p = Point::new(qn(1, 5), qn(2, 5));
        assert_eq!(foot_on_baseline(&p), Point::new(qn(1, 5), qn(0, 1)));
    }
}
