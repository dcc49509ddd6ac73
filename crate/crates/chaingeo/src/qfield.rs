//! Exact arithmetic in the quadratic field Q(√n) for a fixed radicand n.
//!
//! A [`QNum`] stores the value `p + q·√n` with arbitrary-precision
//! rational `p`, `q`. Perfect-square radicands are folded into the
//! rational part at construction, so equality is plain structural
//! equality of the fields.

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{Signed, ToPrimitive, Zero};
use serde_json::{json, Value};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always stored reduced with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Parse a rational from `"p"` or `"p/q"` form.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let r = match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| Error::BadRational(s.into()))?;
            let d = BigInt::from_str(d.trim()).map_err(|_| Error::BadRational(s.into()))?;
            if d.is_zero() {
                return Err(Error::BadRational(s.into()));
            }
            Rational::new(n, d)
        }
        None => Rational::from(BigInt::from_str(s).map_err(|_| Error::BadRational(s.into()))?),
    };
    Ok(r)
}

fn rational_str(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Exact square root of a non-negative rational, when it is rational.
fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let sn = r.numer().sqrt();
    let sd = r.denom().sqrt();
    if &(&sn * &sn) == r.numer() && &(&sd * &sd) == r.denom() {
        Some(Rational::new(sn, sd))
    } else {
        None
    }
}

fn perfect_square_root(n: u64) -> Option<u64> {
    let k = n.sqrt();
    if k * k == n { Some(k) } else { None }
}

/// An element `p + q·√radicand` of Q(√radicand).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QNum {
    p: Rational,
    q: Rational,
    radicand: u64,
}

impl QNum {
    /// Canonical constructor: folds `q·√k²` into the rational part when
    /// the radicand is a perfect square.
    pub fn new(p: Rational, q: Rational, radicand: u64) -> Self {
        if let Some(k) = perfect_square_root(radicand) {
            QNum {
                p: p + &q * Rational::from(BigInt::from(k)),
                q: Rational::zero(),
                radicand,
            }
        } else {
            QNum { p, q, radicand }
        }
    }

    pub fn rational(p: Rational, radicand: u64) -> Self {
        QNum::new(p, Rational::zero(), radicand)
    }

    pub fn from_int(v: i64, radicand: u64) -> Self {
        QNum::rational(Rational::from(BigInt::from(v)), radicand)
    }

    pub fn zero(radicand: u64) -> Self {
        QNum::from_int(0, radicand)
    }

    pub fn one(radicand: u64) -> Self {
        QNum::from_int(1, radicand)
    }

    /// The value √radicand itself.
    pub fn sqrt_radicand(radicand: u64) -> Self {
        QNum::new(Rational::zero(), Rational::from(BigInt::from(1)), radicand)
    }

    pub fn p(&self) -> &Rational {
        &self.p
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn radicand(&self) -> u64 {
        self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    /// True when the value lies in Q (no radical part).
    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    /// Re-tag a rational value with another radicand. Values with a
    /// nonzero radical part only accept their own radicand.
    pub fn with_radicand(&self, radicand: u64) -> Result<QNum> {
        if self.radicand == radicand {
            Ok(self.clone())
        } else if self.q.is_zero() {
            Ok(QNum::rational(self.p.clone(), radicand))
        } else {
            Err(Error::RadicandMismatch(self.radicand, radicand))
        }
    }

    fn unify(&self, other: &QNum) -> Result<(QNum, QNum, u64)> {
        if self.radicand == other.radicand {
            return Ok((self.clone(), other.clone(), self.radicand));
        }
        if self.q.is_zero() {
            return Ok((self.with_radicand(other.radicand)?, other.clone(), other.radicand));
        }
        if other.q.is_zero() {
            return Ok((self.clone(), other.with_radicand(self.radicand)?, self.radicand));
        }
        Err(Error::RadicandMismatch(self.radicand, other.radicand))
    }

    pub fn try_add(&self, other: &QNum) -> Result<QNum> {
        let (x, y, n) = self.unify(other)?;
        Ok(QNum::new(x.p + y.p, x.q + y.q, n))
    }

    pub fn try_sub(&self, other: &QNum) -> Result<QNum> {
        let (x, y, n) = self.unify(other)?;
        Ok(QNum::new(x.p - y.p, x.q - y.q, n))
    }

    pub fn try_mul(&self, other: &QNum) -> Result<QNum> {
        let (x, y, n) = self.unify(other)?;
        let nn = Rational::from(BigInt::from(n));
        let p = &x.p * &y.p + &x.q * &y.q * nn;
        let q = &x.p * &y.q + &x.q * &y.p;
        Ok(QNum::new(p, q, n))
    }

    /// Division rationalizes by the conjugate: `(p+q√n)(p−q√n) = p²−q²n`.
    pub fn try_div(&self, other: &QNum) -> Result<QNum> {
        let (x, y, n) = self.unify(other)?;
        if y.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let nn = Rational::from(BigInt::from(n));
        let norm = &y.p * &y.p - &y.q * &y.q * nn;
        if norm.is_zero() {
            // only possible when √n is rational, which canonicalization rules out
            return Err(Error::DivisionByZero);
        }
        let conj = QNum::new(y.p.clone(), -y.q.clone(), n);
        let num = x.try_mul(&conj)?;
        Ok(QNum::new(num.p / &norm, num.q / &norm, n))
    }

    /// Exact sign of the real number `p + q√n`.
    pub fn sign(&self) -> i32 {
        let sp = sign_of(&self.p);
        let sq = sign_of(&self.q);
        if sq == 0 {
            return sp;
        }
        if sp == 0 || sp == sq {
            return sq;
        }
        // opposite signs: compare p² against q²·n
        let nn = Rational::from(BigInt::from(self.radicand));
        let p2 = &self.p * &self.p;
        let q2n = &self.q * &self.q * nn;
        match p2.cmp(&q2n) {
            std::cmp::Ordering::Greater => sp,
            std::cmp::Ordering::Less => sq,
            std::cmp::Ordering::Equal => 0,
        }
    }

    /// Principal square root within Q(√n), when one exists.
    ///
    /// Writing the root as `u + v√n` gives the system `u² + v²n = p`,
    /// `2uv = q`; eliminating `v` leaves a biquadratic in `u` whose
    /// rational roots are the only candidates.
    pub fn sqrt(&self) -> Result<Option<QNum>> {
        if self.sign() < 0 {
            return Err(Error::NegativeSqrt);
        }
        let n = self.radicand;
        let nn = Rational::from(BigInt::from(n));
        if self.q.is_zero() {
            if let Some(u) = rational_sqrt(&self.p) {
                return Ok(Some(QNum::rational(u, n)));
            }
            if n > 0 && perfect_square_root(n).is_none() {
                // pure radical part: p = v²n
                if let Some(v) = rational_sqrt(&(&self.p / &nn)) {
                    return Ok(Some(QNum::new(Rational::zero(), v, n)));
                }
            }
            return Ok(None);
        }
        // q ≠ 0 implies n is not a perfect square
        let disc = &self.p * &self.p - &self.q * &self.q * &nn;
        let t = match rational_sqrt(&disc) {
            Some(t) => t,
            None => return Ok(None),
        };
        let half = Rational::new(BigInt::from(1), BigInt::from(2));
        for u2 in [(&self.p + &t) * &half, (&self.p - &t) * &half] {
            if u2.is_negative() || u2.is_zero() {
                continue;
            }
            if let Some(u) = rational_sqrt(&u2) {
                let v = &self.q / (Rational::from(BigInt::from(2)) * &u);
                let root = QNum::new(u, v, n);
                let root = if root.sign() < 0 { -&root } else { root };
                debug_assert_eq!(root.try_mul(&root).unwrap(), *self);
                return Ok(Some(root));
            }
        }
        Ok(None)
    }

    /// Double-precision evaluation of `p + q√n`.
    pub fn to_f64(&self) -> f64 {
        let p = self.p.to_f64().unwrap_or(f64::NAN);
        if self.q.is_zero() {
            return p;
        }
        p + self.q.to_f64().unwrap_or(f64::NAN) * (self.radicand as f64).sqrt()
    }

    /// JSON form: exact rational strings plus a convenience decimal.
    pub fn to_json(&self) -> Value {
        json!({
            "p": rational_str(&self.p),
            "q": rational_str(&self.q),
            "radicand": self.radicand,
            "decimal": format!("{:.14e}", self.to_f64()),
        })
    }

    pub fn from_json(v: &Value) -> Result<QNum> {
        let bad = || Error::BadRational(v.to_string());
        let p = parse_rational(v.get("p").and_then(Value::as_str).ok_or_else(bad)?)?;
        let q = parse_rational(v.get("q").and_then(Value::as_str).ok_or_else(bad)?)?;
        let radicand = v.get("radicand").and_then(Value::as_u64).ok_or_else(bad)?;
        Ok(QNum::new(p, q, radicand))
    }
}

fn sign_of(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl fmt::Display for QNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q.is_zero() {
            return write!(f, "{}", self.p);
        }
        if self.p.is_zero() {
            return write!(f, "{}√{}", self.q, self.radicand);
        }
        if self.q.is_negative() {
            write!(f, "{} - {}√{}", self.p, -&self.q, self.radicand)
        } else {
            write!(f, "{} + {}√{}", self.p, self.q, self.radicand)
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for &QNum {
            type Output = QNum;
            fn $method(self, rhs: &QNum) -> QNum {
                self.$checked(rhs).expect(concat!("QNum ", stringify!($method)))
            }
        }
        impl $trait for QNum {
            type Output = QNum;
            fn $method(self, rhs: QNum) -> QNum {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);
forward_binop!(Div, div, try_div);

impl Neg for &QNum {
    type Output = QNum;
    fn neg(self) -> QNum {
        QNum::new(-self.p.clone(), -self.q.clone(), self.radicand)
    }
}

impl Neg for QNum {
    type Output = QNum;
    fn neg(self) -> QNum {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: (i64, i64), q_: (i64, i64), n: u64) -> QNum {
        QNum::new(
            Rational::new(BigInt::from(p.0), BigInt::from(p.1)),
            Rational::new(BigInt::from(q_.0), BigInt::from(q_.1)),
            n,
        )
    }

    #[test]
    fn conjugate_sum() {
        let x = q((1, 2), (1, 1), 2);
        let y = q((1, 2), (-1, 1), 2);
        assert_eq!(&x + &y, QNum::one(2));
    }

    #[test]
    fn difference_of_squares() {
        let x = q((1, 1), (1, 1), 2);
        let y = q((1, 1), (-1, 1), 2);
        assert_eq!(&x * &y, QNum::from_int(-1, 2));
    }

    #[test]
    fn div_rationalizes() {
        let one = QNum::one(2);
        let d = q((1, 1), (1, 1), 2);
        let r = one.try_div(&d).unwrap();
        assert_eq!(r, q((-1, 1), (1, 1), 2));
        assert_eq!(&r * &d, QNum::one(2));
    }

    #[test]
    fn div_by_zero() {
        assert!(matches!(
            QNum::one(2).try_div(&QNum::zero(2)),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn radicand_mismatch() {
        let x = q((1, 1), (1, 1), 2);
        let y = q((1, 1), (1, 1), 3);
        assert!(matches!(x.try_add(&y), Err(Error::RadicandMismatch(2, 3))));
        // rational values adopt the partner's radicand
        let r = QNum::from_int(2, 3);
        assert_eq!(x.try_add(&r).unwrap(), q((3, 1), (1, 1), 2));
    }

    #[test]
    fn sign_cases() {
        assert_eq!(q((3, 1), (-2, 1), 2).sign(), 1); // 9 > 8
        assert_eq!(q((1, 1), (-1, 1), 2).sign(), -1); // 1 < 2
        assert_eq!(QNum::zero(5).sign(), 0);
        assert_eq!(q((-3, 1), (2, 1), 2).sign(), -1);
        assert_eq!(q((-1, 1), (1, 1), 2).sign(), 1);
    }

    #[test]
    fn sqrt_examples() {
        // (√2 − 1)² = 3 − 2√2
        let x = q((3, 1), (-2, 1), 2);
        assert_eq!(x.sqrt().unwrap().unwrap(), q((-1, 1), (1, 1), 2));
        // rational square
        let y = q((9, 4), (0, 1), 5);
        assert_eq!(y.sqrt().unwrap().unwrap(), q((3, 2), (0, 1), 5));
        // pure radical: (√2)² = 2
        let z = QNum::from_int(2, 2);
        assert_eq!(z.sqrt().unwrap().unwrap(), QNum::sqrt_radicand(2));
        // negative input
        assert!(matches!(QNum::from_int(-1, 2).sqrt(), Err(Error::NegativeSqrt)));
    }

    #[test]
    fn sqrt_no_root_in_field() {
        // oracle: the candidate biquadratic for 1 + √2 has no rational
        // root, checked here by direct enumeration over small candidates
        let x = q((1, 1), (1, 1), 2);
        assert_eq!(x.sqrt().unwrap(), None);
        // discriminant p² − q²n = −1 < 0 has no rational square root,
        // which is exactly why the enumeration comes up empty
        assert!(rational_sqrt(&Rational::from(BigInt::from(-1))).is_none());
    }

    #[test]
    fn to_float() {
        let x = q((3, 1), (-2, 1), 2);
        assert!((x.to_f64() - 0.17157287525381).abs() < 1e-12);
        assert_eq!(q((1, 4), (0, 1), 1).to_f64(), 0.25);
        // canonicalization folds √4 = 2 into p
        let y = q((0, 1), (1, 1), 4);
        assert_eq!(y.to_f64(), 2.0);
        assert!(y.is_rational());
    }

    #[test]
    fn canonical_idempotence() {
        let x = q((1, 2), (3, 5), 7);
        let y = QNum::new(x.p().clone(), x.q().clone(), x.radicand());
        assert_eq!(x, y);
    }

    #[test]
    fn json_round_trip() {
        let x = q((-7, 3), (2, 9), 5);
        let v = x.to_json();
        assert_eq!(QNum::from_json(&v).unwrap(), x);
        assert_eq!(v["radicand"], 5);
    }

    #[test]
    fn parse_rational_forms() {
        assert_eq!(parse_rational("3/6").unwrap(), Rational::new(BigInt::from(1), BigInt::from(2)));
        assert_eq!(parse_rational("-4").unwrap(), Rational::from(BigInt::from(-4)));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
