//! Exact scalar arithmetic with a floating-point filter.
//!
//! Every [`Real`] carries an exact big-rational value together with an f64
//! interval that is guaranteed to bracket it. Comparisons are decided by the
//! interval when it is conclusive and fall back to the exact value otherwise,
//! so predicates built on `Real` are exact while staying near float speed on
//! generic inputs. Floats leave this module only for reporting.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

pub type BigRat = BigRational;

/// Closed f64 interval with outward rounding. `lo <= hi` always; infinities
/// mark an unbounded side.
#[derive(Debug, Clone, Copy)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub const UNBOUNDED: Interval = Interval {
        lo: f64::NEG_INFINITY,
        hi: f64::INFINITY,
    };

    #[inline]
    pub fn point(v: f64) -> Interval {
        Interval { lo: v, hi: v }
    }

    #[inline]
    fn widen(lo: f64, hi: f64) -> Interval {
        if lo.is_nan() || hi.is_nan() {
            return Interval::UNBOUNDED;
        }
        Interval {
            lo: lo.next_down(),
            hi: hi.next_up(),
        }
    }

    #[inline]
    pub fn add(self, o: Interval) -> Interval {
        Interval::widen(self.lo + o.lo, self.hi + o.hi)
    }

    #[inline]
    pub fn sub(self, o: Interval) -> Interval {
        Interval::widen(self.lo - o.hi, self.hi - o.lo)
    }

    #[inline]
    pub fn mul(self, o: Interval) -> Interval {
        let a = self.lo * o.lo;
        let b = self.lo * o.hi;
        let c = self.hi * o.lo;
        let d = self.hi * o.hi;
        Interval::widen(a.min(b).min(c.min(d)), a.max(b).max(c.max(d)))
    }

    #[inline]
    pub fn div(self, o: Interval) -> Interval {
        if o.lo <= 0.0 && o.hi >= 0.0 {
            return Interval::UNBOUNDED;
        }
        let a = self.lo / o.lo;
        let b = self.lo / o.hi;
        let c = self.hi / o.lo;
        let d = self.hi / o.hi;
        Interval::widen(a.min(b).min(c.min(d)), a.max(b).max(c.max(d)))
    }

    #[inline]
    pub fn neg(self) -> Interval {
        Interval {
            lo: -self.hi,
            hi: -self.lo,
        }
    }

    /// Sign if conclusive: `1` strictly positive, `-1` strictly negative,
    /// `0` the interval is exactly `[0, 0]`.
    #[inline]
    pub fn sign(self) -> Option<i32> {
        if self.lo > 0.0 {
            Some(1)
        } else if self.hi < 0.0 {
            Some(-1)
        } else if self.lo == 0.0 && self.hi == 0.0 {
            Some(0)
        } else {
            None
        }
    }

    #[inline]
    pub fn cmp_iv(self, o: Interval) -> Option<Ordering> {
        if self.hi < o.lo {
            Some(Ordering::Less)
        } else if self.lo > o.hi {
            Some(Ordering::Greater)
        } else if self.lo == self.hi && o.lo == o.hi && self.lo == o.lo {
            Some(Ordering::Equal)
        } else {
            None
        }
    }
}

/// Exact rational scalar with a bracketing f64 interval.
#[derive(Clone)]
pub struct Real {
    exact: BigRat,
    iv: Interval,
}

impl Real {
    pub fn zero() -> Real {
        Real {
            exact: BigRat::zero(),
            iv: Interval::point(0.0),
        }
    }

    pub fn from_int(v: i64) -> Real {
        let iv = if v.abs() < (1i64 << 52) {
            Interval::point(v as f64)
        } else {
            Interval::widen(v as f64, v as f64)
        };
        Real {
            exact: BigRat::from_integer(BigInt::from(v)),
            iv,
        }
    }

    /// Exact value of an f64 (must be finite).
    pub fn from_f64(v: f64) -> Real {
        assert!(v.is_finite(), "non-finite f64 has no exact rational value");
        Real {
            exact: BigRat::from_f64(v).expect("finite f64 is rational"),
            iv: Interval::point(v),
        }
    }

    pub fn from_rat(r: BigRat) -> Real {
        let approx = rat_to_f64(&r);
        let mut lo = if approx.is_finite() {
            approx.next_down()
        } else {
            f64::NEG_INFINITY
        };
        let mut hi = if approx.is_finite() {
            approx.next_up()
        } else {
            f64::INFINITY
        };
        // Verify the bracket; `rat_to_f64` should be within 1 ulp but the
        // interval must hold unconditionally.
        while lo.is_finite() {
            match BigRat::from_f64(lo) {
                Some(l) if l <= r => break,
                _ => lo = lo.next_down(),
            }
        }
        while hi.is_finite() {
            match BigRat::from_f64(hi) {
                Some(h) if h >= r => break,
                _ => hi = hi.next_up(),
            }
        }
        Real {
            exact: r,
            iv: Interval { lo, hi },
        }
    }

    /// Parse a plain decimal literal (`-12.0625`, `3`, `.5`) exactly.
    pub fn parse_decimal(s: &str) -> Option<Real> {
        let s = s.trim();
        if s.is_empty() {
            return None;
        }
        let (sign, body) = match s.as_bytes()[0] {
            b'-' => (-1, &s[1..]),
            b'+' => (1, &s[1..]),
            _ => (1, s),
        };
        if body.is_empty() {
            return None;
        }
        let (int_part, frac_part) = match body.find('.') {
            Some(i) => (&body[..i], &body[i + 1..]),
            None => (body, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return None;
        }
        if !int_part.bytes().all(|b| b.is_ascii_digit())
            || !frac_part.bytes().all(|b| b.is_ascii_digit())
        {
            return None;
        }
        let digits: String = format!("{}{}", int_part, frac_part);
        let num: BigInt = digits.parse().ok()?;
        let den = BigInt::from(10u32).pow(frac_part.len() as u32);
        let r = BigRat::new(num * BigInt::from(sign), den);
        Some(Real::from_rat(r))
    }

    pub fn exact(&self) -> &BigRat {
        &self.exact
    }

    pub fn interval(&self) -> Interval {
        self.iv
    }

    /// f64 approximation, for reporting only.
    pub fn to_f64(&self) -> f64 {
        rat_to_f64(&self.exact)
    }

    /// Exact decimal rendering when the denominator is of the form 2^a·5^b,
    /// otherwise `None`.
    pub fn to_decimal_string(&self) -> Option<String> {
        let mut den = self.exact.denom().clone();
        let num = self.exact.numer().clone();
        let two = BigInt::from(2u32);
        let five = BigInt::from(5u32);
        let mut a = 0u32;
        let mut b = 0u32;
        while (&den % &two).is_zero() {
            den /= &two;
            a += 1;
        }
        while (&den % &five).is_zero() {
            den /= &five;
            b += 1;
        }
        if den != BigInt::from(1u32) {
            return None;
        }
        // Scale numerator so the denominator becomes 10^k.
        let k = a.max(b);
        let scale = two.pow(k - a) * five.pow(k - b);
        let scaled = (num * scale).abs();
        let neg = self.exact.is_negative();
        let s = scaled.to_string();
        let k = k as usize;
        let txt = if k == 0 {
            s
        } else if s.len() <= k {
            format!("0.{}{}", "0".repeat(k - s.len()), s)
        } else {
            format!("{}.{}", &s[..s.len() - k], &s[s.len() - k..])
        };
        let txt = if txt.contains('.') {
            txt.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            txt
        };
        let txt = if txt.is_empty() { "0".to_string() } else { txt };
        Some(if neg && txt != "0" {
            format!("-{}", txt)
        } else {
            txt
        })
    }

    #[inline]
    pub fn sign(&self) -> i32 {
        match self.iv.sign() {
            Some(s) => s,
            None => {
                if self.exact.is_zero() {
                    0
                } else if self.exact.is_positive() {
                    1
                } else {
                    -1
                }
            }
        }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.sign() == 0
    }

    pub fn abs(&self) -> Real {
        if self.sign() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    pub fn square(&self) -> Real {
        self * self
    }

    pub fn min_of(a: Real, b: Real) -> Real {
        if a <= b {
            a
        } else {
            b
        }
    }

    pub fn max_of(a: Real, b: Real) -> Real {
        if a >= b {
            a
        } else {
            b
        }
    }
}

fn rat_to_f64(r: &BigRat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}≈{}", self.exact, self.to_f64())
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_decimal_string() {
            Some(s) => write!(f, "{}", s),
            None => write!(f, "{}", self.exact),
        }
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Real {}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Real {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.iv.cmp_iv(other.iv) {
            Some(o) => o,
            None => self.exact.cmp(&other.exact),
        }
    }
}

macro_rules! real_binop {
    ($trait:ident, $m:ident, $ivm:ident) => {
        impl $trait for &Real {
            type Output = Real;
            fn $m(self, rhs: &Real) -> Real {
                Real {
                    exact: (&self.exact).$m(&rhs.exact),
                    iv: self.iv.$ivm(rhs.iv),
                }
            }
        }
        impl $trait for Real {
            type Output = Real;
            fn $m(self, rhs: Real) -> Real {
                (&self).$m(&rhs)
            }
        }
        impl $trait<&Real> for Real {
            type Output = Real;
            fn $m(self, rhs: &Real) -> Real {
                (&self).$m(rhs)
            }
        }
        impl $trait<Real> for &Real {
            type Output = Real;
            fn $m(self, rhs: Real) -> Real {
                self.$m(&rhs)
            }
        }
    };
}

real_binop!(Add, add, add);
real_binop!(Sub, sub, sub);
real_binop!(Mul, mul, mul);

impl Div for &Real {
    type Output = Real;
    fn div(self, rhs: &Real) -> Real {
        assert!(!rhs.exact.is_zero(), "division by zero Real");
        Real {
            exact: &self.exact / &rhs.exact,
            iv: self.iv.div(rhs.iv),
        }
    }
}
impl Div for Real {
    type Output = Real;
    fn div(self, rhs: Real) -> Real {
        (&self) / (&rhs)
    }
}
impl Div<&Real> for Real {
    type Output = Real;
    fn div(self, rhs: &Real) -> Real {
        (&self) / rhs
    }
}
impl Div<Real> for &Real {
    type Output = Real;
    fn div(self, rhs: Real) -> Real {
        self / (&rhs)
    }
}

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real {
            exact: -(&self.exact),
            iv: self.iv.neg(),
        }
    }
}
impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        -(&self)
    }
}

impl From<i64> for Real {
    fn from(v: i64) -> Real {
        Real::from_int(v)
    }
}

impl From<i32> for Real {
    fn from(v: i32) -> Real {
        Real::from_int(v as i64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_decimal_exact() {
        let r = Real::parse_decimal("-12.0625").unwrap();
        assert_eq!(r, Real::from_f64(-12.0625));
        assert_eq!(r.to_decimal_string().unwrap(), "-12.0625");
        let r = Real::parse_decimal("0.1").unwrap();
        // 0.1 is not an f64; ten of them must sum to exactly one.
        let mut s = Real::zero();
        for _ in 0..10 {
            s = s + r.clone();
        }
        assert_eq!(s, Real::from_int(1));
        assert!(Real::parse_decimal("").is_none());
        assert!(Real::parse_decimal("1.2.3").is_none());
        assert!(Real::parse_decimal("abc").is_none());
    }

    #[test]
    fn interval_brackets_exact() {
        let a = Real::parse_decimal("0.1").unwrap();
        let b = Real::parse_decimal("0.3").unwrap();
        let c = &a + &a + &a - &b; // exactly zero
        assert_eq!(c.sign(), 0);
        assert!(c.iv.lo <= 0.0 && c.iv.hi >= 0.0);
    }

    #[test]
    fn ordering_mixes_filter_and_exact() {
        let tiny = Real::from_rat(BigRat::new(BigInt::from(1), BigInt::from(10u64).pow(30)));
        let zero = Real::zero();
        assert!(tiny > zero);
        assert!((&tiny - &tiny).is_zero());
        assert!(Real::from_int(3) < Real::from_int(4));
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(Real::from_int(5).to_decimal_string().unwrap(), "5");
        let third = Real::from_rat(BigRat::new(BigInt::from(1), BigInt::from(3)));
        assert!(third.to_decimal_string().is_none());
        let r = Real::parse_decimal("2.50").unwrap();
        assert_eq!(r.to_decimal_string().unwrap(), "2.5");
    }
}
